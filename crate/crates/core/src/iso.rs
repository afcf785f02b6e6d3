//! Small-graph isomorphism: colour refinement followed by backtracking.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for [`graphs_isomorphic`].
pub const ISO_CAP: usize = 12;

/// Vertex cap for [`canonical_code`]; the code packs the upper triangle of
/// the adjacency matrix into one `u64`.
pub const CANONICAL_CAP: usize = 11;

/// Joint colour refinement over several graphs. Colours are comparable across
/// the inputs: equal colours mean equal refined degree signatures.
pub(crate) fn refine_jointly(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|g| (0..g.n()).map(|v| g.degree(v)).collect())
        .collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, col)| {
                (0..g.n())
                    .map(|v| {
                        let mut around: Vec<usize> = g.neighbors(v).iter().map(|w| col[w]).collect();
                        around.sort_unstable();
                        (col[v], around)
                    })
                    .collect()
            })
            .collect();
        let mut all: Vec<&(usize, Vec<usize>)> = sigs.iter().flatten().collect();
        all.sort();
        all.dedup();
        let next: Vec<Vec<usize>> = sigs
            .iter()
            .map(|per| {
                per.iter()
                    .map(|s| all.binary_search(&s).expect("signature present"))
                    .collect()
            })
            .collect();
        let count = all.len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

/// Decides `g1 ≅ g2` for graphs of at most [`ISO_CAP`] vertices. On success
/// the witness maps each vertex of `g1` to its image in `g2`.
pub fn graphs_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    graphs_isomorphic_with_cap(g1, g2, ISO_CAP)
}

pub fn graphs_isomorphic_with_cap(g1: &Graph, g2: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    for g in [g1, g2] {
        if g.n() > cap {
            return Err(Error::SizeLimitExceeded {
                what: "isomorphism test",
                size: g.n(),
                cap,
            });
        }
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let colors = refine_jointly(&[g1, g2]);
    let (c1, c2) = (&colors[0], &colors[1]);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Ok(None);
    }

    // Map rarest colour classes first; ties by label.
    let class_size = |c: usize| c1.iter().filter(|&&x| x == c).count();
    let mut order: Vec<usize> = (0..g1.n()).collect();
    order.sort_by_key(|&v| (class_size(c1[v]), v));

    let mut map = vec![usize::MAX; g1.n()];
    let mut used = VertexSet::new();
    if extend(g1, g2, c1, c2, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..g2.n() {
        if used.contains(w) || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(v, u) == g2.has_edge(w, map[u]));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    false
}

/// Isomorphism-invariant code: two graphs of at most [`CANONICAL_CAP`]
/// vertices get equal codes exactly when they are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub n: u8,
    pub bits: u64,
}

/// Minimum adjacency code over all vertex orders that list refined colour
/// classes in increasing colour order. Exponential in class sizes; meant for
/// the tiny graphs of exhaustive sweeps.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    if g.n() > CANONICAL_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "canonical code",
            size: g.n(),
            cap: CANONICAL_CAP,
        });
    }
    let colors = refine_jointly(&[g]).pop().unwrap_or_default();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut distinct: Vec<usize> = colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for c in distinct {
        classes.push((0..g.n()).filter(|&v| colors[v] == c).collect());
    }
    let mut best = u64::MAX;
    let mut placed = Vec::with_capacity(g.n());
    search_code(g, &classes, 0, VertexSet::new(), &mut placed, &mut best);
    Ok(CanonicalCode {
        n: g.n() as u8,
        bits: best,
    })
}

fn pair_bit(a: usize, b: usize) -> u32 {
    // Pairs (a, b) with a < b enumerated column by column: (0,1),(0,2),(1,2),...
    (b * (b - 1) / 2 + a) as u32
}

fn search_code(
    g: &Graph,
    classes: &[Vec<usize>],
    class_idx: usize,
    used_in_class: VertexSet,
    placed: &mut Vec<usize>,
    best: &mut u64,
) {
    if placed.len() == g.n() {
        let mut code = 0u64;
        for b in 1..placed.len() {
            for a in 0..b {
                if g.has_edge(placed[a], placed[b]) {
                    code |= 1u64 << pair_bit(a, b);
                }
            }
        }
        if code < *best {
            *best = code;
        }
        return;
    }
    let class = &classes[class_idx];
    if used_in_class.len() == class.len() {
        search_code(g, classes, class_idx + 1, VertexSet::new(), placed, best);
        return;
    }
    for &v in class {
        if used_in_class.contains(v) {
            continue;
        }
        placed.push(v);
        let mut next = used_in_class;
        next.insert(v);
        search_code(g, classes, class_idx, next, placed, best);
        placed.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: usize, n: usize) -> Graph {
        let edges = (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b)));
        Graph::from_edges(m + n, edges).unwrap()
    }

    #[test]
    fn four_cycle_is_k22() {
        let map = graphs_isomorphic(&Graph::cycle(4), &k(2, 2)).unwrap().unwrap();
        let c4 = Graph::cycle(4);
        for (u, v) in c4.edges() {
            assert!(k(2, 2).has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn claw_is_not_a_path() {
        assert_eq!(graphs_isomorphic(&k(1, 3), &Graph::path(4)).unwrap(), None);
    }

    #[test]
    fn cap_enforced() {
        let big = Graph::empty(13);
        assert!(matches!(
            graphs_isomorphic(&big, &big),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C6 and two triangles: same degree sequence, refinement cannot split.
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(graphs_isomorphic(&Graph::cycle(6), &two_triangles).unwrap(), None);
        assert_ne!(
            canonical_code(&Graph::cycle(6)).unwrap(),
            canonical_code(&two_triangles).unwrap()
        );
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let p = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&p).unwrap(), canonical_code(&Graph::path(4)).unwrap());
        assert_ne!(canonical_code(&p).unwrap(), canonical_code(&k(1, 3)).unwrap());
    }
}
