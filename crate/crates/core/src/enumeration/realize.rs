//! Search for a digraph whose phylogeny graph is a given graph.

use crate::error::{Error, Result};
use crate::forbidden::{contains_induced, PATTERN_CAP};
use crate::graph::{DegreeBounds, Digraph, Graph};
use crate::iso::graphs_isomorphic;
use crate::phylogeny::phylogeny_unchecked;

use super::staircase::{check_cap, par_find_first};

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().iter().map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Finds a `bounds` digraph `D` on `|G| + extra` vertices with `G` as an
/// induced subgraph of `P(D)`, the copy sitting on labels `0..|G|`.
/// With `extra = 0` this asks for `P(D) = G` exactly. `Ok(None)` means no
/// such digraph exists with that many vertices.
pub fn realize(g: &Graph, bounds: DegreeBounds, extra: usize) -> Result<Option<Digraph>> {
    let k = g.n();
    let n = k + extra;
    check_cap(n)?;
    if extra == 0 {
        let edges = g.edge_count();
        let profile = degree_profile(g);
        let found = par_find_first(n, bounds, |d| {
            let p = phylogeny_unchecked(d);
            if p.edge_count() != edges || degree_profile(&p) != profile {
                return None;
            }
            graphs_isomorphic(&p, g)
                .ok()
                .flatten()
                .map(|m| d.relabel(&m).expect("bijection"))
        });
        return found;
    }
    if k > PATTERN_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "induced realization target",
            size: k,
            cap: PATTERN_CAP,
        });
    }
    par_find_first(n, bounds, |d| {
        let p = phylogeny_unchecked(d);
        let emb = contains_induced(&p, g).ok().flatten()?;
        let mut perm = vec![usize::MAX; n];
        for (t, &v) in emb.iter().enumerate() {
            perm[v] = t;
        }
        for (slot, next) in perm.iter_mut().filter(|s| **s == usize::MAX).zip(k..) {
            *slot = next;
        }
        Some(d.relabel(&perm).expect("bijection"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phylogeny::phylogeny_graph;

    fn b(i: usize, j: usize) -> DegreeBounds {
        DegreeBounds::new(i, j).unwrap()
    }

    #[test]
    fn exact_realization_matches_labels() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let d = realize(&g, b(2, 2), 0).unwrap().unwrap();
        assert_eq!(phylogeny_graph(&d).unwrap(), g);
        assert!(d.satisfies(b(2, 2)));
    }

    #[test]
    fn four_cycle_needs_hidden_vertices() {
        let c4 = Graph::cycle(4);
        assert!(realize(&c4, b(2, 2), 0).unwrap().is_none());
        let d = realize(&c4, b(2, 2), 1).unwrap().unwrap();
        let (sub, _) = phylogeny_graph(&d).unwrap().induced(&(0..4).collect()).unwrap();
        assert_eq!(sub, c4);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::path(5);
        assert!(matches!(realize(&g, b(1, 1), 40), Err(Error::CapExceeded { .. })));
    }
}
