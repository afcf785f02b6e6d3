//! Cross-checks against slow, obviously-correct reimplementations.

use std::collections::{BTreeSet, HashSet};

use phylo::chordality::{holes, is_chordal, max_clique, max_independent_within};
use phylo::enumeration::{count_staircase, Staircase};
use phylo::forbidden::contains_induced;
use phylo::hole_analysis::{extend_path_to_hole_in_section, Cycle};
use phylo::phylogeny::phylogeny_graph;
use phylo::{DegreeBounds, Digraph, Error, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn b(i: usize, j: usize) -> DegreeBounds {
    DegreeBounds::new(i, j).unwrap()
}

fn naive_phylogeny(n: usize, arcs: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in arcs {
        adj[u][v] = true;
    }
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in 0..n {
            if u >= v {
                continue;
            }
            if adj[u][v] || adj[v][u] {
                out.insert((u, v));
            }
            if (0..n).any(|w| adj[u][w] && adj[v][w]) {
                out.insert((u, v));
            }
        }
    }
    out
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Vertex sets of size >= 4 whose induced subgraph is a single cycle.
fn induced_cycle_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let deg2 = s.iter().all(|&v| s.iter().filter(|&&w| g.has_edge(v, w)).count() == 2);
        if !deg2 {
            continue;
        }
        // Walk from the first vertex; a single cycle visits all of s.
        let (mut prev, mut cur, mut seen) = (usize::MAX, s[0], 1);
        loop {
            let next = *s.iter().find(|&&w| w != prev && g.has_edge(cur, w)).unwrap();
            if next == s[0] {
                break;
            }
            prev = cur;
            cur = next;
            seen += 1;
        }
        if seen == s.len() {
            out.push(s);
        }
    }
    out
}

#[test]
fn phylogeny_matches_triple_loop_exhaustively() {
    let mut checked = 0;
    for n in 1..=5 {
        // Every staircase digraph, then the same digraph under a reversal of labels.
        for d in Staircase::new(n, b(n, n)).unwrap() {
            let rev: Vec<usize> = (0..n).rev().collect();
            for d in [d.clone(), d.relabel(&rev).unwrap()] {
                let got: BTreeSet<(usize, usize)> = phylogeny_graph(&d).unwrap().edges().into_iter().collect();
                assert_eq!(got, naive_phylogeny(n, &d.arcs()), "{:?}", d.arcs());
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 2 * (1 + 2 + 8 + 64 + 1024));
}

fn independent_count(n: usize, bounds: DegreeBounds) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .filter(|mask| {
            let mut indeg = vec![0; n];
            let mut outdeg = vec![0; n];
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    outdeg[u] += 1;
                    indeg[v] += 1;
                }
            }
            indeg.iter().all(|&x| x <= bounds.i()) && outdeg.iter().all(|&x| x <= bounds.j())
        })
        .count() as u64
}

#[test]
fn staircase_count_matches_subset_counter() {
    for (i, j) in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
        for n in 1..=6 {
            assert_eq!(
                count_staircase(n, b(i, j)).unwrap(),
                independent_count(n, b(i, j)),
                "({i},{j}) n={n}"
            );
        }
    }
}

#[test]
fn staircase_is_complete_up_to_isomorphism() {
    for (i, j) in [(1, 1), (2, 2), (3, 2)] {
        for n in 1..=5 {
            let stair: Vec<Vec<(usize, usize)>> = Staircase::new(n, b(i, j)).unwrap().map(|d| d.arcs()).collect();
            let set: HashSet<Vec<(usize, usize)>> = stair.iter().cloned().collect();
            assert_eq!(set.len(), stair.len(), "duplicates at ({i},{j}) n={n}");

            let cells: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                .collect();
            for mask in 0u64..1 << cells.len() {
                let arcs: Vec<(usize, usize)> = (0..cells.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| cells[k])
                    .collect();
                let Ok(d) = Digraph::from_arcs(n, arcs) else { continue };
                if !d.is_acyclic() || !d.satisfies(b(i, j)) {
                    continue;
                }
                let order = d.topological_order().unwrap();
                let mut perm = vec![0; n];
                for (k, &v) in order.iter().enumerate() {
                    perm[v] = k;
                }
                let s = d.relabel(&perm).unwrap();
                assert!(set.contains(&s.arcs()), "({i},{j}) {:?} missing", d.arcs());
            }
        }
    }
}

#[test]
fn chordality_matches_induced_cycle_scan() {
    let check = |g: &Graph| {
        let mut sets = induced_cycle_sets(g);
        sets.sort();
        let cert = is_chordal(g);
        assert!(cert.validates(g));
        assert_eq!(cert.is_chordal(), sets.is_empty(), "{:?}", g.edges());
        let mut found: Vec<Vec<usize>> = holes(g, 4, None)
            .iter()
            .map(|h| {
                let mut v = h.vertices().to_vec();
                v.sort();
                v
            })
            .collect();
        found.sort();
        assert_eq!(found, sets, "{:?}", g.edges());
    };
    for n in 1..=6 {
        for mask in 0u64..1 << (n * (n - 1) / 2) {
            check(&graph_from_mask(n, mask));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let p = rng.gen_range(0.2..0.7);
        check(&random_graph(&mut rng, 7, p));
    }
}

#[test]
fn clique_and_independence_match_subset_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for round in 0..150 {
        let n = rng.gen_range(1..=16);
        let density = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, density);
        let (mut omega, mut alpha) = (0, 0);
        for mask in 0u32..(1 << n) {
            let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if s.len() > omega && g.is_clique(&s) {
                omega = s.len();
            }
            if s.len() > alpha && g.is_independent(&s) {
                alpha = s.len();
            }
        }
        let k = max_clique(&g);
        assert!(g.is_clique(&k));
        assert_eq!(k.len(), omega, "round {round}");
        let a = max_independent_within(&g, VertexSet::full(n));
        assert!(g.is_independent(&a));
        assert_eq!(a.len(), alpha, "round {round}");
    }
}

/// Lexicographically first injection that is an induced embedding.
fn first_injection(g: &Graph, p: &Graph) -> Option<Vec<usize>> {
    fn go(g: &Graph, p: &Graph, map: &mut Vec<usize>) -> bool {
        let k = map.len();
        if k == p.n() {
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            map.push(v);
            if (0..k).all(|a| p.has_edge(a, k) == g.has_edge(map[a], v)) && go(g, p, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    let mut map = Vec::new();
    go(g, p, &mut map).then_some(map)
}

#[test]
fn induced_matcher_matches_injection_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..4000 {
        let gn = rng.gen_range(1..=7);
        let pn = rng.gen_range(1..=5);
        let (dg, dp) = (rng.gen_range(0.2..0.8), rng.gen_range(0.2..0.8));
        let g = random_graph(&mut rng, gn, dg);
        let p = random_graph(&mut rng, pn, dp);
        assert_eq!(
            contains_induced(&g, &p).unwrap(),
            first_injection(&g, &p),
            "{:?} in {:?}",
            p.edges(),
            g.edges()
        );
    }
}

/// Shortest extensions by subset scan, each read from `p[0]` along `p`.
fn extension_oracle(g: &Graph, c: &Cycle, q: &[usize], p: &[usize]) -> Option<Vec<usize>> {
    let on_p: VertexSet = p.iter().collect();
    let on_q: VertexSet = q.iter().collect();
    let pool: Vec<usize> = c.vertices().iter().copied().filter(|&v| !on_p.contains(v)).collect();
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u32..(1 << pool.len()) {
        let extra: Vec<usize> = (0..pool.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| pool[k])
            .collect();
        if extra.iter().all(|&v| on_q.contains(v)) {
            continue;
        }
        let s: Vec<usize> = p.iter().chain(&extra).copied().collect();
        let (sub, labels) = g.induced(&s.iter().collect()).unwrap();
        let sets = induced_cycle_sets(&sub);
        if sets.len() != 1 || sets[0].len() != s.len() {
            continue;
        }
        // Read the cycle from p[0] through p[1].
        let mut seq = p.to_vec();
        let mut prev = p[p.len() - 2];
        let mut cur = p[p.len() - 1];
        loop {
            let next = labels
                .iter()
                .copied()
                .find(|&w| w != prev && w != cur && g.has_edge(cur, w) && s.contains(&w))
                .unwrap();
            if next == p[0] {
                break;
            }
            seq.push(next);
            prev = cur;
            cur = next;
        }
        let better = match &best {
            None => true,
            Some(b) => (seq.len(), &seq) < (b.len(), b),
        };
        if better {
            best = Some(seq);
        }
    }
    best
}

#[test]
fn path_extension_matches_subset_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut compared = 0;
    let mut found = 0;
    while compared < 3000 {
        let n = rng.gen_range(5..=8);
        let len = rng.gen_range(4..=n);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng);
        let cyc: Vec<usize> = verts[..len].to_vec();
        let mut edges: BTreeSet<(usize, usize)> = (0..len)
            .map(|k| {
                let (a, c) = (cyc[k], cyc[(k + 1) % len]);
                (a.min(c), a.max(c))
            })
            .collect();
        let p_extra = rng.gen_range(0.05..0.4);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p_extra) {
                    edges.insert((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let c = Cycle::new(&g, cyc.clone()).unwrap();
        let cv = c.vertices().to_vec();
        let qlen = rng.gen_range(3..len);
        let start = rng.gen_range(0..len);
        let q: Vec<usize> = (0..qlen).map(|k| cv[(start + k) % len]).collect();
        let plen = rng.gen_range(3..=qlen);
        let off = rng.gen_range(0..=qlen - plen);
        let p: Vec<usize> = q[off..off + plen].to_vec();

        match extend_path_to_hole_in_section(&g, &c, &q, &p) {
            Err(Error::PreconditionViolated(_)) => continue,
            Ok(h) => {
                let want = extension_oracle(&g, &c, &q, &p).expect("oracle finds the same hole");
                let want = phylo::chordality::Hole::new(&g, want).unwrap();
                assert_eq!(h, want, "G={:?} C={:?} Q={q:?} P={p:?}", g.edges(), c.vertices());
                found += 1;
            }
            Err(Error::LemmaCounterexample(_)) => {
                assert_eq!(
                    extension_oracle(&g, &c, &q, &p),
                    None,
                    "G={:?} C={:?} Q={q:?} P={p:?}",
                    g.edges(),
                    c.vertices()
                );
            }
            Err(e) => panic!("{e}"),
        }
        compared += 1;
    }
    assert!(found > 100);
}

/// Every chord set on C_l, l <= 8, with Q a forward section from 0 and every
/// admissible P inside it. Rotations and reflections cover the other sections.
#[test]
fn path_extension_succeeds_on_every_small_instance() {
    let mut calls = 0u64;
    for l in 4..=8 {
        let chords: Vec<(usize, usize)> = (0..l)
            .flat_map(|u| (u + 2..l).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u == 0 && v == l - 1))
            .collect();
        let cyc: Vec<usize> = (0..l).collect();
        for mask in 0u32..1 << chords.len() {
            let chosen: Vec<(usize, usize)> = (0..chords.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| chords[k])
                .collect();
            let g = Graph::from_edges(l, (0..l).map(|k| (k, (k + 1) % l)).chain(chosen.iter().copied())).unwrap();
            let c = Cycle::new(&g, cyc.clone()).unwrap();
            let incident: VertexSet = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
            for q_len in 3..l {
                // Q = 0..q_len must be chordless.
                if chosen.iter().any(|&(u, v)| v < q_len && u < q_len) {
                    break;
                }
                let q: Vec<usize> = (0..q_len).collect();
                for start in 0..q_len {
                    for end in start + 3..=q_len {
                        let p = &q[start..end];
                        if p[1..p.len() - 1].iter().any(|&v| incident.contains(v)) {
                            continue;
                        }
                        let h = extend_path_to_hole_in_section(&g, &c, &q, p)
                            .unwrap_or_else(|e| panic!("l={l} chords={chosen:?} Q={q:?} P={p:?}: {e}"));
                        assert!(h.validates(&g));
                        assert!(h.vertices().iter().any(|&v| v >= q_len));
                        calls += 1;
                    }
                }
            }
        }
    }
    assert_eq!(calls, 42_777);
}
