//! Seeded random bounded DAGs.
//!
//! Sample `k` of a run with seed `s` draws from a ChaCha8 generator seeded
//! with `s` on stream `k`, so any single sample can be regenerated without
//! replaying the others.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{DegreeBounds, Digraph};

/// Recorded in every report built from random samples.
pub const GENERATOR_ID: &str = "chacha8-seed-stream/shuffled-staircase-pairs/relabel-v1";

/// Recorded for the hole-perturbation instances.
pub const HOLE_GENERATOR_ID: &str = "chacha8-seed-stream/hole-perturbation-v1";

pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Visits the pairs `u < v` in random order and keeps each with probability
/// `p` when both degree bounds still have room, then relabels the result by
/// a random permutation.
pub fn random_dag<R: Rng>(rng: &mut R, n: usize, bounds: DegreeBounds, p: f64) -> Digraph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut d = Digraph::empty(n);
    for (u, v) in pairs {
        if rng.gen_bool(p) && d.outdegree(u) < bounds.j() && d.indegree(v) < bounds.i() {
            d.push_arc(u, v);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    d.relabel(&perm).expect("a shuffled identity is a permutation")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub samples: u64,
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    /// Arc probability; drawn per sample from `[0.1, 0.9]` when absent.
    pub p: Option<f64>,
}

impl RandomSpec {
    pub fn sample(&self, bounds: DegreeBounds, index: u64) -> Digraph {
        let mut rng = sample_rng(self.seed, index);
        let n = rng.gen_range(self.n_min..=self.n_max.max(self.n_min));
        let p = self.p.unwrap_or_else(|| rng.gen_range(0.1..0.9));
        random_dag(&mut rng, n, bounds, p)
    }
}

/// `(i, 2)` digraph whose underlying graph has a hole of length at least
/// `3i + 1`. The hole is either the `3i`-hole of the tight construction with
/// one arc subdivided, or a random acyclic orientation of a cycle of length
/// `3i + 1 ..= 3i + 4`. Up to `2i` extra vertices are then attached, each
/// either as a sink or as a source, with random arcs to or from earlier
/// vertices; no arc ever joins two hole vertices. Needs `i >= 2`.
pub fn random_hole_instance<R: Rng>(rng: &mut R, i: usize) -> (Digraph, Vec<usize>) {
    assert!(i >= 2, "a hole needs a vertex of indegree 2");
    let bounds = DegreeBounds::new(i, 2).expect("positive bounds");
    let (mut d, hole) = if rng.gen_bool(0.5) {
        subdivided_tight(i)
    } else {
        let len = 3 * i + rng.gen_range(1..=4);
        oriented_cycle(rng, len)
    };
    let extra = rng.gen_range(0..=2 * i);
    for _ in 0..extra {
        let w = d.n();
        d = d.with_vertices(1).expect("within the vertex limit");
        let sink = rng.gen_bool(0.5);
        let mut others: Vec<usize> = (0..w).collect();
        others.shuffle(rng);
        let want = rng.gen_range(1..=if sink { i } else { 2 });
        let mut added = 0;
        for x in others {
            if added == want {
                break;
            }
            let ok = if sink {
                d.outdegree(x) < bounds.j()
            } else {
                d.indegree(x) < bounds.i()
            };
            if ok {
                if sink {
                    d.push_arc(x, w);
                } else {
                    d.push_arc(w, x);
                }
                added += 1;
            }
        }
    }
    debug_assert!(d.is_acyclic() && d.satisfies(bounds));
    (d, hole)
}

fn subdivided_tight(i: usize) -> (Digraph, Vec<usize>) {
    let r = crate::constructions::construct(crate::constructions::Family::Hole3i(i)).expect("i >= 2");
    let mut hole = match &r.claimed[1] {
        crate::constructions::Claim::UnderlyingHole { vertices } => vertices.clone(),
        _ => unreachable!("the second claim of hole3i is its hole"),
    };
    let (a, b) = (hole[0], hole[1]);
    let x = r.digraph.n();
    let mut d = r.digraph.with_vertices(1).expect("within the vertex limit");
    d = d.without_arc(a, b);
    d.push_arc(a, x);
    d.push_arc(x, b);
    hole.insert(1, x);
    (d, hole)
}

fn oriented_cycle<R: Rng>(rng: &mut R, l: usize) -> (Digraph, Vec<usize>) {
    loop {
        let forward: Vec<bool> = (0..l).map(|_| rng.gen_bool(0.5)).collect();
        if forward.iter().all(|&f| f) || forward.iter().all(|&f| !f) {
            continue;
        }
        let arcs = (0..l).map(|k| {
            let (u, v) = (k, (k + 1) % l);
            if forward[k] {
                (u, v)
            } else {
                (v, u)
            }
        });
        let d = Digraph::from_arcs(l, arcs).expect("a cycle has no repeated pairs");
        return (d, (0..l).collect());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordality::Hole;

    #[test]
    fn samples_are_reproducible() {
        let spec = RandomSpec {
            samples: 10,
            seed: 7,
            n_min: 2,
            n_max: 9,
            p: None,
        };
        let b = DegreeBounds::new(2, 2).unwrap();
        for k in 0..10 {
            let d = spec.sample(b, k);
            assert_eq!(d, spec.sample(b, k));
            assert!(d.is_acyclic() && d.satisfies(b));
        }
    }

    #[test]
    fn hole_instances_keep_their_hole() {
        for i in 2..6 {
            for k in 0..20 {
                let (d, hole) = random_hole_instance(&mut sample_rng(3, k), i);
                assert!(d.is_acyclic());
                assert!(d.satisfies(DegreeBounds::new(i, 2).unwrap()));
                assert!(hole.len() > 3 * i);
                assert!(Hole::new(&d.underlying_graph(), hole).is_ok());
            }
        }
    }
}
