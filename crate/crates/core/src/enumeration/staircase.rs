//! Exhaustive staircase enumeration: every arc runs from a lower to a higher
//! label, so every digraph produced is acyclic, and every acyclic digraph is
//! isomorphic to one of them (relabel along a topological order).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Digraph};

/// Default vertex cap for exhaustive enumeration.
pub const DEFAULT_STAIRCASE_CAP: usize = 7;

/// Environment variable overriding [`DEFAULT_STAIRCASE_CAP`].
pub const CAP_ENV: &str = "PHYLO_STAIRCASE_CAP";

/// Number of leading arc decisions fixed per parallel work unit.
const PREFIX_LEN: usize = 10;

pub fn staircase_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_STAIRCASE_CAP)
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    let cap = staircase_cap();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// Candidate arcs in decision order: `(0,1), (0,2), ..., (1,2), ...`.
fn staircase_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Streams every bounds-satisfying staircase digraph on `n` vertices. Arc
/// decisions are made in [`staircase_pairs`] order with "absent" tried
/// first; an arc is only added while both endpoint degrees have room, so
/// whole subtrees of over-full digraphs are never visited.
#[derive(Debug, Clone)]
pub struct Staircase {
    bounds: DegreeBounds,
    pairs: Vec<(usize, usize)>,
    fixed: usize,
    d: Digraph,
    taken: Vec<bool>,
    started: bool,
    done: bool,
}

impl Staircase {
    pub fn new(n: usize, bounds: DegreeBounds) -> Result<Self> {
        check_cap(n)?;
        Ok(Self::unchecked(n, bounds))
    }

    pub(crate) fn unchecked(n: usize, bounds: DegreeBounds) -> Self {
        Staircase {
            bounds,
            pairs: staircase_pairs(n),
            fixed: 0,
            d: Digraph::empty(n),
            taken: Vec::new(),
            started: false,
            done: false,
        }
    }

    /// Restricts the stream to digraphs whose first decisions match
    /// `prefix`; `None` when the prefix itself breaks the bounds.
    pub(crate) fn with_prefix(n: usize, bounds: DegreeBounds, prefix: &[bool]) -> Option<Self> {
        let mut s = Self::unchecked(n, bounds);
        assert!(prefix.len() <= s.pairs.len());
        for (k, &take) in prefix.iter().enumerate() {
            if take {
                let (u, v) = s.pairs[k];
                if !s.room(u, v) {
                    return None;
                }
                s.d.push_arc(u, v);
            }
        }
        s.fixed = prefix.len();
        Some(s)
    }

    fn room(&self, u: usize, v: usize) -> bool {
        self.d.outdegree(u) < self.bounds.j() && self.d.indegree(v) < self.bounds.i()
    }

    fn descend(&mut self) {
        let free = self.pairs.len() - self.fixed;
        while self.taken.len() < free {
            self.taken.push(false);
        }
    }
}

impl Iterator for Staircase {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(self.d.clone());
        }
        while let Some(took) = self.taken.pop() {
            let (u, v) = self.pairs[self.fixed + self.taken.len()];
            if took {
                self.d.pop_arc(u, v);
                continue;
            }
            if self.room(u, v) {
                self.d.push_arc(u, v);
                self.taken.push(true);
                self.descend();
                return Some(self.d.clone());
            }
        }
        self.done = true;
        None
    }
}

/// Feasible decision prefixes for splitting the enumeration into work units.
pub(crate) fn prefixes(n: usize, bounds: DegreeBounds) -> Vec<Vec<bool>> {
    let k = staircase_pairs(n).len().min(PREFIX_LEN);
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let prefix: Vec<bool> = (0..k).map(|b| mask >> (k - 1 - b) & 1 == 1).collect();
        if Staircase::with_prefix(n, bounds, &prefix).is_some() {
            out.push(prefix);
        }
    }
    out
}

/// Parallel fold over the staircase digraphs on `n` vertices. Work units
/// are merged in prefix order, so an associative `merge` gives the same
/// result on every run.
pub fn par_fold<A, I, F, M>(n: usize, bounds: DegreeBounds, init: I, fold: F, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &Digraph) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    check_cap(n)?;
    let units = prefixes(n, bounds);
    Ok(units
        .par_iter()
        .map(|prefix| {
            let mut acc = init();
            if let Some(stream) = Staircase::with_prefix(n, bounds, prefix) {
                for d in stream {
                    fold(&mut acc, &d);
                }
            }
            acc
        })
        .reduce(&init, &merge))
}

/// First digraph in staircase order for which `f` returns a value.
pub fn par_find_first<T, F>(n: usize, bounds: DegreeBounds, f: F) -> Result<Option<T>>
where
    T: Send,
    F: Fn(&Digraph) -> Option<T> + Sync + Send,
{
    check_cap(n)?;
    let units = prefixes(n, bounds);
    Ok(units
        .par_iter()
        .find_map_first(|prefix| Staircase::with_prefix(n, bounds, prefix).and_then(|mut s| s.find_map(|d| f(&d)))))
}

pub fn count_staircase(n: usize, bounds: DegreeBounds) -> Result<u64> {
    par_fold(n, bounds, || 0u64, |c, _| *c += 1, |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(i: usize, j: usize) -> DegreeBounds {
        DegreeBounds::new(i, j).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(Staircase::new(3, b(1, 1)).unwrap().count(), 5);
        assert_eq!(Staircase::new(3, b(2, 2)).unwrap().count(), 8);
        assert_eq!(Staircase::new(1, b(1, 1)).unwrap().count(), 1);
        assert_eq!(Staircase::new(0, b(1, 1)).unwrap().count(), 1);
    }

    #[test]
    fn parallel_count_matches_serial() {
        for (i, j) in [(1, 1), (2, 2), (2, 3), (3, 3)] {
            let serial = Staircase::new(6, b(i, j)).unwrap().count() as u64;
            assert_eq!(count_staircase(6, b(i, j)).unwrap(), serial);
        }
    }

    #[test]
    fn outputs_are_distinct_and_bounded() {
        let all: Vec<Digraph> = Staircase::new(5, b(2, 2)).unwrap().collect();
        let mut arcs: Vec<_> = all.iter().map(|d| d.arcs()).collect();
        arcs.sort();
        arcs.dedup();
        assert_eq!(arcs.len(), all.len());
        assert!(all
            .iter()
            .all(|d| d.satisfies(b(2, 2)) && d.arcs().iter().all(|&(u, v)| u < v)));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(Staircase::new(40, b(2, 2)), Err(Error::CapExceeded { .. })));
    }
}
