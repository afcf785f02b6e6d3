//! Corpora of bounded acyclic digraphs and the statement checks run on them.

pub mod random;
pub mod realize;
pub mod staircase;
pub mod verify;

pub use random::{random_dag, random_hole_instance, sample_rng, RandomSpec};
pub use realize::realize;
pub use staircase::{count_staircase, staircase_cap, Staircase};
pub use verify::{verify, verify_with_progress, VerificationReport, VerifyMode, VerifyParams, STATEMENTS};

use crate::error::Result;
use crate::graph::{DegreeBounds, Digraph};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnumMode {
    Staircase,
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnumSpec {
    pub n: usize,
    pub bounds: DegreeBounds,
    pub mode: EnumMode,
}

/// Staircase order, or `samples` seeded random digraphs on exactly `n`
/// vertices.
pub fn enumerate_dags(spec: EnumSpec) -> Result<Box<dyn Iterator<Item = Digraph>>> {
    match spec.mode {
        EnumMode::Staircase => Ok(Box::new(Staircase::new(spec.n, spec.bounds)?)),
        EnumMode::Random { samples, seed } => {
            let r = RandomSpec {
                samples,
                seed,
                n_min: spec.n,
                n_max: spec.n,
                p: None,
            };
            let b = spec.bounds;
            Ok(Box::new((0..samples).map(move |k| r.sample(b, k))))
        }
    }
}

pub(crate) fn fnv1a_pairs(n: usize, pairs: &[(usize, usize)]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |x: u64| {
        for byte in x.to_le_bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    eat(n as u64);
    for &(u, v) in pairs {
        eat(u as u64);
        eat(v as u64);
    }
    h
}

pub(crate) fn hex(h: u64) -> String {
    format!("{h:016x}")
}

/// Stable 16-hex-digit identifier of a labeled digraph.
pub fn digest(d: &Digraph) -> String {
    hex(fnv1a_pairs(d.n(), &d.arcs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_depends_on_labels() {
        let a = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        let b = Digraph::from_arcs(3, [(1, 2)]).unwrap();
        assert_ne!(digest(&a), digest(&b));
        assert_eq!(digest(&a), digest(&a.clone()));
        assert_eq!(digest(&a).len(), 16);
    }

    #[test]
    fn random_mode_fixes_n() {
        let spec = EnumSpec {
            n: 6,
            bounds: DegreeBounds::new(2, 2).unwrap(),
            mode: EnumMode::Random { samples: 5, seed: 3 },
        };
        let v: Vec<_> = enumerate_dags(spec).unwrap().collect();
        assert_eq!(v.len(), 5);
        assert!(v.iter().all(|d| d.n() == 6));
    }
}
