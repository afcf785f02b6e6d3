use std::fmt;

use thiserror::Error;

/// Directed cycle found while a digraph was required to be acyclic.
///
/// Vertices are listed in arc order; the closing arc runs from the last
/// vertex back to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness(pub Vec<usize>);

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}→")?;
        }
        match self.0.first() {
            Some(v) => write!(f, "{v}"),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("digraph is not acyclic: directed cycle {cycle}")]
    CyclicInput { cycle: CycleWitness },

    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },

    #[error("invalid arc or edge ({u}, {v}): {reason}")]
    InvalidArc { u: usize, v: usize, reason: &'static str },

    #[error("{what}: size {size} exceeds the limit {cap}")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("not a hole: {0}")]
    NotAHole(String),

    #[error("hole of length {len} is too short; length at least {min} is required")]
    HoleTooShort { len: usize, min: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("lemma counterexample: {0}")]
    LemmaCounterexample(String),

    #[error("invalid pattern: {0}")]
    InvalidSpec(String),

    #[error("degree bounds ({i}, {j}) outside the scope of this check: {reason}")]
    BoundsOutOfScope { i: usize, j: usize, reason: &'static str },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("enumeration over {n} vertices exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
