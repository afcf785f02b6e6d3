//! Phylogeny graphs of degree-bounded acyclic digraphs.

pub mod bitset;
pub mod chordality;
pub mod cli;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod forbidden;
pub mod graph;
pub mod hole_analysis;
pub mod iso;
pub mod phylogeny;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{DegreeBounds, Digraph, Graph};
