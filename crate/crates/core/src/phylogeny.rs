//! Competition and phylogeny (moral) graphs of acyclic digraphs.
//!
//! Two vertices compete when they share an out-neighbor ("prey"). The
//! phylogeny graph adds those competition edges to the underlying graph; in
//! Bayesian-network language this is moralization, where the parents of every
//! vertex get married. An edge that exists only because of competition is a
//! *cared edge*, and every common out-neighbor witnessing it is a *caring
//! vertex*.

use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::{Digraph, Graph};

/// Edge `uv` whenever `u != v` share an out-neighbor.
pub fn competition_graph(d: &Digraph) -> Result<Graph> {
    d.ensure_acyclic()?;
    Ok(competition_unchecked(d))
}

/// Union of the underlying and the competition graph.
pub fn phylogeny_graph(d: &Digraph) -> Result<Graph> {
    d.ensure_acyclic()?;
    Ok(phylogeny_unchecked(d))
}

pub(crate) fn competition_unchecked(d: &Digraph) -> Graph {
    let mut rows = vec![VertexSet::new(); d.n()];
    marry_parents(d, &mut rows);
    Graph::from_rows(rows)
}

/// Caller guarantees `d` is acyclic.
pub(crate) fn phylogeny_unchecked(d: &Digraph) -> Graph {
    let mut rows: Vec<VertexSet> = (0..d.n()).map(|v| d.out_neighbors(v) | d.in_neighbors(v)).collect();
    marry_parents(d, &mut rows);
    Graph::from_rows(rows)
}

fn marry_parents(d: &Digraph, rows: &mut [VertexSet]) {
    for w in 0..d.n() {
        let parents = d.in_neighbors(w);
        if parents.len() < 2 {
            continue;
        }
        for u in parents {
            let mut others = parents;
            others.remove(u);
            rows[u] |= others;
        }
    }
}

/// Cared edges of `P(D)` keyed by `(u, v)` with `u < v`, each mapped to the
/// full set of its caring vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CaredEdgeMap {
    entries: BTreeMap<(usize, usize), VertexSet>,
}

impl CaredEdgeMap {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Caring vertices of edge `uv` (either order), if it is cared.
    pub fn caring(&self, u: usize, v: usize) -> Option<VertexSet> {
        self.entries.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), VertexSet)> + '_ {
        self.entries.iter().map(|(&e, &s)| (e, s))
    }

    /// Every vertex that takes care of at least one edge.
    pub fn caring_vertices(&self) -> VertexSet {
        self.entries.values().fold(VertexSet::new(), |acc, s| acc | *s)
    }
}

pub fn cared_edges(d: &Digraph) -> Result<CaredEdgeMap> {
    d.ensure_acyclic()?;
    Ok(cared_edges_unchecked(d))
}

pub(crate) fn cared_edges_unchecked(d: &Digraph) -> CaredEdgeMap {
    let mut entries = BTreeMap::new();
    for u in 0..d.n() {
        for v in (u + 1)..d.n() {
            if d.has_arc(u, v) || d.has_arc(v, u) {
                continue;
            }
            let common = d.out_neighbors(u) & d.out_neighbors(v);
            if !common.is_empty() {
                entries.insert((u, v), common);
            }
        }
    }
    CaredEdgeMap { entries }
}
