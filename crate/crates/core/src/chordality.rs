//! Chordality with certificates, hole search, and clique machinery.
//!
//! A graph is chordal exactly when it has a perfect elimination ordering
//! (PEO): an order in which every vertex's later neighbors form a clique.
//! [`is_chordal`] runs maximum cardinality search and either returns the
//! resulting PEO or extracts a hole from the first place it fails.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex cap for [`maximal_cliques`] and [`clique_graph`].
pub const CLIQUE_CAP: usize = 64;

/// Chordless cycle of length at least four, stored in a normalized rotation:
/// it starts at its smallest label and continues toward the smaller of that
/// vertex's two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Hole {
    vertices: Vec<usize>,
}

impl Hole {
    /// Validates `vertices` as a hole of `g` and normalizes the rotation.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Hole> {
        if let Some(reason) = hole_defect(g, &vertices) {
            return Err(Error::NotAHole(reason));
        }
        Ok(Hole {
            vertices: normalize_cycle(vertices),
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    /// Re-checks the hole against `g` from scratch.
    pub fn validates(&self, g: &Graph) -> bool {
        hole_defect(g, &self.vertices).is_none()
    }
}

/// Rotates a cyclic sequence to start at its minimum, then picks the
/// direction whose second entry is smaller.
pub(crate) fn normalize_cycle(mut seq: Vec<usize>) -> Vec<usize> {
    if seq.len() < 2 {
        return seq;
    }
    let pos = seq
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(p, _)| p)
        .unwrap_or(0);
    seq.rotate_left(pos);
    if seq[seq.len() - 1] < seq[1] {
        seq[1..].reverse();
    }
    seq
}

fn hole_defect(g: &Graph, seq: &[usize]) -> Option<String> {
    let l = seq.len();
    if l < 4 {
        return Some(format!("length {l} is below 4"));
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= g.n()) {
        return Some(format!("vertex {v} out of range"));
    }
    let set: VertexSet = seq.iter().collect();
    if set.len() != l {
        return Some("repeated vertex".into());
    }
    for a in 0..l {
        let (u, v) = (seq[a], seq[(a + 1) % l]);
        if !g.has_edge(u, v) {
            return Some(format!("consecutive vertices {u} and {v} are not adjacent"));
        }
    }
    for a in 0..l {
        for b in (a + 2)..l {
            if a == 0 && b == l - 1 {
                continue;
            }
            if g.has_edge(seq[a], seq[b]) {
                return Some(format!("chord {}{}", seq[a], seq[b]));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ChordalityCertificate {
    Chordal { peo: Vec<usize> },
    NonChordal { hole: Hole },
}

impl ChordalityCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCertificate::Chordal { .. })
    }

    pub fn peo(&self) -> Option<&[usize]> {
        match self {
            ChordalityCertificate::Chordal { peo } => Some(peo),
            ChordalityCertificate::NonChordal { .. } => None,
        }
    }

    pub fn hole(&self) -> Option<&Hole> {
        match self {
            ChordalityCertificate::Chordal { .. } => None,
            ChordalityCertificate::NonChordal { hole } => Some(hole),
        }
    }

    /// Direct re-check of whichever certificate is carried.
    pub fn validates(&self, g: &Graph) -> bool {
        match self {
            ChordalityCertificate::Chordal { peo } => is_perfect_elimination_ordering(g, peo),
            ChordalityCertificate::NonChordal { hole } => hole.validates(g),
        }
    }
}

/// True when `order` is a permutation of `g`'s vertices in which every
/// vertex's later neighbors are pairwise adjacent.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut later = g.vertices();
    for &v in order {
        if v >= g.n() || !later.contains(v) {
            return false;
        }
        later.remove(v);
        if !g.is_clique(&(g.neighbors(v) & later)) {
            return false;
        }
    }
    true
}

/// Maximum cardinality search, lowest label on ties. Returns the visit order
/// reversed, which is a PEO whenever `g` is chordal.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut visit = Vec::with_capacity(n);
    while !unvisited.is_empty() {
        let mut best = usize::MAX;
        let mut best_w = 0;
        for v in unvisited {
            if best == usize::MAX || weight[v] > best_w {
                best = v;
                best_w = weight[v];
            }
        }
        unvisited.remove(best);
        visit.push(best);
        for w in g.neighbors(best) & unvisited {
            weight[w] += 1;
        }
    }
    visit.reverse();
    visit
}

pub fn is_chordal(g: &Graph) -> ChordalityCertificate {
    let order = mcs_order(g);
    let mut later = g.vertices();
    let mut failures: Vec<(usize, VertexSet)> = Vec::new();
    for &v in &order {
        later.remove(v);
        let ahead = g.neighbors(v) & later;
        if !g.is_clique(&ahead) {
            failures.push((v, ahead));
        }
    }
    if failures.is_empty() {
        return ChordalityCertificate::Chordal { peo: order };
    }
    for (v, ahead) in failures {
        if let Some(hole) = hole_through(g, v, ahead) {
            return ChordalityCertificate::NonChordal { hole };
        }
    }
    let hole = (0..g.n())
        .find_map(|v| hole_through(g, v, g.neighbors(v)))
        .expect("a graph without a PEO has a hole");
    ChordalityCertificate::NonChordal { hole }
}

/// For the lexicographically first non-adjacent pair `x < y` in `candidates`
/// that admits one, closes a shortest `x`-`y` path avoiding the closed
/// neighborhood of `v` into a hole through `v`.
fn hole_through(g: &Graph, v: usize, candidates: VertexSet) -> Option<Hole> {
    let mut closed = g.neighbors(v);
    closed.insert(v);
    let avoid = g.vertices() - closed;
    for x in candidates {
        for y in candidates {
            if y <= x || g.has_edge(x, y) {
                continue;
            }
            if let Some(path) = g.shortest_path(x, y, avoid) {
                let mut seq = vec![v];
                seq.extend(path);
                if let Ok(h) = Hole::new(g, seq) {
                    return Some(h);
                }
            }
        }
    }
    None
}

pub fn find_hole(g: &Graph) -> Option<Hole> {
    match is_chordal(g) {
        ChordalityCertificate::Chordal { .. } => None,
        ChordalityCertificate::NonChordal { hole } => Some(hole),
    }
}

/// Every hole of `g` with at least `min_len` vertices, each reported once,
/// stopping after `limit` holes when given. Exponential in general; callers
/// bound the graph size or the count.
pub fn holes(g: &Graph, min_len: usize, limit: Option<usize>) -> Vec<Hole> {
    let mut out = Vec::new();
    let min_len = min_len.max(4);
    for s in 0..g.n() {
        let higher: VertexSet = (s + 1..g.n()).collect();
        for a in g.neighbors(s) & higher {
            let mut path = vec![s, a];
            let seen: VertexSet = [s, a].iter().collect();
            grow_holes(g, higher, seen, &mut path, min_len, limit, &mut out);
            if limit.is_some_and(|k| out.len() >= k) {
                return out;
            }
        }
    }
    out
}

// `seen` holds the path plus every neighbor of a path vertex strictly between
// the start and the current end. The start is `path[0]`, the smallest label.
fn grow_holes(
    g: &Graph,
    higher: VertexSet,
    seen: VertexSet,
    path: &mut Vec<usize>,
    min_len: usize,
    limit: Option<usize>,
    out: &mut Vec<Hole>,
) {
    let (s, a) = (path[0], path[1]);
    let end = *path.last().expect("nonempty path");
    let step = (g.neighbors(end) & higher) - seen;
    if path.len() >= 3 && path.len() + 1 >= min_len {
        for b in step & g.neighbors(s) {
            if b > a {
                let mut seq = path.clone();
                seq.push(b);
                out.push(Hole { vertices: seq });
                if limit.is_some_and(|k| out.len() >= k) {
                    return;
                }
            }
        }
    }
    let next_seen = seen | g.neighbors(end);
    for w in step - g.neighbors(s) {
        let mut seen_w = next_seen;
        seen_w.insert(w);
        path.push(w);
        grow_holes(g, higher, seen_w, path, min_len, limit, out);
        path.pop();
        if limit.is_some_and(|k| out.len() >= k) {
            return;
        }
    }
}

/// Maximal cliques plus the clique number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cliques {
    /// Inclusion-maximal cliques, sorted lexicographically by their sorted
    /// vertex lists.
    pub cliques: Vec<VertexSet>,
    pub omega: usize,
}

/// Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &Graph) -> Result<Cliques> {
    if g.n() > CLIQUE_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "maximal clique enumeration",
            size: g.n(),
            cap: CLIQUE_CAP,
        });
    }
    let mut cliques = Vec::new();
    if g.n() > 0 {
        bron_kerbosch(g, VertexSet::new(), g.vertices(), VertexSet::new(), &mut cliques);
    }
    cliques.sort_by_key(|c| c.to_vec());
    let omega = cliques.iter().map(VertexSet::len).max().unwrap_or(0);
    Ok(Cliques { cliques, omega })
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| ((p & g.neighbors(u)).len(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in p - g.neighbors(pivot) {
        let mut r2 = r;
        r2.insert(v);
        let nv = g.neighbors(v);
        bron_kerbosch(g, r2, p & nv, x & nv, out);
        p.remove(v);
        x.insert(v);
    }
}

/// A maximum clique of `g[within]`; lowest labels win among the first found.
pub fn max_clique_within(g: &Graph, within: VertexSet) -> VertexSet {
    let mut best = VertexSet::new();
    grow_max_clique(g, VertexSet::new(), within & g.vertices(), &mut best);
    best
}

pub fn max_clique(g: &Graph) -> VertexSet {
    max_clique_within(g, g.vertices())
}

/// `ω(g)`.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

fn grow_max_clique(g: &Graph, r: VertexSet, mut p: VertexSet, best: &mut VertexSet) {
    if p.is_empty() {
        if r.len() > best.len() {
            *best = r;
        }
        return;
    }
    while let Some(v) = p.first() {
        if r.len() + p.len() <= best.len() {
            return;
        }
        let mut r2 = r;
        r2.insert(v);
        grow_max_clique(g, r2, p & g.neighbors(v), best);
        p.remove(v);
    }
}

/// Largest independent set inside `within`.
pub fn max_independent_within(g: &Graph, within: VertexSet) -> VertexSet {
    let mut best = VertexSet::new();
    grow_max_independent(g, VertexSet::new(), within & g.vertices(), &mut best);
    best
}

fn grow_max_independent(g: &Graph, r: VertexSet, mut p: VertexSet, best: &mut VertexSet) {
    if p.is_empty() {
        if r.len() > best.len() {
            *best = r;
        }
        return;
    }
    while let Some(v) = p.first() {
        if r.len() + p.len() <= best.len() {
            return;
        }
        let mut r2 = r;
        r2.insert(v);
        grow_max_independent(g, r2, p - g.neighbors(v) - VertexSet::singleton(v), best);
        p.remove(v);
    }
}

/// Clique graph `K(G)`: one vertex per maximal clique (in the order of
/// [`maximal_cliques`]), adjacent when the cliques intersect.
pub fn clique_graph(g: &Graph) -> Result<(Graph, Vec<VertexSet>)> {
    let Cliques { cliques, .. } = maximal_cliques(g)?;
    let k = cliques.len();
    if k > crate::bitset::MAX_VERTICES {
        return Err(Error::SizeLimitExceeded {
            what: "clique graph",
            size: k,
            cap: crate::bitset::MAX_VERTICES,
        });
    }
    let mut kg = Graph::empty(k);
    for a in 0..k {
        for b in (a + 1)..k {
            if !cliques[a].is_disjoint(&cliques[b]) {
                kg.push_edge(a, b);
            }
        }
    }
    Ok((kg, cliques))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub is_forest: bool,
    pub is_diamond_free: bool,
    pub max_degree: usize,
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

/// No induced `K4 - e`: every edge's common neighborhood is a clique.
pub fn is_diamond_free(g: &Graph) -> bool {
    g.edges()
        .into_iter()
        .all(|(u, v)| g.is_clique(&(g.neighbors(u) & g.neighbors(v))))
}

pub fn class_predicates(g: &Graph) -> ClassFlags {
    ClassFlags {
        is_forest: is_forest(g),
        is_diamond_free: is_diamond_free(g),
        max_degree: g.max_degree(),
    }
}
