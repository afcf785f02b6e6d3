//! Immutable graph and digraph values.
//!
//! Vertices are dense labels `0..n`. Adjacency is stored as one
//! [`VertexSet`] row per vertex; a [`Digraph`] keeps both its out-rows and its
//! in-rows so that in-neighborhoods (the "parents" that get married in the
//! phylogeny graph) are available without a scan.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{CycleWitness, Error, Result};

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::SizeLimitExceeded {
            what: "vertex count",
            size: n,
            cap: MAX_VERTICES,
        });
    }
    Ok(())
}

fn check_subset(s: &VertexSet, n: usize) -> Result<()> {
    match s.last() {
        Some(v) if v >= n => Err(Error::OutOfRange { vertex: v, n }),
        _ => Ok(()),
    }
}

/// Maximum indegree `i` and maximum outdegree `j` of an `(i,j)` digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeBounds {
    i: usize,
    j: usize,
}

impl DegreeBounds {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::InvalidParams(format!(
                "degree bounds must be positive, got ({i}, {j})"
            )));
        }
        Ok(DegreeBounds { i, j })
    }

    /// Max indegree.
    pub fn i(&self) -> usize {
        self.i
    }

    /// Max outdegree.
    pub fn j(&self) -> usize {
        self.j
    }
}

impl fmt::Display for DegreeBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeKind {
    Indegree,
    Outdegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundViolation {
    pub vertex: usize,
    pub kind: DegreeKind,
    pub degree: usize,
    pub bound: usize,
}

/// Outcome of [`Digraph::check_bounds`]; empty violation list means pass.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct BoundsCheck {
    pub violations: Vec<BoundViolation>,
}

impl BoundsCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Simple digraph on `0..n`. Acyclicity is not part of the type; operations
/// that need it check it on entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

impl Digraph {
    /// Arcless digraph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        Digraph {
            n,
            out_adj: vec![VertexSet::new(); n],
            in_adj: vec![VertexSet::new(); n],
        }
    }

    /// Builds a digraph, rejecting loops, out-of-range labels, repeated arcs
    /// and antiparallel pairs.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_size(n)?;
        let mut d = Digraph::empty(n);
        for (u, v) in arcs {
            d.validate_new_arc(u, v)?;
            d.push_arc(u, v);
        }
        Ok(d)
    }

    fn validate_new_arc(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::OutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidArc {
                u,
                v,
                reason: "self-loop",
            });
        }
        if self.has_arc(u, v) {
            return Err(Error::InvalidArc {
                u,
                v,
                reason: "repeated arc",
            });
        }
        if self.has_arc(v, u) {
            return Err(Error::InvalidArc {
                u,
                v,
                reason: "antiparallel arc",
            });
        }
        Ok(())
    }

    /// Copy of `self` with one more arc.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Self> {
        self.validate_new_arc(u, v)?;
        let mut d = self.clone();
        d.push_arc(u, v);
        Ok(d)
    }

    /// Copy of `self` with `(u, v)` removed (no-op when absent).
    pub fn without_arc(&self, u: usize, v: usize) -> Self {
        let mut d = self.clone();
        if u < self.n && v < self.n {
            d.pop_arc(u, v);
        }
        d
    }

    /// Copy of `self` with `count` new isolated vertices labelled `n..n+count`.
    pub fn with_vertices(&self, count: usize) -> Result<Self> {
        check_size(self.n + count)?;
        let mut d = self.clone();
        d.n += count;
        d.out_adj.resize(d.n, VertexSet::new());
        d.in_adj.resize(d.n, VertexSet::new());
        Ok(d)
    }

    #[inline]
    pub(crate) fn push_arc(&mut self, u: usize, v: usize) {
        self.out_adj[u].insert(v);
        self.in_adj[v].insert(u);
    }

    #[inline]
    pub(crate) fn pop_arc(&mut self, u: usize, v: usize) {
        self.out_adj[u].remove(v);
        self.in_adj[v].remove(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out_adj[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.in_adj[v]
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].contains(v)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out_adj[u].iter().map(move |v| (u, v)))
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(VertexSet::len).sum()
    }

    /// Vertices of indegree zero.
    pub fn sources(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.in_adj[v].is_empty()).collect()
    }

    pub fn max_indegree(&self) -> usize {
        self.in_adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn max_outdegree(&self) -> usize {
        self.out_adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Edge `uv` exactly when `(u,v)` or `(v,u)` is an arc.
    pub fn underlying_graph(&self) -> Graph {
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| self.out_adj[v] | self.in_adj[v]).collect(),
        }
    }

    /// Topological order with lowest-label tie-breaking, or the directed
    /// cycle that prevents one.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let mut remaining_in: Vec<usize> = self.in_adj.iter().map(VertexSet::len).collect();
        let mut ready: VertexSet = (0..self.n).filter(|&v| remaining_in[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.first() {
            ready.remove(v);
            order.push(v);
            for w in self.out_adj[v] {
                remaining_in[w] -= 1;
                if remaining_in[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() == self.n {
            return Ok(order);
        }
        let placed: VertexSet = order.iter().collect();
        let stuck = self.vertices() - placed;
        Err(Error::CyclicInput {
            cycle: self.cycle_within(stuck),
        })
    }

    /// Every vertex of `stuck` has an in-neighbor in `stuck`; walk backwards
    /// until a vertex repeats.
    fn cycle_within(&self, stuck: VertexSet) -> CycleWitness {
        let start = stuck.first().expect("nonempty residue");
        let mut seen_at = vec![usize::MAX; self.n];
        let mut walk = Vec::new();
        let mut v = start;
        while seen_at[v] == usize::MAX {
            seen_at[v] = walk.len();
            walk.push(v);
            v = (self.in_adj[v] & stuck)
                .first()
                .expect("residue vertex has a stuck parent");
        }
        let mut cycle: Vec<usize> = walk[seen_at[v]..].to_vec();
        cycle.reverse();
        let min_pos = cycle
            .iter()
            .enumerate()
            .min_by_key(|(_, &x)| x)
            .map(|(p, _)| p)
            .unwrap_or(0);
        cycle.rotate_left(min_pos);
        CycleWitness(cycle)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    pub fn ensure_acyclic(&self) -> Result<()> {
        self.topological_order().map(|_| ())
    }

    /// Subdigraph induced by `s`, relabelled by increasing original label.
    /// The returned vector maps new labels to original ones.
    pub fn induced(&self, s: &VertexSet) -> Result<(Digraph, Vec<usize>)> {
        check_subset(s, self.n)?;
        let labels = s.to_vec();
        let mut position = vec![usize::MAX; self.n];
        for (new, &old) in labels.iter().enumerate() {
            position[old] = new;
        }
        let mut d = Digraph::empty(labels.len());
        for (new_u, &u) in labels.iter().enumerate() {
            for v in self.out_adj[u] & *s {
                d.push_arc(new_u, position[v]);
            }
        }
        Ok((d, labels))
    }

    /// Lists every vertex whose indegree exceeds `b.i()` or outdegree exceeds
    /// `b.j()`.
    pub fn check_bounds(&self, b: DegreeBounds) -> BoundsCheck {
        let mut violations = Vec::new();
        for v in 0..self.n {
            let din = self.indegree(v);
            if din > b.i {
                violations.push(BoundViolation {
                    vertex: v,
                    kind: DegreeKind::Indegree,
                    degree: din,
                    bound: b.i,
                });
            }
            let dout = self.outdegree(v);
            if dout > b.j {
                violations.push(BoundViolation {
                    vertex: v,
                    kind: DegreeKind::Outdegree,
                    degree: dout,
                    bound: b.j,
                });
            }
        }
        BoundsCheck { violations }
    }

    #[inline]
    pub fn satisfies(&self, b: DegreeBounds) -> bool {
        (0..self.n).all(|v| self.in_adj[v].len() <= b.i && self.out_adj[v].len() <= b.j)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParams(format!(
                "relabelling has {} entries for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().collect();
        if image.len() != self.n || image.last().is_some_and(|m| m >= self.n) {
            return Err(Error::InvalidParams("relabelling is not a permutation".into()));
        }
        let mut d = Digraph::empty(self.n);
        for (u, v) in self.arcs() {
            d.push_arc(perm[u], perm[v]);
        }
        Ok(d)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

/// Simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all - VertexSet::singleton(v);
        }
        g
    }

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.push_edge(v - 1, v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`; `n` must be at least 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.push_edge(n - 1, 0);
        g
    }

    /// Builds a graph, rejecting loops, out-of-range labels and repeated
    /// edges (in either order).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_size(n)?;
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.validate_new_edge(u, v)?;
            g.push_edge(u, v);
        }
        Ok(g)
    }

    fn validate_new_edge(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::OutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidArc {
                u,
                v,
                reason: "self-loop",
            });
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidArc {
                u,
                v,
                reason: "repeated edge",
            });
        }
        Ok(())
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.validate_new_edge(u, v)?;
        let mut g = self.clone();
        g.push_edge(u, v);
        Ok(g)
    }

    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub(crate) fn push_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| (*s - VertexSet::singleton(v)).is_subset(&self.adj[v]))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Subgraph induced by `s`, relabelled by increasing original label.
    /// The returned vector maps new labels to original ones.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        check_subset(s, self.n)?;
        let labels = s.to_vec();
        let mut position = vec![usize::MAX; self.n];
        for (new, &old) in labels.iter().enumerate() {
            position[old] = new;
        }
        let adj = labels
            .iter()
            .map(|&old| (self.adj[old] & *s).iter().map(|v| position[v]).collect())
            .collect();
        Ok((Graph::from_rows(adj), labels))
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n);
        Graph::from_rows(
            (0..self.n)
                .map(|v| all - self.adj[v] - VertexSet::singleton(v))
                .collect(),
        )
    }

    /// Edge union of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::InvalidParams(format!(
                "union of graphs with {} and {} vertices",
                self.n, other.n
            )));
        }
        Ok(Graph::from_rows(
            self.adj.iter().zip(&other.adj).map(|(a, b)| *a | *b).collect(),
        ))
    }

    /// `self ∨ other`: disjoint union (other's labels shifted by `self.n()`)
    /// plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_size(n)?;
        let left = VertexSet::full(self.n);
        let right = VertexSet::full(n) - left;
        let mut adj = Vec::with_capacity(n);
        for v in 0..self.n {
            adj.push(self.adj[v] | right);
        }
        for v in 0..other.n {
            adj.push(other.adj[v].iter().map(|w| w + self.n).collect::<VertexSet>() | left);
        }
        Ok(Graph::from_rows(adj))
    }

    /// Connected components, each as a vertex set, ordered by smallest label.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertices();
        let mut out = Vec::new();
        while let Some(s) = unseen.first() {
            let comp = self.reach(s, self.vertices());
            unseen -= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `allowed` (s is always included).
    pub fn reach(&self, s: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier {
                next |= self.adj[v];
            }
            next &= allowed;
            next -= seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Shortest path from `s` to `t` using only vertices of `allowed`
    /// (endpoints are admitted regardless). Ties go to the lowest-labelled
    /// predecessor.
    pub fn shortest_path(&self, s: usize, t: usize, allowed: VertexSet) -> Option<Vec<usize>> {
        let allowed = allowed | VertexSet::singleton(s) | VertexSet::singleton(t);
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = VertexSet::singleton(s);
        let mut frontier = vec![s];
        while !frontier.is_empty() && !seen.contains(t) {
            let mut next = Vec::new();
            for &v in &frontier {
                for w in (self.adj[v] & allowed) - seen {
                    seen.insert(w);
                    parent[w] = v;
                    next.push(w);
                }
            }
            next.sort_unstable();
            frontier = next;
        }
        if !seen.contains(t) {
            return None;
        }
        let mut path = vec![t];
        let mut v = t;
        while v != s {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
