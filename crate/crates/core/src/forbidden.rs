//! Forbidden induced subgraphs of `(i, j)` phylogeny graphs.
//!
//! For `i, j >= 2` none of `K_{1,j+2}`, `K_{j+1,j+1}`, `P_{2j+3} ∨ I_1`,
//! `C_{2j+3} ∨ I_1` and `K_{ij+1}` can appear induced in `P(D)`; for
//! `i >= 4, j = 2` neither can `K_{⌊3i/2⌋+2}`. [`detect_forbidden`] lists
//! every one of these that a graph contains.

use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::chordality;
use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Graph};

/// Largest pattern [`contains_induced`] accepts.
pub const PATTERN_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum PatternSpec {
    Complete(usize),
    /// `K_{1,l}`.
    Star(usize),
    CompleteBipartite(usize, usize),
    /// Path on `l` vertices.
    Path(usize),
    /// Cycle on `l` vertices.
    Cycle(usize),
    /// `P_l ∨ I_1`.
    Fan(usize),
    /// `C_l ∨ I_1`.
    Wheel(usize),
    Diamond,
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatternSpec::Complete(l) => write!(f, "K_{l}"),
            PatternSpec::Star(l) => write!(f, "K_{{1,{l}}}"),
            PatternSpec::CompleteBipartite(m, n) => write!(f, "K_{{{m},{n}}}"),
            PatternSpec::Path(l) => write!(f, "P_{l}"),
            PatternSpec::Cycle(l) => write!(f, "C_{l}"),
            PatternSpec::Fan(l) => write!(f, "P_{l}∨I_1"),
            PatternSpec::Wheel(l) => write!(f, "C_{l}∨I_1"),
            PatternSpec::Diamond => write!(f, "diamond"),
        }
    }
}

/// Labels: star hub 0; bipartite parts `0..m` and `m..m+n`; fan and wheel
/// rims `0..l` in order with the hub last.
pub fn build_pattern(p: PatternSpec) -> Result<Graph> {
    let bad = |why: &str| Err(Error::InvalidSpec(format!("{p}: {why}")));
    match p {
        PatternSpec::Complete(l) if l >= 1 => Ok(Graph::complete(l)),
        PatternSpec::Star(l) if l >= 1 => Graph::from_edges(l + 1, (1..=l).map(|v| (0, v))),
        PatternSpec::CompleteBipartite(m, n) if m >= 1 && n >= 1 => {
            Graph::from_edges(m + n, (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))))
        }
        PatternSpec::Path(l) if l >= 1 => Ok(Graph::path(l)),
        PatternSpec::Cycle(l) if l >= 3 => Ok(Graph::cycle(l)),
        PatternSpec::Fan(l) if l >= 1 => Graph::path(l).join(&Graph::empty(1)),
        PatternSpec::Wheel(l) if l >= 3 => Graph::cycle(l).join(&Graph::empty(1)),
        PatternSpec::Diamond => Graph::path(3).join(&Graph::empty(1)),
        PatternSpec::Cycle(_) | PatternSpec::Wheel(_) => bad("rim length must be at least 3"),
        _ => bad("parameters must be positive"),
    }
}

/// Lexicographically smallest induced embedding of `p` into `g`, as the
/// image of each pattern vertex.
pub fn contains_induced(g: &Graph, p: &Graph) -> Result<Option<Vec<usize>>> {
    if p.n() > g.n() {
        return Ok(None);
    }
    if p.n() > PATTERN_CAP {
        return Err(Error::SizeLimitExceeded {
            what: "induced pattern",
            size: p.n(),
            cap: PATTERN_CAP,
        });
    }
    let mut map = Vec::with_capacity(p.n());
    Ok(embed(g, p, &mut map, VertexSet::new()).then_some(map))
}

fn embed(g: &Graph, p: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
    let a = map.len();
    if a == p.n() {
        return true;
    }
    let mut cand = g.vertices() - used;
    for (b, &img) in map.iter().enumerate() {
        if p.has_edge(a, b) {
            cand &= g.neighbors(img);
        } else {
            cand -= g.neighbors(img);
        }
    }
    let need = p.degree(a);
    for w in cand {
        if g.degree(w) < need {
            continue;
        }
        map.push(w);
        let mut next = used;
        next.insert(w);
        if embed(g, p, map, next) {
            return true;
        }
        map.pop();
    }
    false
}

/// True when `map` is an induced copy of `p` in `g`.
pub fn is_induced_embedding(g: &Graph, p: &Graph, map: &[usize]) -> bool {
    if map.len() != p.n() || map.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let image: VertexSet = map.iter().collect();
    if image.len() != map.len() {
        return false;
    }
    (0..p.n()).all(|a| (a + 1..p.n()).all(|b| p.has_edge(a, b) == g.has_edge(map[a], map[b])))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub pattern: PatternSpec,
    pub name: String,
    pub embedding: Vec<usize>,
}

impl Violation {
    pub fn validates(&self, g: &Graph) -> bool {
        build_pattern(self.pattern).is_ok_and(|p| is_induced_embedding(g, &p, &self.embedding))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ForbiddenVerdict {
    pub violations: Vec<Violation>,
}

impl ForbiddenVerdict {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The patterns checked for bounds `b`, in report order.
pub fn forbidden_patterns(b: DegreeBounds) -> Vec<PatternSpec> {
    let (i, j) = (b.i(), b.j());
    let mut out = vec![
        PatternSpec::Star(j + 2),
        PatternSpec::CompleteBipartite(j + 1, j + 1),
        PatternSpec::Fan(2 * j + 3),
        PatternSpec::Wheel(2 * j + 3),
        PatternSpec::Complete(i * j + 1),
    ];
    if i >= 4 && j == 2 {
        out.push(PatternSpec::Complete(3 * i / 2 + 2));
    }
    out
}

pub fn detect_forbidden(g: &Graph, b: DegreeBounds) -> Result<ForbiddenVerdict> {
    if b.i() < 2 || b.j() < 2 {
        return Err(Error::BoundsOutOfScope {
            i: b.i(),
            j: b.j(),
            reason: "the forbidden list needs i >= 2 and j >= 2",
        });
    }
    let mut violations = Vec::new();
    for pattern in forbidden_patterns(b) {
        let found = match pattern {
            PatternSpec::Star(l) => find_star(g, l),
            PatternSpec::Complete(l) => find_clique(g, l),
            other => contains_induced(g, &build_pattern(other)?)?,
        };
        if let Some(embedding) = found {
            violations.push(Violation {
                pattern,
                name: pattern.to_string(),
                embedding,
            });
        }
    }
    Ok(ForbiddenVerdict { violations })
}

/// Smallest hub with `l` pairwise non-adjacent neighbors, then the
/// lexicographically smallest such leaves.
fn find_star(g: &Graph, l: usize) -> Option<Vec<usize>> {
    (0..g.n()).filter(|&u| g.degree(u) >= l).find_map(|u| {
        let nb = g.neighbors(u);
        if chordality::max_independent_within(g, nb).len() < l {
            return None;
        }
        let mut leaves = Vec::with_capacity(l);
        first_subset(g, nb, l, false, &mut leaves).then(|| {
            let mut m = vec![u];
            m.extend(leaves);
            m
        })
    })
}

fn find_clique(g: &Graph, l: usize) -> Option<Vec<usize>> {
    if chordality::clique_number(g) < l {
        return None;
    }
    let mut out = Vec::with_capacity(l);
    first_subset(g, g.vertices(), l, true, &mut out).then_some(out)
}

/// Lexicographically first `k`-subset of `cand` that is a clique
/// (`clique = true`) or an independent set.
fn first_subset(g: &Graph, cand: VertexSet, k: usize, clique: bool, out: &mut Vec<usize>) -> bool {
    if out.len() == k {
        return true;
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        rest.remove(v);
        if out.len() + 1 + rest.len() < k {
            return false;
        }
        let keep = if clique {
            rest & g.neighbors(v)
        } else {
            rest - g.neighbors(v)
        };
        out.push(v);
        if first_subset(g, keep, k, clique, out) {
            return true;
        }
        out.pop();
    }
    false
}

/// Neighborhood size bound `|N(u)| <= (k-1)(j+1)` with `k - 1 = ω(P[N(u)])`.
/// Returns the first vertex breaking it.
pub fn neighborhood_bound_violation(g: &Graph, j: usize) -> Option<usize> {
    (0..g.n()).find(|&u| {
        let nb = g.neighbors(u);
        let k1 = chordality::max_clique_within(g, nb).len();
        nb.len() > k1 * (j + 1)
    })
}
