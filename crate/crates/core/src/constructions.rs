//! Explicit digraph families.
//!
//! Each family is written with its natural vertex names (`u`, `v_{0,1}`,
//! `w_3`, ...). Labels are handed out by sorting the names, so a family's
//! labelling never depends on construction order.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::chordality;
use crate::error::{Error, Result};
use crate::forbidden::{build_pattern, is_induced_embedding, PatternSpec};
use crate::graph::{DegreeBounds, Digraph};
use crate::phylogeny::phylogeny_unchecked;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(i, 2)` digraph whose underlying graph has a `3i`-hole but whose
    /// phylogeny graph is chordal. Needs `i >= 2`.
    Hole3i(usize),
    /// `(1, j)` digraph with `P(D) ≅ K_{1,j+1}`.
    StarRealizer(usize),
    /// `(2, j)` digraph with an induced `K_{j+1,j}`. Needs `j >= 2`.
    BipartiteRealizer(usize),
    /// `(2, j)` digraph with an induced `P_{2j+2} ∨ I_1`. Needs `j >= 2`.
    FanRealizer(usize),
    /// `(2, j)` digraph with an induced `C_{2j+2} ∨ I_1`. Needs `j >= 2`.
    WheelRealizer(usize),
    /// `(2, 2)` digraph with `ω(P(D)) = 4`.
    Clique22,
    /// `(3, 2)` digraph with `ω(P(D)) = 6`.
    Clique32,
    /// `(2k, 2)` digraph with `ω(P(D)) = 3k + 1`. Needs `k >= 2`.
    Clique2k2(usize),
}

/// Family names accepted by [`Family::parse`].
pub const FAMILY_NAMES: &[&str] = &[
    "hole3i",
    "star_realizer",
    "bipartite_realizer",
    "fan_realizer",
    "wheel_realizer",
    "clique_22",
    "clique_32",
    "clique_2k2",
];

impl Family {
    pub fn parse(name: &str, param: Option<usize>) -> Result<Family> {
        let need =
            |p: Option<usize>| p.ok_or_else(|| Error::InvalidParams(format!("family `{name}` needs a parameter")));
        let fam = match name {
            "hole3i" => Family::Hole3i(need(param)?),
            "star_realizer" => Family::StarRealizer(need(param)?),
            "bipartite_realizer" => Family::BipartiteRealizer(need(param)?),
            "fan_realizer" => Family::FanRealizer(need(param)?),
            "wheel_realizer" => Family::WheelRealizer(need(param)?),
            "clique_22" => Family::Clique22,
            "clique_32" => Family::Clique32,
            "clique_2k2" => Family::Clique2k2(need(param)?),
            _ => {
                return Err(Error::InvalidParams(format!(
                    "unknown family `{name}`; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        };
        if param.is_some() && matches!(fam, Family::Clique22 | Family::Clique32) {
            return Err(Error::InvalidParams(format!("family `{name}` takes no parameter")));
        }
        Ok(fam)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Hole3i(i) => write!(f, "hole3i({i})"),
            Family::StarRealizer(j) => write!(f, "star_realizer({j})"),
            Family::BipartiteRealizer(j) => write!(f, "bipartite_realizer({j})"),
            Family::FanRealizer(j) => write!(f, "fan_realizer({j})"),
            Family::WheelRealizer(j) => write!(f, "wheel_realizer({j})"),
            Family::Clique22 => write!(f, "clique_22"),
            Family::Clique32 => write!(f, "clique_32"),
            Family::Clique2k2(k) => write!(f, "clique_2k2({k})"),
        }
    }
}

/// A property a family is built to have, checkable on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum Claim {
    Bounds {
        i: usize,
        j: usize,
    },
    /// The sequence is a hole of `U(D)`.
    UnderlyingHole {
        vertices: Vec<usize>,
    },
    PhylogenyChordal,
    /// The order is a perfect elimination ordering of `P(D)`.
    Peo {
        order: Vec<usize>,
    },
    CliqueNumber {
        omega: usize,
    },
    Clique {
        vertices: VertexSet,
    },
    /// `embedding[k]` is the image of pattern vertex `k` in an induced copy.
    InducedPattern {
        pattern: PatternSpec,
        embedding: Vec<usize>,
    },
}

impl Claim {
    pub fn holds(&self, d: &Digraph) -> bool {
        let p = || phylogeny_unchecked(d);
        match self {
            Claim::Bounds { i, j } => DegreeBounds::new(*i, *j).is_ok_and(|b| d.is_acyclic() && d.satisfies(b)),
            Claim::UnderlyingHole { vertices } => {
                chordality::Hole::new(&d.underlying_graph(), vertices.clone()).is_ok()
            }
            Claim::PhylogenyChordal => chordality::is_chordal(&p()).is_chordal(),
            Claim::Peo { order } => chordality::is_perfect_elimination_ordering(&p(), order),
            Claim::CliqueNumber { omega } => chordality::clique_number(&p()) == *omega,
            Claim::Clique { vertices } => p().is_clique(vertices),
            Claim::InducedPattern { pattern, embedding } => {
                build_pattern(*pattern).is_ok_and(|pat| is_induced_embedding(&p(), &pat, embedding))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionResult {
    pub family: String,
    #[serde(skip)]
    pub digraph: Digraph,
    /// Vertex name to label; labels follow the sorted names.
    pub name_map: BTreeMap<String, usize>,
    pub bounds: (usize, usize),
    pub claimed: Vec<Claim>,
}

impl ConstructionResult {
    /// Name of each label, in label order.
    pub fn names(&self) -> Vec<String> {
        let mut out = vec![String::new(); self.digraph.n()];
        for (name, &v) in &self.name_map {
            out[v] = name.clone();
        }
        out
    }

    pub fn label(&self, name: &str) -> usize {
        self.name_map[name]
    }

    /// Claims that fail to re-validate.
    pub fn failed_claims(&self) -> Vec<&Claim> {
        self.claimed.iter().filter(|c| !c.holds(&self.digraph)).collect()
    }
}

struct Named {
    names: Vec<String>,
    arcs: Vec<(String, String)>,
}

impl Named {
    fn new() -> Self {
        Named {
            names: Vec::new(),
            arcs: Vec::new(),
        }
    }

    fn vertex(&mut self, name: impl Into<String>) {
        self.names.push(name.into());
    }

    fn arc(&mut self, u: impl Into<String>, v: impl Into<String>) {
        self.arcs.push((u.into(), v.into()));
    }

    fn build(self) -> Result<(Digraph, BTreeMap<String, usize>)> {
        let mut sorted = self.names;
        sorted.sort();
        sorted.dedup();
        let map: BTreeMap<String, usize> = sorted.into_iter().enumerate().map(|(k, s)| (s, k)).collect();
        let arcs = self.arcs.iter().map(|(u, v)| (map[u], map[v]));
        Ok((Digraph::from_arcs(map.len(), arcs)?, map))
    }
}

type PendingClaim = Box<dyn Fn(&BTreeMap<String, usize>) -> Claim>;

pub fn construct(family: Family) -> Result<ConstructionResult> {
    let bad = |what: &str| Err(Error::InvalidParams(format!("{family}: {what}")));
    let mut g = Named::new();
    let bounds;
    // Claims are written against names and resolved after labelling.
    let mut pending: Vec<PendingClaim> = Vec::new();
    let labels = |names: Vec<String>| move |m: &BTreeMap<String, usize>| names.iter().map(|s| m[s]).collect::<Vec<_>>();

    match family {
        Family::Hole3i(i) => {
            if i < 2 {
                return bad("i must be at least 2");
            }
            bounds = (i, 2);
            let v = |j: usize, k: usize| format!("v_{{{j},{k}}}");
            g.vertex("u");
            for j in 0..i {
                for k in 1..=3 {
                    g.vertex(v(j, k));
                }
            }
            for j in 0..i {
                let prev = (j + i - 1) % i;
                g.arc(v(j, 1), v(j, 2));
                g.arc(v(j, 2), v(j, 3));
                g.arc(v(j, 1), v(prev, 3));
                g.arc(v(j, 2), "u");
            }
            let hole: Vec<String> = (0..i).flat_map(|j| (1..=3).map(move |k| v(j, k))).collect();
            let mut peo = vec!["u".to_string()];
            for k in [3, 1, 2] {
                peo.extend((0..i).map(|j| v(j, k)));
            }
            let hole_l = labels(hole);
            let peo_l = labels(peo);
            pending.push(Box::new(move |m| Claim::UnderlyingHole { vertices: hole_l(m) }));
            pending.push(Box::new(|_| Claim::PhylogenyChordal));
            pending.push(Box::new(move |m| Claim::Peo { order: peo_l(m) }));
        }
        Family::StarRealizer(j) => {
            if j < 1 {
                return bad("j must be at least 1");
            }
            bounds = (1, j);
            g.vertex("u");
            g.vertex("v");
            g.arc("u", "v");
            let mut emb = vec!["v".to_string(), "u".to_string()];
            for k in 1..=j {
                let w = format!("w_{k}");
                g.vertex(w.clone());
                g.arc("v", w.clone());
                emb.push(w);
            }
            let emb_l = labels(emb);
            pending.push(Box::new(move |m| Claim::InducedPattern {
                pattern: PatternSpec::Star(j + 1),
                embedding: emb_l(m),
            }));
        }
        Family::BipartiteRealizer(j) => {
            if j < 2 {
                return bad("j must be at least 2");
            }
            bounds = (2, j);
            let u = |l: usize| format!("u_{l}");
            let v = |l: usize| format!("v_{l}");
            let w = |l: usize, m: usize| format!("w_{{{l},{m}}}");
            for l in 1..=j + 1 {
                g.vertex(u(l));
            }
            for l in 1..=j {
                g.vertex(v(l));
                for m in 1..=j {
                    g.vertex(w(l, m));
                }
            }
            for l in 1..=j {
                g.arc(u(l), v(l));
                for m in 1..=j {
                    g.arc(v(l), w(l, m));
                    if l != m {
                        g.arc(u(l), w(m, l));
                    }
                }
                g.arc(u(j + 1), w(l, l));
            }
            let emb: Vec<String> = (1..=j + 1).map(u).chain((1..=j).map(v)).collect();
            let emb_l = labels(emb);
            pending.push(Box::new(move |m| Claim::InducedPattern {
                pattern: PatternSpec::CompleteBipartite(j + 1, j),
                embedding: emb_l(m),
            }));
        }
        Family::FanRealizer(j) | Family::WheelRealizer(j) => {
            if j < 2 {
                return bad("j must be at least 2");
            }
            bounds = (2, j);
            let w = |k: usize| format!("w_{k}");
            let last = 2 * j - 2;
            for name in ["u", "v_1", "v_2", "v_3", "v_4"] {
                g.vertex(name);
            }
            for k in 1..=last {
                g.vertex(w(k));
                if k % 2 == 0 {
                    g.arc("u", w(k));
                }
                if k < last {
                    g.arc(w(k), w(k + 1));
                }
            }
            for (a, b) in [
                ("v_1", "u"),
                ("v_2", "u"),
                ("v_2", "v_3"),
                ("v_3", "v_4"),
                ("u", "v_4"),
                ("v_4", "w_1"),
            ] {
                g.arc(a, b);
            }
            let mut rim: Vec<String> = ["v_1", "v_2", "v_3", "v_4"].iter().map(|s| s.to_string()).collect();
            rim.extend((1..=last).map(w));
            rim.push("u".into());
            let rim_l = labels(rim);
            let pattern = if let Family::WheelRealizer(_) = family {
                g.vertex("x");
                g.arc("v_1", "x");
                g.arc(w(last), "x");
                PatternSpec::Wheel(2 * j + 2)
            } else {
                PatternSpec::Fan(2 * j + 2)
            };
            pending.push(Box::new(move |m| Claim::InducedPattern {
                pattern,
                embedding: rim_l(m),
            }));
        }
        Family::Clique22 => {
            bounds = (2, 2);
            for name in ["A", "B", "C", "E", "X"] {
                g.vertex(name);
            }
            for (a, b) in [("A", "B"), ("A", "C"), ("E", "B"), ("C", "E"), ("C", "X"), ("B", "X")] {
                g.arc(a, b);
            }
            let k = labels(["A", "B", "C", "E"].iter().map(|s| s.to_string()).collect());
            pending.push(Box::new(move |m| Claim::Clique {
                vertices: k(m).iter().collect(),
            }));
            pending.push(Box::new(|_| Claim::CliqueNumber { omega: 4 }));
        }
        Family::Clique32 => {
            bounds = (3, 2);
            let vs: Vec<String> = (1..=6).map(|k| format!("v_{k}")).collect();
            for name in vs.iter().map(String::as_str).chain(["x", "y"]) {
                g.vertex(name);
            }
            for (a, b) in [
                ("v_1", "v_2"),
                ("v_1", "y"),
                ("v_2", "x"),
                ("v_2", "v_5"),
                ("v_3", "v_2"),
                ("v_3", "v_6"),
                ("v_4", "v_2"),
                ("v_5", "y"),
                ("v_5", "v_6"),
                ("v_4", "v_6"),
                ("v_6", "y"),
                ("v_6", "x"),
            ] {
                g.arc(a, b);
            }
            let k = labels(vs);
            pending.push(Box::new(move |m| Claim::Clique {
                vertices: k(m).iter().collect(),
            }));
            pending.push(Box::new(|_| Claim::CliqueNumber { omega: 6 }));
        }
        Family::Clique2k2(k) => {
            if k < 2 {
                return bad("k must be at least 2");
            }
            bounds = (2 * k, 2);
            let x = |a: usize| format!("x_{a}");
            let y = |a: usize| format!("y_{a}");
            for name in ["u", "v", "w", "z"] {
                g.vertex(name);
            }
            for (a, b) in [("u", "v"), ("u", "w"), ("v", "w"), ("w", "z")] {
                g.arc(a, b);
            }
            for a in 1..=2 * k - 1 {
                g.vertex(x(a));
                g.arc(x(a), "v");
                g.arc(x(a), if a < k { "w" } else { "z" });
            }
            for a in 1..k {
                g.vertex(y(a));
                g.arc(y(a), "w");
                g.arc(y(a), "z");
            }
            let mut clique: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
            clique.extend((1..=2 * k - 1).map(x));
            clique.extend((1..k).map(y));
            let cl = labels(clique);
            pending.push(Box::new(move |m| Claim::Clique {
                vertices: cl(m).iter().collect(),
            }));
            pending.push(Box::new(move |_| Claim::CliqueNumber { omega: 3 * k + 1 }));
        }
    }

    let (digraph, name_map) = g.build()?;
    let mut claimed = vec![Claim::Bounds {
        i: bounds.0,
        j: bounds.1,
    }];
    claimed.extend(pending.iter().map(|f| f(&name_map)));
    let result = ConstructionResult {
        family: family.to_string(),
        digraph,
        name_map,
        bounds,
        claimed,
    };
    debug_assert!(
        result.failed_claims().is_empty(),
        "{family}: {:?}",
        result.failed_claims()
    );
    Ok(result)
}

/// Applies the clique-growing step `m` times: each step adds a fresh vertex
/// copying the out-arcs of the lexicographically smallest source of
/// `D[clique]` that has an out-neighbor, and adds it to the clique. The
/// returned set is the grown clique.
pub fn expand_clique(d: &Digraph, clique: VertexSet, m: usize) -> Result<(Digraph, VertexSet)> {
    d.ensure_acyclic()?;
    if let Some(v) = clique.iter().find(|&v| v >= d.n()) {
        return Err(Error::OutOfRange { vertex: v, n: d.n() });
    }
    if clique.is_empty() {
        return Err(Error::PreconditionViolated("the clique is empty".into()));
    }
    if !phylogeny_unchecked(d).is_clique(&clique) {
        return Err(Error::PreconditionViolated(
            "the vertex set is not a clique of P(D)".into(),
        ));
    }
    let mut d = d.clone();
    let mut clique = clique;
    for _ in 0..m {
        let source = clique
            .iter()
            .find(|&v| (d.in_neighbors(v) & clique).is_empty() && d.outdegree(v) > 0)
            .ok_or_else(|| Error::PreconditionViolated("no source of the clique has an out-neighbor".into()))?;
        let w = d.n();
        d = d.with_vertices(1)?;
        for x in d.out_neighbors(source) {
            d.push_arc(w, x);
        }
        clique.insert(w);
    }
    Ok((d, clique))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phylogeny::phylogeny_graph;

    #[test]
    fn every_family_validates() {
        let fams = [
            Family::Hole3i(2),
            Family::Hole3i(5),
            Family::StarRealizer(1),
            Family::StarRealizer(3),
            Family::BipartiteRealizer(2),
            Family::BipartiteRealizer(3),
            Family::FanRealizer(2),
            Family::FanRealizer(3),
            Family::WheelRealizer(2),
            Family::WheelRealizer(4),
            Family::Clique22,
            Family::Clique32,
            Family::Clique2k2(2),
            Family::Clique2k2(3),
        ];
        for f in fams {
            let r = construct(f).unwrap();
            assert!(r.failed_claims().is_empty(), "{f}");
        }
    }

    #[test]
    fn hole3i_2_shape() {
        let r = construct(Family::Hole3i(2)).unwrap();
        assert_eq!((r.digraph.n(), r.digraph.arc_count()), (7, 8));
        assert_eq!(r.label("u"), 0);
        assert_eq!(r.label("v_{0,1}"), 1);
    }

    #[test]
    fn figure3_arcs() {
        let r = construct(Family::FanRealizer(3)).unwrap();
        let names = r.names();
        let mut arcs: Vec<String> = r
            .digraph
            .arcs()
            .into_iter()
            .map(|(a, b)| format!("{}->{}", names[a], names[b]))
            .collect();
        arcs.sort();
        assert_eq!(
            arcs,
            vec![
                "u->v_4", "u->w_2", "u->w_4", "v_1->u", "v_2->u", "v_2->v_3", "v_3->v_4", "v_4->w_1", "w_1->w_2",
                "w_2->w_3", "w_3->w_4"
            ]
        );
    }

    #[test]
    fn parameter_checks() {
        assert!(construct(Family::Hole3i(1)).is_err());
        assert!(construct(Family::Clique2k2(1)).is_err());
        assert!(Family::parse("clique_22", Some(3)).is_err());
        assert!(Family::parse("hole3i", None).is_err());
        assert!(Family::parse("nope", None).is_err());
        assert_eq!(Family::parse("clique_2k2", Some(2)).unwrap(), Family::Clique2k2(2));
    }

    #[test]
    fn expand_clique22() {
        let r = construct(Family::Clique22).unwrap();
        let k4: VertexSet = ["A", "B", "C", "E"].iter().map(|s| r.label(s)).collect();
        let (d, k) = expand_clique(&r.digraph, k4, 1).unwrap();
        assert!(d.satisfies(DegreeBounds::new(3, 2).unwrap()));
        assert_eq!(k.len(), 5);
        assert!(phylogeny_graph(&d).unwrap().is_clique(&k));

        let (same, _) = expand_clique(&r.digraph, k4, 0).unwrap();
        assert_eq!(same, r.digraph);
    }

    #[test]
    fn expand_needs_an_out_arc() {
        let d = Digraph::empty(2);
        assert!(matches!(
            expand_clique(&d, VertexSet::singleton(0), 1),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            expand_clique(&d, [0, 1].iter().collect(), 1),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
