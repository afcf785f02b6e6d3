//! Worked values for the named constructions and small hand-checked graphs.

use phylo::chordality::{
    clique_graph, clique_number, find_hole, is_chordal, is_diamond_free, is_forest, is_perfect_elimination_ordering,
    maximal_cliques,
};
use phylo::constructions::{construct, expand_clique, Claim, ConstructionResult, Family};
use phylo::enumeration::{count_staircase, realize, verify, Staircase, VerifyParams};
use phylo::forbidden::{build_pattern, contains_induced, detect_forbidden, is_induced_embedding, PatternSpec};
use phylo::hole_analysis::{analyze_hole, check_hole_statements, cycle_from_hole, gamma_set, Outcome};
use phylo::iso::graphs_isomorphic;
use phylo::phylogeny::{cared_edges, competition_graph, phylogeny_graph};
use phylo::{DegreeBounds, Digraph, Error, Graph, VertexSet};

fn b(i: usize, j: usize) -> DegreeBounds {
    DegreeBounds::new(i, j).unwrap()
}

fn labels(r: &ConstructionResult, names: &[&str]) -> Vec<usize> {
    names.iter().map(|s| r.label(s)).collect()
}

fn set(r: &ConstructionResult, names: &[&str]) -> VertexSet {
    labels(r, names).into_iter().collect()
}

fn pair(r: &ConstructionResult, a: &str, c: &str) -> (usize, usize) {
    let (x, y) = (r.label(a), r.label(c));
    (x.min(y), x.max(y))
}

fn claimed_clique(r: &ConstructionResult) -> VertexSet {
    r.claimed
        .iter()
        .find_map(|c| match c {
            Claim::Clique { vertices } => Some(*vertices),
            _ => None,
        })
        .unwrap()
}

fn hole3i_cycle(r: &ConstructionResult, i: usize) -> Vec<usize> {
    let names: Vec<String> = (0..i)
        .flat_map(|j| (1..=3).map(move |k| format!("v_{{{j},{k}}}")))
        .collect();
    names.iter().map(|s| r.label(s)).collect()
}

#[test]
fn hole3i_2_underlying_graph() {
    let r = construct(Family::Hole3i(2)).unwrap();
    assert_eq!(r.digraph.n(), 7);
    assert_eq!(r.digraph.arc_count(), 8);
    let u = r.digraph.underlying_graph();
    let cyc = hole3i_cycle(&r, 2);
    for k in 0..6 {
        assert!(u.has_edge(cyc[k], cyc[(k + 1) % 6]));
    }
    assert!(u.has_edge(r.label("v_{0,2}"), r.label("u")));
    assert!(u.has_edge(r.label("v_{1,2}"), r.label("u")));
    assert_eq!(u.edge_count(), 8);
}

#[test]
fn hole3i_topological_order_and_induced_hole() {
    let r = construct(Family::Hole3i(2)).unwrap();
    let d = &r.digraph;
    let order = d.topological_order().unwrap();
    let pos: Vec<usize> = {
        let mut p = vec![0; d.n()];
        for (k, &v) in order.iter().enumerate() {
            p[v] = k;
        }
        p
    };
    assert!(d.arcs().iter().all(|&(a, c)| pos[a] < pos[c]));

    let mut rest = VertexSet::full(7);
    rest.remove(r.label("u"));
    let (dh, lab) = d.induced(&rest).unwrap();
    let ug = dh.underlying_graph();
    let cyc: Vec<usize> = hole3i_cycle(&r, 2)
        .iter()
        .map(|v| lab.iter().position(|x| x == v).unwrap())
        .collect();
    assert!(phylo::chordality::Hole::new(&ug, cyc).is_ok());
}

#[test]
fn cyclic_input_has_witness() {
    let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    match d.topological_order() {
        Err(Error::CyclicInput { cycle }) => assert_eq!(cycle.to_string(), "0→1→2→0"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn figure4_bounds_competition_and_phylogeny() {
    let r = construct(Family::Clique22).unwrap();
    let d = &r.digraph;
    assert!(d.satisfies(b(2, 2)));
    let c = competition_graph(d).unwrap();
    assert_eq!(c.edges(), vec![pair(&r, "A", "E"), pair(&r, "B", "C")]);
    let p = phylogeny_graph(d).unwrap();
    assert!(p.is_clique(&set(&r, &["A", "B", "C", "E"])));
    assert_eq!(clique_number(&p), 4);

    // K_4 plus a vertex adjacent to exactly B and C.
    let target = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 1), (4, 2)]).unwrap();
    assert!(graphs_isomorphic(&p, &target).unwrap().is_some());
    assert!(contains_induced(&p, &Graph::complete(5)).unwrap().is_none());
}

#[test]
fn star_with_three_leaves_breaks_outdegree() {
    let d = Digraph::from_arcs(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(!d.satisfies(b(1, 2)));
}

#[test]
fn figure5_and_figure6() {
    let r5 = construct(Family::Clique32).unwrap();
    let p5 = phylogeny_graph(&r5.digraph).unwrap();
    assert!(p5.is_clique(&set(&r5, &["v_1", "v_2", "v_3", "v_4", "v_5", "v_6"])));
    assert_eq!(clique_number(&p5), 6);
    assert!(r5.digraph.satisfies(b(3, 2)));

    let r6 = construct(Family::Clique2k2(2)).unwrap();
    assert!(r6.digraph.satisfies(b(4, 2)));
    assert_eq!(clique_number(&phylogeny_graph(&r6.digraph).unwrap()), 7);
}

#[test]
fn small_isomorphism_cases() {
    let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    assert!(graphs_isomorphic(&Graph::cycle(4), &k22).unwrap().is_some());
    let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(graphs_isomorphic(&claw, &Graph::path(4)).unwrap().is_none());
}

#[test]
fn cared_edges_of_hole3i_2() {
    let r = construct(Family::Hole3i(2)).unwrap();
    let cared = cared_edges(&r.digraph).unwrap();
    let got: Vec<((usize, usize), Vec<usize>)> = cared.iter().map(|(e, s)| (e, s.to_vec())).collect();
    let mut want = vec![
        (pair(&r, "v_{0,2}", "v_{1,1}"), vec![r.label("v_{0,3}")]),
        (pair(&r, "v_{1,2}", "v_{0,1}"), vec![r.label("v_{1,3}")]),
        (pair(&r, "v_{0,2}", "v_{1,2}"), vec![r.label("u")]),
    ];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn hole3i_peo_validates_for_small_i() {
    for i in 2..=6 {
        let r = construct(Family::Hole3i(i)).unwrap();
        let p = phylogeny_graph(&r.digraph).unwrap();
        assert!(is_chordal(&p).is_chordal());
        let mut order = vec!["u".to_string()];
        for k in [3, 1, 2] {
            order.extend((0..i).map(|j| format!("v_{{{j},{k}}}")));
        }
        let order: Vec<usize> = order.iter().map(|s| r.label(s)).collect();
        assert!(is_perfect_elimination_ordering(&p, &order), "i = {i}");
    }
}

#[test]
fn hole_finding_cases() {
    let c5 = Graph::cycle(5);
    assert_eq!(is_chordal(&c5).hole().unwrap().len(), 5);
    assert!(find_hole(&Graph::complete(4)).is_none());
    assert!(is_chordal(&Graph::path(6)).is_chordal());

    let split = Graph::cycle(6).with_edge(0, 3).unwrap();
    assert_eq!(find_hole(&split).unwrap().len(), 4);

    let wheel = build_pattern(PatternSpec::Wheel(7)).unwrap();
    let h = find_hole(&wheel).unwrap();
    assert_eq!(h.len(), 7);
    assert!(!h.vertex_set().contains(7));
}

#[test]
fn clique_values() {
    let e5 = Graph::empty(5);
    let c = maximal_cliques(&e5).unwrap();
    assert_eq!(c.omega, 1);
    assert_eq!(c.cliques.len(), 5);

    let (k, _) = clique_graph(&Graph::complete(3)).unwrap();
    assert_eq!(k.n(), 1);
    let (k, _) = clique_graph(&Graph::path(4)).unwrap();
    assert!(graphs_isomorphic(&k, &Graph::path(3)).unwrap().is_some());
    let (k, _) = clique_graph(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()).unwrap();
    assert_eq!((k.n(), k.edge_count()), (2, 0));

    let diamond = Graph::from_edges(4, Graph::complete(4).edges().into_iter().filter(|&e| e != (0, 1))).unwrap();
    assert!(!is_diamond_free(&diamond));
    assert!(is_forest(&Graph::path(5)) && is_diamond_free(&Graph::path(5)));

    let r = construct(Family::BipartiteRealizer(2)).unwrap();
    assert!(!is_forest(&phylogeny_graph(&r.digraph).unwrap()));
}

#[test]
fn gamma_and_cycle_of_hole3i() {
    let r = construct(Family::Hole3i(2)).unwrap();
    let hole = hole3i_cycle(&r, 2);
    assert_eq!(gamma_set(&r.digraph, &hole).unwrap(), set(&r, &["v_{0,3}", "v_{1,3}"]));
    let c = cycle_from_hole(&r.digraph, &hole).unwrap();
    let want = phylo::hole_analysis::Cycle::new(
        &phylogeny_graph(&r.digraph).unwrap(),
        labels(&r, &["v_{0,1}", "v_{0,2}", "v_{1,1}", "v_{1,2}"]),
    )
    .unwrap();
    assert_eq!(c, want);
}

#[test]
fn hole3i_cycle_chords_come_from_u() {
    // C = v01 v02 v11 v12 for i = 2; v02 and v12 share the out-neighbor u,
    // which lies off the hole, so the cycle has exactly that one chord.
    let r = construct(Family::Hole3i(2)).unwrap();
    let ctx = analyze_hole(&r.digraph, &hole3i_cycle(&r, 2)).unwrap();
    assert_eq!(ctx.cycle.len(), 4);
    assert_eq!(ctx.chords, vec![pair(&r, "v_{0,2}", "v_{1,2}")]);
    assert_eq!(
        ctx.cared.caring(r.label("v_{0,2}"), r.label("v_{1,2}")),
        Some(set(&r, &["u"]))
    );

    let r3 = construct(Family::Hole3i(3)).unwrap();
    let ctx = analyze_hole(&r3.digraph, &hole3i_cycle(&r3, 3)).unwrap();
    assert_eq!(ctx.gamma.len(), 3);
    assert_eq!(ctx.cycle.len(), 6);
    let tops = set(&r3, &["v_{0,2}", "v_{1,2}", "v_{2,2}"]);
    assert_eq!(ctx.chords.len(), 3);
    assert!(ctx.chords.iter().all(|&(x, y)| tops.contains(x) && tops.contains(y)));
}

#[test]
fn hole3i_statement_reports() {
    let r = construct(Family::Hole3i(2)).unwrap();
    let reports = check_hole_statements(&r.digraph, &hole3i_cycle(&r, 2), b(2, 2)).unwrap();
    assert!(reports.iter().all(|x| x.outcome != Outcome::Fail));
    let t11 = reports.iter().find(|x| x.statement == "thm_1_1").unwrap();
    assert_eq!(t11.outcome, Outcome::VacuousPass);
}

#[test]
fn pattern_shapes() {
    let s = build_pattern(PatternSpec::Star(4)).unwrap();
    assert_eq!((s.n(), s.degree(0)), (5, 4));
    let f3 = build_pattern(PatternSpec::Fan(3)).unwrap();
    assert!(graphs_isomorphic(&f3, &build_pattern(PatternSpec::Diamond).unwrap())
        .unwrap()
        .is_some());
    let w = build_pattern(PatternSpec::Wheel(7)).unwrap();
    assert_eq!((w.n(), w.degree(7)), (8, 7));
    let k1 = Graph::complete(1);
    assert_eq!(contains_induced(&Graph::path(3), &k1).unwrap(), Some(vec![0]));
}

#[test]
fn figure3_wheel_embedding() {
    let r = construct(Family::WheelRealizer(3)).unwrap();
    let p = phylogeny_graph(&r.digraph).unwrap();
    let wheel = build_pattern(PatternSpec::Wheel(8)).unwrap();
    let mut claimed = labels(&r, &["v_1", "v_2", "v_3", "v_4", "w_1", "w_2", "w_3", "w_4"]);
    claimed.push(r.label("u"));
    assert!(is_induced_embedding(&p, &wheel, &claimed));
    assert!(contains_induced(&p, &wheel).unwrap().is_some());

    let r = construct(Family::FanRealizer(3)).unwrap();
    let p = phylogeny_graph(&r.digraph).unwrap();
    assert!(contains_induced(&p, &build_pattern(PatternSpec::Fan(8)).unwrap())
        .unwrap()
        .is_some());
}

#[test]
fn detect_forbidden_values() {
    let k33 = build_pattern(PatternSpec::CompleteBipartite(3, 3)).unwrap();
    let v = detect_forbidden(&k33, b(2, 2)).unwrap();
    assert!(v
        .violations
        .iter()
        .any(|x| x.pattern == PatternSpec::CompleteBipartite(3, 3)));
    assert!(detect_forbidden(&Graph::complete(7), b(4, 2)).unwrap().is_clean());
    let v = detect_forbidden(&Graph::complete(8), b(4, 2)).unwrap();
    assert!(v.violations.iter().any(|x| x.pattern == PatternSpec::Complete(8)));
}

#[test]
fn construction_sizes_and_figures() {
    let r = construct(Family::BipartiteRealizer(2)).unwrap();
    let p = phylogeny_graph(&r.digraph).unwrap();
    let k32 = build_pattern(PatternSpec::CompleteBipartite(3, 2)).unwrap();
    assert!(is_induced_embedding(
        &p,
        &k32,
        &labels(&r, &["u_1", "u_2", "u_3", "v_1", "v_2"])
    ));
    let r = construct(Family::Clique2k2(2)).unwrap();
    assert_eq!(clique_number(&phylogeny_graph(&r.digraph).unwrap()), 7);
}

#[test]
fn expand_clique_values() {
    let r = construct(Family::Clique22).unwrap();
    let (d, k) = expand_clique(&r.digraph, claimed_clique(&r), 1).unwrap();
    assert!(d.satisfies(b(3, 2)));
    assert_eq!(k.len(), 5);
    assert!(phylogeny_graph(&d).unwrap().is_clique(&k));

    let r = construct(Family::Clique2k2(2)).unwrap();
    let (d, k) = expand_clique(&r.digraph, claimed_clique(&r), 1).unwrap();
    assert!(d.satisfies(b(5, 2)));
    assert_eq!(k.len(), 8);
    assert_eq!(clique_number(&phylogeny_graph(&d).unwrap()), 3 * 5 / 2 + 1);

    let (d0, k0) = expand_clique(&r.digraph, claimed_clique(&r), 0).unwrap();
    assert_eq!(d0, r.digraph);
    assert_eq!(k0, claimed_clique(&r));
}

#[test]
fn staircase_values() {
    assert_eq!(Staircase::new(3, b(1, 1)).unwrap().count(), 5);
    assert_eq!(Staircase::new(3, b(2, 2)).unwrap().count(), 8);
    let one: Vec<Digraph> = Staircase::new(1, b(1, 1)).unwrap().collect();
    assert_eq!(one, vec![Digraph::empty(1)]);
}

#[test]
fn verify_values() {
    let r = verify("thm_1_4", &VerifyParams::staircase(b(2, 2), 6)).unwrap();
    assert_eq!(r.verdict, Outcome::Pass);
    assert!(r.counterexamples.is_empty());
    let count: u64 = (1..=6).map(|n| count_staircase(n, b(2, 2)).unwrap()).sum();
    assert_eq!(r.instances_checked, count);

    let r = verify("char_1j", &VerifyParams::staircase(b(1, 2), 6)).unwrap();
    assert_eq!(r.verdict, Outcome::Pass);
    assert!(r.tally("char_1j_forward").checked > 0);
    assert!(r.tally("char_1j_converse").checked > 0);

    let r = verify("thm_omega_ij", &VerifyParams::staircase(b(2, 2), 6)).unwrap();
    assert_eq!(r.verdict, Outcome::Pass);
    assert_eq!(r.observations["max_omega"], 4);
}

#[test]
fn realize_values() {
    let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let d = realize(&claw, b(1, 2), 0).unwrap().unwrap();
    assert_eq!(phylogeny_graph(&d).unwrap(), claw);
    let star = construct(Family::StarRealizer(2)).unwrap();
    assert!(graphs_isomorphic(&phylogeny_graph(&star.digraph).unwrap(), &claw)
        .unwrap()
        .is_some());

    let k14 = build_pattern(PatternSpec::Star(4)).unwrap();
    assert!(realize(&k14, b(2, 2), 0).unwrap().is_none());

    for (i, j) in [(1, 1), (3, 2)] {
        assert_eq!(realize(&Graph::empty(1), b(i, j), 0).unwrap(), Some(Digraph::empty(1)));
    }
}
