//! Every extremal family, its claims, and the clique expansion step.

use phylo::chordality::clique_number;
use phylo::cli::digraph_dot;
use phylo::constructions::{construct, expand_clique, Claim, Family};
use phylo::phylogeny::phylogeny_graph;

fn main() -> phylo::Result<()> {
    let families = [
        Family::Hole3i(2),
        Family::StarRealizer(2),
        Family::BipartiteRealizer(2),
        Family::FanRealizer(2),
        Family::WheelRealizer(2),
        Family::Clique22,
        Family::Clique32,
        Family::Clique2k2(2),
    ];
    for f in families {
        let r = construct(f)?;
        let omega = clique_number(&phylogeny_graph(&r.digraph)?);
        println!(
            "{:<22} n={:<3} bounds={:?} ω={} claims ok: {}",
            r.family,
            r.digraph.n(),
            r.bounds,
            omega,
            r.failed_claims().is_empty()
        );
    }

    print!(
        "{}",
        digraph_dot(
            &construct(Family::Hole3i(2))?.digraph,
            Some(&construct(Family::Hole3i(2))?.names())
        )
    );

    let r = construct(Family::Clique22)?;
    let k = r
        .claimed
        .iter()
        .find_map(|c| match c {
            Claim::Clique { vertices } => Some(*vertices),
            _ => None,
        })
        .expect("clique_22 claims its K_4");
    for m in 1..=4 {
        let (d, big) = expand_clique(&r.digraph, k, m)?;
        println!(
            "m={m}: max indegree {}, K_{} in P(D): {}",
            d.max_indegree(),
            big.len(),
            phylogeny_graph(&d)?.is_clique(&big)
        );
    }
    Ok(())
}
