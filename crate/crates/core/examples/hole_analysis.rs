//! Walks through one hole of an underlying graph: the Γ vertices, the cycle
//! they leave behind, its chords and chord components, and every statement
//! report for the hole.

use phylo::constructions::{construct, Claim, Family};
use phylo::hole_analysis::{analyze_hole, check_hole_statements, extend_path_to_hole, Cycle};
use phylo::{DegreeBounds, Graph};

fn main() -> phylo::Result<()> {
    let r = construct(Family::Hole3i(3))?;
    let d = &r.digraph;
    let hole = r
        .claimed
        .iter()
        .find_map(|c| match c {
            Claim::UnderlyingHole { vertices } => Some(vertices.clone()),
            _ => None,
        })
        .expect("hole3i claims its 3i-hole");
    println!("hole of length {}: {:?}", hole.len(), hole);

    let ctx = analyze_hole(d, &hole)?;
    println!("Γ = {:?}", ctx.gamma.to_vec());
    println!("C = {:?}", ctx.cycle.vertices());
    println!("chords = {:?}", ctx.chords);
    for comp in &ctx.chord_components {
        println!("component {:?}", comp.vertices.to_vec());
    }

    for rep in check_hole_statements(d, &hole, DegreeBounds::new(3, 2)?)? {
        println!("{:<10} {:?}", rep.statement, rep.outcome);
    }

    // Path extension inside a cycle with one chord.
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])?;
    let c = Cycle::new(&g, (0..6).collect())?;
    let h = extend_path_to_hole(&g, &c, &[1, 2, 3])?;
    println!("1-2-3 extends to the hole {:?}", h.vertices());
    Ok(())
}
