//! Looks for digraphs whose phylogeny graph is a given graph.

use phylo::cli::write_digraph;
use phylo::enumeration::realize;
use phylo::{DegreeBounds, Graph};

fn main() -> phylo::Result<()> {
    let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)])?;
    let star4 = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])?;
    let c4 = Graph::cycle(4);

    let cases = [
        ("K_{1,3}", &claw, DegreeBounds::new(1, 2)?, 0),
        ("K_{1,4}", &star4, DegreeBounds::new(2, 2)?, 0),
        ("C_4", &c4, DegreeBounds::new(2, 2)?, 0),
        ("C_4 induced", &c4, DegreeBounds::new(2, 2)?, 1),
    ];
    for (name, g, b, extra) in cases {
        match realize(g, b, extra)? {
            Some(d) => print!("{name} as a {b} phylogeny graph:\n{}", write_digraph(&d)),
            None => println!("{name}: no {b} digraph on {} vertices", g.n() + extra),
        }
    }
    Ok(())
}
