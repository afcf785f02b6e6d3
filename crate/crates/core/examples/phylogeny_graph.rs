//! Competition, underlying and phylogeny graphs of a small food web, with
//! the cared edges and who takes care of them.

use phylo::phylogeny::{cared_edges, competition_graph, phylogeny_graph};
use phylo::Digraph;

fn main() -> phylo::Result<()> {
    // 0 = A, 1 = B, 2 = C, 3 = E, 4 = X
    let d = Digraph::from_arcs(5, [(0, 1), (0, 2), (3, 1), (2, 3), (2, 4), (1, 4)])?;

    let u = d.underlying_graph();
    let c = competition_graph(&d)?;
    let p = phylogeny_graph(&d)?;
    println!("U(D) edges: {:?}", u.edges());
    println!("C(D) edges: {:?}", c.edges());
    println!("P(D) edges: {:?}", p.edges());

    for ((a, b), caring) in cared_edges(&d)?.iter() {
        println!("edge {a}{b} is cared for by {:?}", caring.to_vec());
    }

    // A directed cycle is rejected with a witness.
    let cyclic = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)])?;
    if let Err(e) = phylogeny_graph(&cyclic) {
        println!("{e}");
    }
    Ok(())
}
