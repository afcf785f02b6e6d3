//! Chordality with certificates: a perfect elimination ordering when the
//! graph is chordal, a hole otherwise.

use phylo::chordality::{holes, is_chordal, is_perfect_elimination_ordering, maximal_cliques};
use phylo::Graph;

fn main() -> phylo::Result<()> {
    // A triangle strip with a long detour back to 0, closing two 6-holes.
    let g = Graph::from_edges(
        7,
        [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 0)],
    )?;

    let cert = is_chordal(&g);
    println!("{}", serde_json::to_string(&cert).unwrap());
    assert!(cert.validates(&g));

    for h in holes(&g, 4, None) {
        println!("hole {:?}", h.vertices());
    }

    let strip = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3), (3, 4)])?;
    let cert = is_chordal(&strip);
    let peo = cert.peo().expect("a triangle strip is chordal");
    println!("peo {peo:?} valid: {}", is_perfect_elimination_ordering(&strip, peo));

    let cliques = maximal_cliques(&strip)?;
    println!(
        "omega {} maximal cliques {:?}",
        cliques.omega,
        cliques.cliques.iter().map(|c| c.to_vec()).collect::<Vec<_>>()
    );
    Ok(())
}
