//! Clique number, independent sets, clique graphs and small-graph
//! isomorphism.

use phylo::chordality::{clique_graph, clique_number, is_forest, max_independent_within};
use phylo::iso::{canonical_code, graphs_isomorphic};
use phylo::{Graph, VertexSet};

fn main() -> phylo::Result<()> {
    let c5 = Graph::cycle(5);
    let pentagram = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])?;
    println!("ω(C5) = {}", clique_number(&c5));
    println!("α(C5) = {}", max_independent_within(&c5, VertexSet::full(5)).len());

    let map = graphs_isomorphic(&c5, &pentagram)?.expect("both are 5-cycles");
    println!("C5 -> pentagram: {map:?}");
    assert_eq!(canonical_code(&c5)?, canonical_code(&pentagram)?);

    // Two triangles sharing a vertex: the clique graph is a single edge.
    let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])?;
    let (k, cliques) = clique_graph(&bowtie)?;
    println!("K(bowtie) has {} vertices, forest: {}", cliques.len(), is_forest(&k));
    Ok(())
}
