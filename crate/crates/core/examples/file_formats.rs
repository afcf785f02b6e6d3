//! Digraph and graph files, and DOT output.

use phylo::cli::{digraph_dot, graph_dot, parse_digraph, write_graph};
use phylo::phylogeny::phylogeny_graph;

const FILE: &str = "\
# two parents and a child
dag 3
a 0 2
a 1 2
";

fn main() -> phylo::Result<()> {
    let d = parse_digraph(FILE)?;
    let p = phylogeny_graph(&d)?;
    print!("{}", write_graph(&p));
    print!("{}", digraph_dot(&d, None));
    print!("{}", graph_dot(&p, None));

    match parse_digraph("dag 3\na 0 3\n") {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
