//! Forbidden induced subgraphs of (i, j) phylogeny graphs.

use phylo::forbidden::{build_pattern, contains_induced, detect_forbidden, forbidden_patterns, PatternSpec};
use phylo::{DegreeBounds, Graph};

fn main() -> phylo::Result<()> {
    let b = DegreeBounds::new(2, 2)?;
    let names: Vec<String> = forbidden_patterns(b).iter().map(|p| p.to_string()).collect();
    println!("forbidden for {b}: {}", names.join(", "));

    let k5 = Graph::complete(5);
    let verdict = detect_forbidden(&k5, b)?;
    println!("{}", serde_json::to_string(&verdict).unwrap());

    // A 4-star inside a wheel on a 7-cycle.
    let wheel = build_pattern(PatternSpec::Wheel(7))?;
    let star = build_pattern(PatternSpec::Star(4))?;
    println!("K_{{1,4}} in C_7∨I_1 at {:?}", contains_induced(&wheel, &star)?);
    println!(
        "clean for (3, 3): {}",
        detect_forbidden(&wheel, DegreeBounds::new(3, 3)?)?.is_clean()
    );
    Ok(())
}
