//! Runs registry statements and prints a summary line for each.

use phylo::enumeration::{verify, VerifyParams, STATEMENTS};
use phylo::DegreeBounds;

fn main() -> phylo::Result<()> {
    for (id, summary) in STATEMENTS {
        println!("{id:<18} {summary}");
    }
    println!();

    let b22 = DegreeBounds::new(2, 2)?;
    let runs = [
        ("thm_1_4", VerifyParams::staircase(b22, 6)),
        ("thm_omega_ij", VerifyParams::staircase(b22, 6)),
        ("hole_suite", VerifyParams::staircase(b22, 7)),
        ("char_1j", VerifyParams::staircase(DegreeBounds::new(1, 2)?, 6)),
        (
            "prop_3_1",
            VerifyParams::random(DegreeBounds::new(3, 3)?, 4, 12, 2000, 7),
        ),
        ("thm_1_1", VerifyParams::random(DegreeBounds::new(4, 2)?, 1, 1, 200, 1)),
    ];
    for (id, params) in runs {
        let r = verify(id, &params)?;
        println!(
            "{id:<14} {:?} checked={} fired={} counterexamples={} ({})",
            r.verdict, r.instances_checked, r.hypothesis_fired, r.counterexamples_total, r.params.scope
        );
    }
    Ok(())
}
