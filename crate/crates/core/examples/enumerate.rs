//! Staircase enumeration and seeded random digraphs.

use phylo::enumeration::{count_staircase, digest, enumerate_dags, EnumMode, EnumSpec, Staircase};
use phylo::DegreeBounds;

fn main() -> phylo::Result<()> {
    let b = DegreeBounds::new(1, 1)?;
    for d in Staircase::new(3, b)? {
        println!("{:?}", d.arcs());
    }
    for (i, j) in [(1, 1), (2, 2), (3, 2), (3, 3)] {
        let b = DegreeBounds::new(i, j)?;
        let counts: Vec<u64> = (1..=6).map(|n| count_staircase(n, b)).collect::<phylo::Result<_>>()?;
        println!("({i},{j}) staircase counts n=1..6: {counts:?}");
    }

    let spec = EnumSpec {
        n: 8,
        bounds: DegreeBounds::new(2, 2)?,
        mode: EnumMode::Random { samples: 3, seed: 42 },
    };
    for d in enumerate_dags(spec)? {
        println!("{} {:?}", digest(&d), d.arcs());
    }
    Ok(())
}
