//! Replays every built-in example's recorded verdicts, then draws a few
//! seeded random instances.
//!
//! cargo run --example gallery_audit

use mnat::axioms::Axiom;
use mnat::gallery::{self, gen_laminar_convex, gen_random_filtered_sized};
use mnat::IntBox;

fn main() -> mnat::Result<()> {
    let lines = gallery::audit_all()?;
    for l in &lines {
        let kind = serde_json::to_value(&l.check).expect("checks serialize")["kind"].clone();
        println!("{} {:<14} {:<22} {:?} -> {:?}", if l.ok { "ok  " } else { "FAIL" }, l.entry, kind.as_str().unwrap_or("?"), l.expected, l.actual);
    }
    println!("{} of {} expectations reproduced", lines.iter().filter(|l| l.ok).count(), lines.len());

    let bx = IntBox::cube(3, 0, 3);
    for seed in 0..3 {
        let f = gen_laminar_convex(&bx, seed)?;
        println!("laminar seed {seed}: {} points, min {}", f.len(), f.min_value().expect("nonempty"));
        if let Some(g) = gen_random_filtered_sized(&bx, (0, 5), seed, Axiom::SsqmNat, 5000, 6)? {
            println!("quasi seed {seed}: {} points", g.len());
        }
    }
    Ok(())
}
