//! Checks every exchange axiom on two small tables and prints the first
//! violation certificate, then replays it.
//!
//! cargo run --example check_axioms

use mnat::axioms::{check_axiom, check_ssqm_nat_prj, Axiom, CheckOptions};
use mnat::gallery;

fn main() -> mnat::Result<()> {
    for entry in [gallery::example_2_1(), gallery::example_4_2()] {
        let f = &entry.function;
        println!("{} ({} points)", entry.name, f.len());
        for axiom in Axiom::ALL {
            let report = check_axiom(f, axiom, CheckOptions::default())?;
            match &report.violation {
                None => println!("  {:<18} pass", axiom.id()),
                Some(v) => {
                    println!("  {:<18} fail at x={} y={} i={}", axiom.id(), v.x, v.y, v.i);
                    for c in &v.candidates {
                        println!(
                            "      j={}  f(x-χi+χj)={}  f(y+χi-χj)={}",
                            c.j, c.fx_exchanged, c.fy_exchanged
                        );
                    }
                    assert!(report.replay(f));
                }
            }
        }
        let prj = check_ssqm_nat_prj(f)?;
        println!("  projected quasi axiom parts: {:?}", prj.parts().map(|r| r.pass));
    }
    Ok(())
}
