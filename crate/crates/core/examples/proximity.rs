//! Scaled local minimizers and their distance to the true minimizer.
//!
//! cargo run --example proximity

use mnat::analysis::{proximity_gap, proximity_hypothesis, verify_proximity, Regime};
use mnat::gallery;

fn main() -> mnat::Result<()> {
    for k in [2, 5, 10] {
        let f = gallery::example_2_4(k)?.function;
        let x = [k, 0, 0].into();
        let bound = Regime::Mnat.bound(3, 2);
        println!(
            "k={k}: (k,0,0) is 2-scaled local min: {}, gap {} vs bound {bound}",
            proximity_hypothesis(&f, &x, 2, Regime::Mnat),
            proximity_gap(&f, &x, Regime::Mnat)?
        );
        let v = verify_proximity(&f, 2, Regime::Mnat)?;
        match v.counter_context {
            None => println!("  proximity holds"),
            Some(ctx) => println!("  proximity fails; worst gap {}", ctx.quantities["worst_gap"]),
        }
    }
    let g = gallery::example_2_2().function;
    println!("example-2-2 alpha=2: {:?}", verify_proximity(&g, 2, Regime::Mnat)?.outcome);
    Ok(())
}
