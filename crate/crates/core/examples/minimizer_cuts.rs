//! Weak, strong and directional minimizer cuts at every non-minimizer.
//!
//! cargo run --example minimizer_cuts

use mnat::analysis::{
    directional_contexts, minimizing_contexts, verify_min_cut_directional, verify_min_cut_strong, verify_min_cut_weak,
    Variant,
};
use mnat::gallery;

fn main() -> mnat::Result<()> {
    let f = gallery::example_2_1().function;
    for (x, (i, j)) in minimizing_contexts(&f)? {
        let weak = verify_min_cut_weak(&f, &x, (i, j))?;
        let strong = verify_min_cut_strong(&f, &x, (i, j))?;
        println!(
            "{x} exchange ({i},{j}): weak {:?} (witness {:?}), strong {:?}",
            weak.outcome,
            weak.witness.map(|w| w.to_string()),
            strong.outcome
        );
        if let Some(ctx) = &strong.counter_context {
            let req: Vec<String> = ctx.required.iter().map(|h| h.to_string()).collect();
            println!("    no minimizer satisfies {}", req.join(" and "));
        }
    }

    let g = gallery::example_4_1().function;
    for variant in [Variant::Qi, Variant::Mi, Variant::Miii] {
        for (x, k) in directional_contexts(&g, variant) {
            let v = verify_min_cut_directional(&g, &x, variant, k)?;
            println!("example-4-1 {} at {x} fixed {k}: {:?}", variant.id(), v.outcome);
        }
    }
    Ok(())
}
