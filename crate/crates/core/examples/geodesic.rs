//! Distances to the minimizer set before and after a steepest step, for
//! an M♮-convex table and for a quasi one where the property breaks.
//!
//! cargo run --example geodesic

use mnat::analysis::{geodesic_snapshot, minimizing_contexts, verify_geodesic, verify_statement_a};
use mnat::gallery;

fn main() -> mnat::Result<()> {
    for entry in [gallery::example_2_2(), gallery::example_2_1()] {
        let f = &entry.function;
        println!("{}", entry.name);
        for (x, (i, j)) in minimizing_contexts(f)? {
            let pair = (i, j);
            let s = geodesic_snapshot(f, &x)?;
            let g = verify_geodesic(f, &x, pair)?;
            let a = verify_statement_a(f, &x, pair)?;
            print!("  {x} mu={} mu~={} exchange ({i},{j}): geodesic {:?}, L1 decrement {:?}", s.mu, s.mu_tilde, g.outcome, a.outcome);
            if let Some(q) = g.counter_context.as_ref().map(|c| &c.quantities) {
                print!("  (mu~ after step {} expected {})", q["distance_after_step"], q["expected_after_step"]);
            }
            println!();
        }
    }
    Ok(())
}
