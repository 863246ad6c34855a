//! Basic steepest descent from every point of a quasi M♮-convex table.
//!
//! cargo run --example steepest_descent

use mnat::analysis::{argmin_set, geodesic_snapshot};
use mnat::minimize::basic_steepest_descent;
use mnat::{gallery, Mode};

fn main() -> mnat::Result<()> {
    let f = gallery::example_2_1().function;
    let trace = basic_steepest_descent(&f, &[0, 1, 2].into(), Mode::Strict)?;
    println!("from {}:", trace.start);
    for s in &trace.steps {
        println!("  exchange ({},{}) -> {}  f = {}", s.i, s.j, s.x, s.value);
    }
    println!("minimizer {} after {} iterations", trace.minimizer, trace.iterations);

    // On an M♮-convex table each step shortens the tilde distance to argmin by exactly 2.
    let g = gallery::example_2_2().function;
    let argmin: Vec<String> = argmin_set(&g)?.iter().map(|x| x.to_string()).collect();
    println!("argmin of example-2-2: {}", argmin.join(" "));
    for x0 in g.domain() {
        let t = basic_steepest_descent(&g, x0, Mode::Strict)?;
        let mu_tilde = geodesic_snapshot(&g, x0)?.mu_tilde;
        println!("  start {x0}: {} iterations, tilde distance {mu_tilde}", t.iterations);
    }
    Ok(())
}
