//! Box-shrinking steepest descent on a random separable convex function,
//! compared with the iteration envelope 2nL + n.
//!
//! cargo run --example modified_descent

use mnat::gallery::gen_separable_convex;
use mnat::minimize::{basic_steepest_descent, modified_steepest_descent};
use mnat::{linf_diameter, IntBox, Mode};

fn main() -> mnat::Result<()> {
    let bx = IntBox::cube(3, 0, 12);
    let f = gen_separable_convex(&bx, 11)?;
    let n = f.dim();
    let l = linf_diameter(f.domain())?;
    let x0 = bx.upper.clone();
    let basic = basic_steepest_descent(&f, &x0, Mode::Fast)?;
    let modified = modified_steepest_descent(&f, &x0, &bx, Mode::Fast)?;
    println!("basic:    {} -> {} in {} iterations", x0, basic.minimizer, basic.iterations);
    println!("modified: {} -> {} in {} iterations", x0, modified.minimizer, modified.iterations);
    for s in modified.steps.iter().take(5) {
        if let Some(b) = &s.bounds {
            println!("  {} box [{}, {}]", s.x, b.lower, b.upper);
        }
    }
    println!("envelope 2nL + n = {}", 2 * n as i64 * l + n as i64);
    assert_eq!(f.eval(&basic.minimizer)?, f.eval(&modified.minimizer)?);
    Ok(())
}
