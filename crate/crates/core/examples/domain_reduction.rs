//! Domain reduction on a 132651-point separable convex table, with the
//! iteration log of peeled points and cuts.
//!
//! cargo run --release --example domain_reduction

use mnat::gallery::gen_separable_convex;
use mnat::minimize::domain_reduction;
use mnat::{IntBox, Mode};

fn main() -> mnat::Result<()> {
    let f = gen_separable_convex(&IntBox::cube(3, 0, 50), 7)?;
    let out = domain_reduction(&f, Mode::Fast, false)?;
    for (k, e) in out.state.iteration_log.iter().enumerate() {
        let cuts: Vec<String> = e.cut.halfspaces.iter().map(|h| h.to_string()).collect();
        println!("{k:>3}: peel {} exchange ({},{})  {}  -> {} left", e.peel_point, e.cut.i, e.cut.j, cuts.join(", "), e.candidates_after);
    }
    println!("minimizer {} value {} after {} iterations", out.minimizer, out.value, out.iterations);
    println!("brute-force minimum {}", f.min_value().expect("nonempty"));
    Ok(())
}
