//! Lifting to one more coordinate, `f̃(x, −x(N)) = f(x)`, and the axiom
//! correspondences it gives.
//!
//! cargo run --example projection

use mnat::analysis::{project_to_m, verify_projection_bridges};
use mnat::gallery;

fn main() -> mnat::Result<()> {
    for entry in [gallery::example_2_2(), gallery::example_4_1(), gallery::example_4_2()] {
        let lifted = project_to_m(&entry.function);
        let (s, verdicts) = verify_projection_bridges(&entry.function)?;
        println!("{} -> {} points in Z^{}", entry.name, lifted.len(), lifted.dim());
        println!("  M♮-EXC {} / lifted M-EXC {}", s.mnat_exc, s.lifted_m_exc);
        println!("  quasi {}  projected parts {:?} / lifted quasi {}", s.ssqm_nat, s.prj_parts, s.lifted_ssqm);
        for v in verdicts {
            println!("  {:<26} {:?}", v.theorem.id(), v.outcome);
        }
    }
    Ok(())
}
