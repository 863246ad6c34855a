use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::argmin_set;
use super::verdict::{CounterContext, Metric, Theorem, TheoremVerdict};
use crate::error::{Error, Result};
use crate::function::{Oracle, TabulatedFunction};
use crate::point::{Index, LatticePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// scaled moves `±αχi` and `α(χj − χi)`; bound `n(α − 1)` on both `‖·‖∞` and the sum gap
    #[default]
    Mnat,
    /// scaled moves `α(χj − χi)` only; bound `(n − 1)(α − 1)` on `‖·‖∞`
    M,
}

impl Regime {
    fn metric(self) -> Metric {
        match self {
            Regime::Mnat => Metric::LinfAndSum,
            Regime::M => Metric::Linf,
        }
    }

    pub fn bound(self, n: usize, alpha: i64) -> i64 {
        let n = n as i64;
        match self {
            Regime::Mnat => n * (alpha - 1),
            Regime::M => (n - 1) * (alpha - 1),
        }
    }

    fn theorem(self) -> Theorem {
        match self {
            Regime::Mnat => Theorem::ProximityMnat,
            Regime::M => Theorem::ProximityM,
        }
    }
}

fn scaled_neighbours(x: &LatticePoint, alpha: i64, regime: Regime) -> Vec<LatticePoint> {
    let n = x.dim();
    let mut out = Vec::new();
    if regime == Regime::Mnat {
        for i in Index::nonnull(n) {
            out.push(x.scaled_exchange(Index::NULL, i, alpha));
            out.push(x.scaled_exchange(i, Index::NULL, alpha));
        }
    }
    for i in Index::nonnull(n) {
        for j in Index::nonnull(n) {
            if i != j {
                out.push(x.scaled_exchange(i, j, alpha));
            }
        }
    }
    out
}

/// Whether `x` is a local minimizer of the `α`-scaled problem.
/// Points outside `dom f` count as `+∞`.
pub fn proximity_hypothesis(f: &TabulatedFunction, x: &LatticePoint, alpha: i64, regime: Regime) -> bool {
    let fx = f.value(x);
    fx.is_finite() && scaled_neighbours(x, alpha, regime).iter().all(|y| f.value(y) >= fx)
}

/// Distance from `x` to the nearest minimizer in the regime's norm.
pub fn proximity_gap(f: &TabulatedFunction, x: &LatticePoint, regime: Regime) -> Result<i64> {
    x.check_dim(f.dim())?;
    let argmin = argmin_set(f)?;
    Ok(argmin.iter().map(|m| regime.metric().dist(m, x)).min().expect("argmin is nonempty"))
}

/// Checks the distance bound at every scaled local minimizer in `dom f`.
pub fn verify_proximity(f: &TabulatedFunction, alpha: i64, regime: Regime) -> Result<TheoremVerdict> {
    if alpha < 2 {
        return Err(Error::Precondition(format!("scaling factor must be at least 2, got {alpha}")));
    }
    let argmin = argmin_set(f)?;
    let bound = regime.bound(f.dim(), alpha);
    let metric = regime.metric();
    let points: Vec<&LatticePoint> = f.domain().collect();
    let gaps: Vec<Option<i64>> = points
        .par_iter()
        .map(|x| {
            proximity_hypothesis(f, x, alpha, regime)
                .then(|| argmin.iter().map(|m| metric.dist(m, x)).min().expect("argmin is nonempty"))
        })
        .collect();
    let Some(first) = gaps.iter().position(|g| g.is_some_and(|g| g > bound)) else {
        return Ok(TheoremVerdict::holds(regime.theorem(), None));
    };
    let (worst_pos, worst_gap) = gaps
        .iter()
        .enumerate()
        .filter_map(|(k, g)| g.map(|g| (k, g)))
        .fold((first, i64::MIN), |acc, (k, g)| if g > acc.1 { (k, g) } else { acc });
    let x = points[first];
    let mut ctx = CounterContext::at(x);
    ctx.eval(f, x);
    for y in scaled_neighbours(x, alpha, regime) {
        ctx.eval(f, &y);
    }
    let gap = ctx.distance(x, metric, &argmin);
    ctx.distance(points[worst_pos], metric, &argmin);
    ctx.quantities.insert("alpha".into(), alpha);
    ctx.quantities.insert("bound".into(), bound);
    ctx.quantities.insert("gap".into(), gap);
    ctx.quantities.insert("worst_gap".into(), worst_gap);
    ctx.quantities.insert("hypothesis_points".into(), gaps.iter().flatten().count() as i64);
    ctx.sets.insert("argmin".into(), argmin);
    ctx.sets.insert("worst_x".into(), vec![points[worst_pos].clone()]);
    Ok(TheoremVerdict::fails(regime.theorem(), ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::Outcome;
    use crate::gallery;

    #[test]
    fn scaled_minimizer_far_from_true_minimizer() {
        for k in [2, 5, 10] {
            let f = gallery::example_2_4(k).unwrap().function;
            let xhat = LatticePoint::from([k, 0, 0]);
            assert!(proximity_hypothesis(&f, &xhat, 2, Regime::Mnat));
            assert_eq!(proximity_gap(&f, &xhat, Regime::Mnat).unwrap(), k);
            let v = verify_proximity(&f, 2, Regime::Mnat).unwrap();
            assert_eq!(v.outcome == Outcome::Fails, k > 3, "k = {k}");
            if let Some(ctx) = &v.counter_context {
                assert_eq!(ctx.quantities["worst_gap"], k);
                assert_eq!(ctx.sets["worst_x"], vec![xhat.clone()]);
                assert!(v.replay(&f));
            }
        }
    }

    #[test]
    fn holds_on_mnat_example_and_constants() {
        let f = gallery::example_2_2().function;
        for alpha in [2, 3] {
            assert!(verify_proximity(&f, alpha, Regime::Mnat).unwrap().holds);
        }
        let c = TabulatedFunction::from_box_fn(&crate::IntBox::cube(2, 0, 3), |_| Some(1.into()));
        assert!(verify_proximity(&c, 5, Regime::Mnat).unwrap().holds);
        assert!(verify_proximity(&c, 1, Regime::Mnat).is_err());
    }
}
