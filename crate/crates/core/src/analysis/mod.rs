//! Brute-force minimizer sets and verifiers for the cut, geodesic and
//! proximity properties.
//!
//! Every verifier enumerates the full table; the point is ground truth, not speed.

mod bridge;
mod cuts;
mod geodesic;
mod proximity;
mod verdict;

pub use bridge::{verify_projection_bridges, BridgeSummary};
pub use cuts::{directional_contexts, verify_min_cut_directional, verify_min_cut_strong, verify_min_cut_weak};
pub use geodesic::{verify_geodesic, verify_statement_a};
pub use proximity::{proximity_gap, proximity_hypothesis, verify_proximity, Regime};
pub use verdict::{
    CandidateCheck, CounterContext, DistanceRecord, Evaluation, Metric, Outcome, Theorem, TheoremVerdict, Variant,
};

use serde::{Deserialize, Serialize};

use crate::axioms::check_m_exc;
use crate::error::{Error, Result};
use crate::function::TabulatedFunction;
use crate::minimize::{is_local_min, minimizing_pairs};
use crate::point::{Index, LatticePoint};

/// All points of `dom f` attaining the minimum value, in lexicographic order.
pub fn argmin_set(f: &TabulatedFunction) -> Result<Vec<LatticePoint>> {
    let min = f.min_value().ok_or(Error::EmptyDomain)?;
    Ok(f.entries().filter(|(_, v)| **v == min).map(|(x, _)| x.clone()).collect())
}

/// Nearest minimizers of `x` under `metric` and their distance.
pub fn nearest(argmin: &[LatticePoint], x: &LatticePoint, metric: Metric) -> (i64, Vec<LatticePoint>) {
    let d = argmin.iter().map(|m| metric.dist(m, x)).min().unwrap_or(i64::MAX);
    let set = argmin.iter().filter(|m| metric.dist(m, x) == d).cloned().collect();
    (d, set)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeodesicSnapshot {
    pub x: LatticePoint,
    /// `min ‖x* − x‖₁` over minimizers
    pub mu: i64,
    pub m_set: Vec<LatticePoint>,
    /// `min ‖x* − x‖₁ + |x*(N) − x(N)|` over minimizers
    pub mu_tilde: i64,
    pub m_tilde_set: Vec<LatticePoint>,
}

pub fn geodesic_snapshot(f: &TabulatedFunction, x: &LatticePoint) -> Result<GeodesicSnapshot> {
    x.check_dim(f.dim())?;
    let argmin = argmin_set(f)?;
    let (mu, m_set) = nearest(&argmin, x, Metric::L1);
    let (mu_tilde, m_tilde_set) = nearest(&argmin, x, Metric::Tilde);
    Ok(GeodesicSnapshot { x: x.clone(), mu, m_set, mu_tilde, m_tilde_set })
}

/// The M-convex lift `f̃(x, −x(N)) = f(x)` in dimension `n + 1`.
pub fn project_to_m(f: &TabulatedFunction) -> TabulatedFunction {
    let mut out = TabulatedFunction::empty(f.dim() + 1);
    for (x, v) in f.entries() {
        out.insert(x.extended(-x.sum()), *v).expect("lifted keys are distinct");
    }
    out
}

/// Local minimality over `N` only: `f(x − χi + χj) ≥ f(x)` for all `i, j ∈ N`.
pub fn is_local_min_m(f: &TabulatedFunction, x: &LatticePoint) -> Result<bool> {
    let fx = f.require_in_domain(x)?;
    let n = f.dim();
    Ok(Index::nonnull(n).all(|i| {
        Index::nonnull(n).all(|j| i == j || f.eval(&x.exchange(i, j)).map_or(true, |v| v >= fx.into()))
    }))
}

fn local_global_verdict(
    f: &TabulatedFunction,
    x: &LatticePoint,
    theorem: Theorem,
    local: bool,
) -> Result<TheoremVerdict> {
    let argmin = argmin_set(f)?;
    let global = argmin.contains(x);
    if local == global {
        return Ok(TheoremVerdict::holds(theorem, global.then(|| x.clone())));
    }
    let mut ctx = CounterContext::at(x);
    ctx.eval(f, x);
    ctx.quantities.insert("locally_minimal".into(), local as i64);
    ctx.quantities.insert("globally_minimal".into(), global as i64);
    ctx.sets.insert("argmin".into(), argmin);
    Ok(TheoremVerdict::fails(theorem, ctx))
}

/// Whether local optimality over `N ∪ {0}` at `x` agrees with global optimality.
pub fn verify_local_global(f: &TabulatedFunction, x: &LatticePoint) -> Result<TheoremVerdict> {
    f.require_in_domain(x)?;
    let local = is_local_min(f, x)?;
    local_global_verdict(f, x, Theorem::LocalGlobal, local)
}

/// Local optimality over `N` versus global optimality; requires (M-EXC).
pub fn verify_local_global_m(f: &TabulatedFunction, x: &LatticePoint) -> Result<TheoremVerdict> {
    f.require_in_domain(x)?;
    let report = check_m_exc(f)?;
    if !report.pass {
        return Err(Error::AxiomFailed(Box::new(report)));
    }
    let local = is_local_min_m(f, x)?;
    local_global_verdict(f, x, Theorem::LocalGlobalM, local)
}

/// Shared preconditions of the pair-based verifiers.
fn require_minimizing_pair(
    f: &TabulatedFunction,
    x: &LatticePoint,
    (i, j): (Index, Index),
    argmin: &[LatticePoint],
) -> Result<()> {
    f.require_in_domain(x)?;
    x.check_index(i)?;
    x.check_index(j)?;
    if i == j {
        return Err(Error::Precondition(format!("pair ({i},{j}) is not distinct")));
    }
    if argmin.contains(x) {
        return Err(Error::Precondition(format!("{x} is a minimizer")));
    }
    let (_, pairs) = minimizing_pairs(f, x);
    if !pairs.contains(&(i, j)) {
        return Err(Error::Precondition(format!("({i},{j}) does not minimize f(x - χi + χj) at {x}")));
    }
    Ok(())
}

/// Every `(x, pair)` with `x ∉ argmin f` and `pair` minimizing over distinct pairs.
pub fn minimizing_contexts(f: &TabulatedFunction) -> Result<Vec<(LatticePoint, (Index, Index))>> {
    let argmin = argmin_set(f)?;
    let mut out = Vec::new();
    for x in f.domain() {
        if argmin.contains(x) {
            continue;
        }
        for p in minimizing_pairs(f, x).1 {
            out.push((x.clone(), p));
        }
    }
    Ok(out)
}
