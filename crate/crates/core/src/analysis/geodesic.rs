use super::verdict::{CounterContext, Metric, Theorem, TheoremVerdict};
use super::{argmin_set, nearest, require_minimizing_pair};
use crate::error::Result;
use crate::function::TabulatedFunction;
use crate::minimize::{strong_cut, weak_cut, CutCertificate};
use crate::point::{Index, LatticePoint};

fn geodesic_verdict(
    f: &TabulatedFunction,
    x: &LatticePoint,
    pair: (Index, Index),
    theorem: Theorem,
    metric: Metric,
    cut: CutCertificate,
    decrement: i64,
) -> Result<TheoremVerdict> {
    let argmin = argmin_set(f)?;
    require_minimizing_pair(f, x, pair, &argmin)?;
    let (mu, near) = nearest(&argmin, x, metric);
    let restricted: Vec<LatticePoint> = near.iter().filter(|m| cut.contains(m)).cloned().collect();
    let next = x.exchange(pair.0, pair.1);
    let (mu_next, near_next) = nearest(&argmin, &next, metric);
    let part_i = !restricted.is_empty();
    let part_ii = mu_next == mu - decrement && near_next == restricted;
    if part_i && part_ii {
        return Ok(TheoremVerdict::holds(theorem, restricted.first().cloned()));
    }
    let mut ctx = CounterContext::at(x);
    ctx.pair = Some(pair);
    ctx.eval(f, x);
    ctx.eval(f, &next);
    ctx.required = cut.halfspaces;
    ctx.check_all(&near);
    ctx.distance(x, metric, &argmin);
    ctx.distance(&next, metric, &argmin);
    ctx.quantities.insert("distance".into(), mu);
    ctx.quantities.insert("distance_after_step".into(), mu_next);
    ctx.quantities.insert("expected_after_step".into(), mu - decrement);
    ctx.quantities.insert("part_i".into(), part_i as i64);
    ctx.quantities.insert("part_ii".into(), part_ii as i64);
    ctx.sets.insert("argmin".into(), argmin);
    ctx.sets.insert("nearest".into(), near);
    ctx.sets.insert("nearest_in_cut".into(), restricted);
    ctx.sets.insert("nearest_after_step".into(), near_next);
    Ok(TheoremVerdict::fails(theorem, ctx))
}

/// L1 geodesic claim: some nearest minimizer lies in the weak cut, the step
/// shortens `μ` by 2 (by 1 when an index is null) and the nearest set after
/// the step is exactly the cut part of the current one.
pub fn verify_statement_a(f: &TabulatedFunction, x: &LatticePoint, pair: (Index, Index)) -> Result<TheoremVerdict> {
    let decrement = if pair.0.is_null() || pair.1.is_null() { 1 } else { 2 };
    let cut = weak_cut(x, pair.0, pair.1);
    geodesic_verdict(f, x, pair, Theorem::StatementA, Metric::L1, cut, decrement)
}

/// Geodesic claim for `μ̃`: some nearest minimizer lies in the strong cut,
/// the step shortens `μ̃` by exactly 2 and the nearest set updates to the cut part.
pub fn verify_geodesic(f: &TabulatedFunction, x: &LatticePoint, pair: (Index, Index)) -> Result<TheoremVerdict> {
    let cut = strong_cut(x, pair.0, pair.1);
    geodesic_verdict(f, x, pair, Theorem::Geodesic, Metric::Tilde, cut, 2)
}
