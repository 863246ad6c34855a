use super::verdict::{CounterContext, Theorem, TheoremVerdict, Variant};
use super::{argmin_set, require_minimizing_pair};
use crate::error::{Error, Result};
use crate::function::{Oracle, TabulatedFunction};
use crate::minimize::{strong_cut, weak_cut, Halfspace};
use crate::point::{Index, LatticePoint};
use crate::value::ExtendedValue;

/// Holds with the first minimizer inside every half-space, or fails with
/// the per-minimizer membership table.
fn cut_verdict(
    f: &TabulatedFunction,
    theorem: Theorem,
    x: &LatticePoint,
    pair: (Index, Index),
    required: Vec<Halfspace>,
    argmin: Vec<LatticePoint>,
) -> TheoremVerdict {
    if let Some(w) = argmin.iter().find(|m| required.iter().all(|h| h.contains(m))) {
        return TheoremVerdict::holds(theorem, Some(w.clone()));
    }
    let mut ctx = CounterContext::at(x);
    ctx.pair = Some(pair);
    ctx.eval(f, x);
    ctx.eval(f, &x.exchange(pair.0, pair.1));
    ctx.required = required;
    ctx.check_all(&argmin);
    ctx.sets.insert("argmin".into(), argmin);
    TheoremVerdict::fails(theorem, ctx)
}

/// Some minimizer satisfies `x*(i) ≤ x(i) − 1` (if `i ≠ 0`) and `x*(j) ≥ x(j) + 1` (if `j ≠ 0`).
pub fn verify_min_cut_weak(f: &TabulatedFunction, x: &LatticePoint, pair: (Index, Index)) -> Result<TheoremVerdict> {
    let argmin = argmin_set(f)?;
    require_minimizing_pair(f, x, pair, &argmin)?;
    let cut = weak_cut(x, pair.0, pair.1);
    Ok(cut_verdict(f, Theorem::MinCutWeak, x, pair, cut.halfspaces, argmin))
}

/// As [`verify_min_cut_weak`] plus the coordinate-sum constraint when one index is null.
pub fn verify_min_cut_strong(f: &TabulatedFunction, x: &LatticePoint, pair: (Index, Index)) -> Result<TheoremVerdict> {
    let argmin = argmin_set(f)?;
    require_minimizing_pair(f, x, pair, &argmin)?;
    let cut = strong_cut(x, pair.0, pair.1);
    Ok(cut_verdict(f, Theorem::MinCutStrong, x, pair, cut.halfspaces, argmin))
}

/// Exchanges scanned by a variant, as `(i, j)` pairs reaching `x − χi + χj`.
fn scanned_pairs(n: usize, variant: Variant, fixed: Index) -> Vec<(Index, Index)> {
    use Variant::*;
    match variant {
        Qi | Mi => Index::all(n).map(|j| (fixed, j)).collect(),
        Qii | Mii => Index::all(n).map(|i| (i, fixed)).collect(),
        Qiii | Miii => Index::all(n).map(|j| (Index::NULL, j)).collect(),
        Qiv | Miv => Index::all(n).map(|i| (i, Index::NULL)).collect(),
        Ai => Index::nonnull(n).map(|j| (fixed, j)).collect(),
        Aii => Index::nonnull(n).map(|i| (i, fixed)).collect(),
        Aiii => Index::nonnull(n)
            .flat_map(|i| Index::nonnull(n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect(),
    }
}

/// The asserted half-space for one attaining exchange.
fn requirement(x: &LatticePoint, variant: Variant, (i, j): (Index, Index)) -> Halfspace {
    use Variant::*;
    let coord_ge = |k: Index, b: i64| Halfspace::CoordGe { index: k, bound: b };
    let coord_le = |k: Index, b: i64| Halfspace::CoordLe { index: k, bound: b };
    match variant {
        Qi | Mi | Ai => {
            if j.is_null() {
                Halfspace::SumLe { bound: x.sum() - 1 }
            } else if j == i {
                coord_ge(i, x.at(i))
            } else {
                coord_ge(j, x.at(j) + 1)
            }
        }
        Qii | Mii | Aii => {
            if i.is_null() {
                Halfspace::SumGe { bound: x.sum() + 1 }
            } else if i == j {
                coord_le(j, x.at(j))
            } else {
                coord_le(i, x.at(i) - 1)
            }
        }
        Qiii | Miii => {
            if j.is_null() {
                Halfspace::SumLe { bound: x.sum() }
            } else {
                coord_ge(j, x.at(j) + 1)
            }
        }
        Qiv | Miv => {
            if i.is_null() {
                Halfspace::SumGe { bound: x.sum() }
            } else {
                coord_le(i, x.at(i) - 1)
            }
        }
        Aiii => unreachable!("pair variant has two requirements"),
    }
}

fn requirements(x: &LatticePoint, variant: Variant, pair: (Index, Index)) -> Vec<Halfspace> {
    if variant == Variant::Aiii {
        weak_cut(x, pair.0, pair.1).halfspaces
    } else {
        vec![requirement(x, variant, pair)]
    }
}

fn is_q(variant: Variant) -> bool {
    matches!(variant, Variant::Qi | Variant::Qii | Variant::Qiii | Variant::Qiv)
}

fn is_a(variant: Variant) -> bool {
    matches!(variant, Variant::Ai | Variant::Aii | Variant::Aiii)
}

/// Checks one directional cut statement at `x`.
///
/// `fixed` names the coordinate held fixed by `qi/qii/mi/mii/Ai/Aii` and is
/// ignored otherwise. Every attaining exchange is checked; `q*` variants only
/// claim anything for non-null attaining indices and report
/// [`Outcome::HypothesisNotMet`](super::Outcome::HypothesisNotMet) when there are none.
pub fn verify_min_cut_directional(
    f: &TabulatedFunction,
    x: &LatticePoint,
    variant: Variant,
    fixed: Index,
) -> Result<TheoremVerdict> {
    f.require_in_domain(x)?;
    let n = f.dim();
    if variant.uses_fixed() {
        x.check_index(fixed)?;
        if fixed.is_null() {
            return Err(Error::Precondition(format!("variant {} needs a coordinate, not 0", variant.id())));
        }
    }
    let theorem = Theorem::Directional(variant);
    let argmin = argmin_set(f)?;
    let scanned = scanned_pairs(n, variant, fixed);
    let values: Vec<ExtendedValue> = scanned.iter().map(|&(i, j)| f.value(&x.exchange(i, j))).collect();
    let context = |pair: Option<(Index, Index)>| {
        let mut ctx = CounterContext::at(x);
        ctx.pair = pair;
        for &(i, j) in &scanned {
            ctx.eval(f, &x.exchange(i, j));
        }
        ctx
    };
    if is_a(variant) && argmin.contains(x) {
        let mut ctx = context(None);
        ctx.note = "x is a minimizer".into();
        return Ok(TheoremVerdict::not_met(theorem, ctx));
    }
    let Some(best) = values.iter().min().copied() else {
        let mut ctx = context(None);
        ctx.note = "no exchanges to scan".into();
        return Ok(TheoremVerdict::not_met(theorem, ctx));
    };
    let attaining: Vec<(Index, Index)> = scanned
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v == best)
        .map(|(p, _)| *p)
        .filter(|&(i, j)| {
            // q-variants say nothing about the null index
            !is_q(variant) || match variant {
                Variant::Qi | Variant::Qiii => !j.is_null(),
                _ => !i.is_null(),
            }
        })
        .collect();
    if attaining.is_empty() {
        let mut ctx = context(None);
        ctx.note = "minimum attained only at the null index".into();
        return Ok(TheoremVerdict::not_met(theorem, ctx));
    }
    let mut witness = None;
    for &pair in &attaining {
        let required = requirements(x, variant, pair);
        match argmin.iter().find(|m| required.iter().all(|h| h.contains(m))) {
            Some(w) => {
                witness.get_or_insert_with(|| w.clone());
            }
            None => {
                let mut ctx = context(Some(pair));
                ctx.required = required;
                ctx.check_all(&argmin);
                ctx.sets.insert("argmin".into(), argmin);
                return Ok(TheoremVerdict::fails(theorem, ctx));
            }
        }
    }
    Ok(TheoremVerdict::holds(theorem, witness))
}

/// Every `(x, fixed)` at which a variant can be evaluated on `f`.
pub fn directional_contexts(f: &TabulatedFunction, variant: Variant) -> Vec<(LatticePoint, Index)> {
    let n = f.dim();
    f.domain()
        .flat_map(|x| {
            let fixed: Vec<Index> = if variant.uses_fixed() { Index::nonnull(n).collect() } else { vec![Index::NULL] };
            fixed.into_iter().map(move |k| (x.clone(), k))
        })
        .collect()
}
