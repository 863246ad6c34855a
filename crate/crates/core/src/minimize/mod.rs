//! Local optimality and the steepest descent family.

mod cut;
mod reduction;

pub use cut::{strong_cut, weak_cut, CutCertificate, Halfspace};
pub use reduction::{domain_reduction, find_in_peeled, peel, ReductionLogEntry, ReductionOutcome, ReductionState};

use serde::{Deserialize, Serialize};

use crate::axioms::{require, Axiom};
use crate::bounds::IntBox;
use crate::error::{Error, Result};
use crate::function::Oracle;
use crate::point::{Index, LatticePoint};
use crate::value::ExtendedValue;
use crate::Mode;

/// A steepest exchange `(i, j)` and the value `f(x − χi + χj)` it reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Direction {
    pub i: Index,
    pub j: Index,
    pub value: ExtendedValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentStep {
    /// Point reached by this step.
    pub x: LatticePoint,
    pub i: Index,
    pub j: Index,
    pub value: ExtendedValue,
    /// Box after the step's bound update (box-shrinking descent only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<IntBox>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentTrace {
    pub start: LatticePoint,
    pub steps: Vec<DescentStep>,
    pub minimizer: LatticePoint,
    pub value: ExtendedValue,
    pub iterations: usize,
}

fn value_in_domain<O: Oracle + ?Sized>(f: &O, x: &LatticePoint) -> Result<ExtendedValue> {
    x.check_dim(f.dim())?;
    let v = f.value(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NotInDomain(x.clone()))
    }
}

fn check_preconditions<O: Oracle + ?Sized>(f: &O, mode: Mode, axioms: &[Axiom]) -> Result<()> {
    if mode == Mode::Fast {
        return Ok(());
    }
    let table = f.table().ok_or(Error::StrictNeedsTable)?;
    for &a in axioms {
        if a == Axiom::MnatSet {
            crate::axioms::check_mnat_set(table.domain()).and_then(|r| {
                if r.pass {
                    Ok(())
                } else {
                    Err(Error::AxiomFailed(Box::new(r)))
                }
            })?;
        } else {
            require(table, a)?;
        }
    }
    Ok(())
}

/// Whether `f(x − χi + χj) ≥ f(x)` for all `i, j ∈ N ∪ {0}`.
pub fn is_local_min<O: Oracle + ?Sized>(f: &O, x: &LatticePoint) -> Result<bool> {
    Ok(steepest_direction(f, x, None)?.is_none())
}

/// Ranking used to break ties between value-minimizing pairs: pairs of two
/// non-null indices first, then smaller `i`, then smaller `j`, with the null
/// index ranked after every coordinate.
fn tie_key(n: usize, i: Index, j: Index) -> (bool, usize, usize) {
    let rank = |k: Index| if k.is_null() { n + 1 } else { k.0 };
    (i.is_null() || j.is_null(), rank(i), rank(j))
}

/// Tie-break key: pairs touching the null index rank last, then by `i`, then `j`.
type TieRank = (bool, usize, usize);

/// The strictly improving exchange of least value, or `None` when `x` is
/// locally minimal (within `bounds`, if given).
pub fn steepest_direction<O: Oracle + ?Sized>(
    f: &O,
    x: &LatticePoint,
    bounds: Option<&IntBox>,
) -> Result<Option<Direction>> {
    let fx = value_in_domain(f, x)?;
    if let Some(b) = bounds {
        b.lower.check_dim(f.dim())?;
    }
    let n = f.dim();
    let mut best: Option<(ExtendedValue, TieRank, Index, Index)> = None;
    for i in Index::all(n) {
        for j in Index::all(n) {
            // i == j (including (0, 0)) lands on x itself and never improves
            if i == j {
                continue;
            }
            let y = x.exchange(i, j);
            if bounds.is_some_and(|b| !b.contains(&y)) {
                continue;
            }
            let v = f.value(&y);
            if v >= fx {
                continue;
            }
            let key = tie_key(n, i, j);
            let better = match &best {
                None => true,
                Some((bv, bk, _, _)) => (v, key) < (*bv, *bk),
            };
            if better {
                best = Some((v, key, i, j));
            }
        }
    }
    Ok(best.map(|(value, _, i, j)| Direction { i, j, value }))
}

/// Minimum of `f(x − χi + χj)` over distinct `i, j ∈ N ∪ {0}` and every pair attaining it.
pub fn minimizing_pairs<O: Oracle + ?Sized>(f: &O, x: &LatticePoint) -> (ExtendedValue, Vec<(Index, Index)>) {
    let n = f.dim();
    let mut best = ExtendedValue::Infinity;
    let mut pairs = Vec::new();
    for i in Index::all(n) {
        for j in Index::all(n) {
            if i == j {
                continue;
            }
            let v = f.value(&x.exchange(i, j));
            if v < best {
                best = v;
                pairs.clear();
            }
            if v == best {
                pairs.push((i, j));
            }
        }
    }
    (best, pairs)
}

/// Steepest descent over the full exchange neighbourhood.
///
/// Strict mode verifies (SSQM♮) first, which guarantees the output is a global minimizer.
pub fn basic_steepest_descent<O: Oracle + ?Sized>(f: &O, x0: &LatticePoint, mode: Mode) -> Result<DescentTrace> {
    let mut value = value_in_domain(f, x0)?;
    check_preconditions(f, mode, &[Axiom::SsqmNat])?;
    let mut x = x0.clone();
    let mut steps = Vec::new();
    while let Some(d) = steepest_direction(f, &x, None)? {
        x = x.exchange(d.i, d.j);
        value = d.value;
        steps.push(DescentStep { x: x.clone(), i: d.i, j: d.j, value, bounds: None });
    }
    Ok(DescentTrace { start: x0.clone(), iterations: steps.len(), steps, minimizer: x, value })
}

/// Steepest descent restricted to a box that shrinks after every step:
/// `u(i) -= 1` for `i ≠ 0` and `ℓ(j) += 1` for `j ≠ 0`.
pub fn modified_steepest_descent<O: Oracle + ?Sized>(
    f: &O,
    x0: &LatticePoint,
    bx: &IntBox,
    mode: Mode,
) -> Result<DescentTrace> {
    let mut value = value_in_domain(f, x0)?;
    bx.lower.check_dim(f.dim())?;
    if let Some(table) = f.table() {
        if let Some(out) = table.domain().find(|p| !bx.contains(p)) {
            return Err(Error::DomainOutsideBox(out.clone()));
        }
    } else if !bx.contains(x0) {
        return Err(Error::DomainOutsideBox(x0.clone()));
    }
    check_preconditions(f, mode, &[Axiom::SsqmNat])?;
    let mut bounds = bx.clone();
    let mut x = x0.clone();
    let mut steps = Vec::new();
    while let Some(d) = steepest_direction(f, &x, Some(&bounds))? {
        x = x.exchange(d.i, d.j);
        value = d.value;
        if !d.i.is_null() {
            let u = bounds.upper.at(d.i);
            bounds.set_upper(d.i, u - 1);
        }
        if !d.j.is_null() {
            let l = bounds.lower.at(d.j);
            bounds.set_lower(d.j, l + 1);
        }
        steps.push(DescentStep { x: x.clone(), i: d.i, j: d.j, value, bounds: Some(bounds.clone()) });
    }
    Ok(DescentTrace { start: x0.clone(), iterations: steps.len(), steps, minimizer: x, value })
}
