//! Domain reduction with peeled sets.
//!
//! The candidate set `B` starts as `dom f` and is cut by axis-orthogonal
//! half-spaces until a point of its peeled set is a local minimizer of `f`
//! restricted to `B`. At desk scale `B` is kept as an explicit list; the box
//! of accumulated cuts is kept alongside (`B = dom f ∩ box`).

use serde::{Deserialize, Serialize};

use super::cut::{weak_cut, CutCertificate, Halfspace};
use super::{check_preconditions, steepest_direction};
use crate::axioms::Axiom;
use crate::bounds::{coordinate_bounds, IntBox};
use crate::error::{Error, Result};
use crate::function::{Oracle, TabulatedFunction};
use crate::point::{Index, LatticePoint};
use crate::value::ExtendedValue;
use crate::Mode;

fn floor_div(a: i64, k: i64) -> i64 {
    a.div_euclid(k)
}

fn ceil_div(a: i64, k: i64) -> i64 {
    -(-a).div_euclid(k)
}

/// Integer box of the peeled set of `S`.
///
/// Per coordinate the real bounds are `ℓ' = ((k−1)ℓ + u)/k` and
/// `u' = (ℓ + (k−1)u)/k` with `k = max(n, 2)`; the box is `[⌈ℓ'⌉, ⌊u'⌋]`,
/// widened to `[⌊ℓ'⌋, ⌈u'⌉]` in any coordinate where that is empty.
pub fn peel<'a>(points: impl IntoIterator<Item = &'a LatticePoint>) -> Result<IntBox> {
    let bounds = coordinate_bounds(points)?;
    let n = bounds.dim();
    let k = n.max(2) as i64;
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for (&l, &u) in bounds.lower.coords().iter().zip(bounds.upper.coords()) {
        let lo_scaled = (k - 1) * l + u;
        let hi_scaled = l + (k - 1) * u;
        let (mut a, mut b) = (ceil_div(lo_scaled, k), floor_div(hi_scaled, k));
        if a > b {
            a = floor_div(lo_scaled, k);
            b = ceil_div(hi_scaled, k);
        }
        lo.push(a);
        hi.push(b);
    }
    Ok(IntBox { lower: LatticePoint::new(lo), upper: LatticePoint::new(hi) })
}

/// The lexicographically first point of `S` inside [`peel`]`(S)`.
pub fn find_in_peeled<'a>(points: impl IntoIterator<Item = &'a LatticePoint>) -> Result<LatticePoint> {
    let mut pts: Vec<&LatticePoint> = points.into_iter().collect();
    let bx = peel(pts.iter().copied())?;
    pts.sort();
    if let Some(x) = pts.iter().find(|x| bx.contains(x)) {
        return Ok((*x).clone());
    }
    // name the coordinate whose peeled range keeps the fewest points
    let coordinate = Index::nonnull(bx.dim())
        .min_by_key(|&i| {
            pts.iter().filter(|x| (bx.lower.at(i)..=bx.upper.at(i)).contains(&x.at(i))).count()
        })
        .unwrap_or(Index::NULL);
    Err(Error::PeelEmpty { coordinate })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionLogEntry {
    pub peel_box: IntBox,
    pub peel_point: LatticePoint,
    pub cut: CutCertificate,
    /// Coordinate of the cut used for iteration accounting: `i`, or `j` when `i = 0`.
    pub type_index: Index,
    pub candidates_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionState {
    #[serde(rename = "box")]
    pub bx: IntBox,
    pub candidate_set: Vec<LatticePoint>,
    pub iteration_log: Vec<ReductionLogEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionOutcome {
    pub minimizer: LatticePoint,
    pub value: ExtendedValue,
    pub iterations: usize,
    pub state: ReductionState,
}

/// Minimizes `f` by domain reduction.
///
/// Strict mode first checks that `dom f` is an M♮-convex set and that `f`
/// satisfies (SSQM♮). With `audit`, every cut is checked against the full
/// minimizer set of `f`.
pub fn domain_reduction(f: &TabulatedFunction, mode: Mode, audit: bool) -> Result<ReductionOutcome> {
    f.require_nonempty()?;
    check_preconditions(f, mode, &[Axiom::MnatSet, Axiom::SsqmNat])?;
    let minimizers = if audit { crate::analysis::argmin_set(f)? } else { Vec::new() };
    let mut bx = f.bounding_box()?;
    let mut candidates: Vec<LatticePoint> = f.domain().cloned().collect();
    let mut log = Vec::new();
    loop {
        let x = find_in_peeled(&candidates)?;
        let peel_box = peel(&candidates)?;
        let Some(d) = steepest_direction(f, &x, Some(&bx))? else {
            let value = f.value(&x);
            return Ok(ReductionOutcome {
                minimizer: x,
                value,
                iterations: log.len(),
                state: ReductionState { bx, candidate_set: candidates, iteration_log: log },
            });
        };
        let cut = weak_cut(&x, d.i, d.j);
        for h in &cut.halfspaces {
            match *h {
                Halfspace::CoordLe { index, bound } => {
                    let u = bx.upper.at(index).min(bound);
                    bx.set_upper(index, u);
                }
                Halfspace::CoordGe { index, bound } => {
                    let l = bx.lower.at(index).max(bound);
                    bx.set_lower(index, l);
                }
                Halfspace::SumLe { .. } | Halfspace::SumGe { .. } => unreachable!("weak cuts are axis-orthogonal"),
            }
        }
        candidates.retain(|p| bx.contains(p));
        if candidates.is_empty() {
            return Err(Error::EmptyCandidateSet(x));
        }
        if audit && !minimizers.iter().any(|m| bx.contains(m)) {
            return Err(Error::Precondition(format!("cut at {x} removed every minimizer")));
        }
        let type_index = if d.i.is_null() { d.j } else { d.i };
        log.push(ReductionLogEntry {
            peel_box,
            peel_point: x,
            cut,
            type_index,
            candidates_after: candidates.len(),
        });
    }
}
