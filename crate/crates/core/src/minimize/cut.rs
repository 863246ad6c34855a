use std::fmt;

use serde::{Deserialize, Serialize};

use crate::point::{Index, LatticePoint};

/// One of the four half-space forms produced by minimizer cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Halfspace {
    /// `y(index) ≤ bound`
    CoordLe { index: Index, bound: i64 },
    /// `y(index) ≥ bound`
    CoordGe { index: Index, bound: i64 },
    /// `y(N) ≤ bound`
    SumLe { bound: i64 },
    /// `y(N) ≥ bound`
    SumGe { bound: i64 },
}

impl Halfspace {
    pub fn contains(&self, y: &LatticePoint) -> bool {
        match *self {
            Halfspace::CoordLe { index, bound } => y.at(index) <= bound,
            Halfspace::CoordGe { index, bound } => y.at(index) >= bound,
            Halfspace::SumLe { bound } => y.sum() <= bound,
            Halfspace::SumGe { bound } => y.sum() >= bound,
        }
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Halfspace::CoordLe { index, bound } => write!(f, "y({index}) <= {bound}"),
            Halfspace::CoordGe { index, bound } => write!(f, "y({index}) >= {bound}"),
            Halfspace::SumLe { bound } => write!(f, "y(N) <= {bound}"),
            Halfspace::SumGe { bound } => write!(f, "y(N) >= {bound}"),
        }
    }
}

/// Half-spaces claimed to contain a minimizer, derived from the exchange `(i, j)` at `at`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub at: LatticePoint,
    pub i: Index,
    pub j: Index,
    pub halfspaces: Vec<Halfspace>,
}

impl CutCertificate {
    pub fn contains(&self, y: &LatticePoint) -> bool {
        self.halfspaces.iter().all(|h| h.contains(y))
    }
}

/// `x*(i) ≤ x(i) − 1` for `i ≠ 0` and `x*(j) ≥ x(j) + 1` for `j ≠ 0`.
pub fn weak_cut(x: &LatticePoint, i: Index, j: Index) -> CutCertificate {
    let mut halfspaces = Vec::new();
    if !i.is_null() {
        halfspaces.push(Halfspace::CoordLe { index: i, bound: x.at(i) - 1 });
    }
    if !j.is_null() {
        halfspaces.push(Halfspace::CoordGe { index: j, bound: x.at(j) + 1 });
    }
    CutCertificate { at: x.clone(), i, j, halfspaces }
}

/// [`weak_cut`] plus `x*(N) ≤ x(N) − 1` when `j = 0`, or `x*(N) ≥ x(N) + 1` when `i = 0`.
pub fn strong_cut(x: &LatticePoint, i: Index, j: Index) -> CutCertificate {
    let mut cut = weak_cut(x, i, j);
    if j.is_null() && !i.is_null() {
        cut.halfspaces.push(Halfspace::SumLe { bound: x.sum() - 1 });
    }
    if i.is_null() && !j.is_null() {
        cut.halfspaces.push(Halfspace::SumGe { bound: x.sum() + 1 });
    }
    cut
}
