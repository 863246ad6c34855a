//! Lattice points, exchange indices and the exchange step `x - χ_i + χ_j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer vector in `Z^n`. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

/// An element of `{0, 1, ..., n}`; 0 is the null element with `χ_0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Index(pub usize);

impl Index {
    pub const NULL: Index = Index(0);

    pub fn is_null(self) -> bool {
        self.0 == 0
    }

    /// 0-based coordinate position, `None` for the null index.
    pub fn position(self) -> Option<usize> {
        self.0.checked_sub(1)
    }

    /// `1..=n` followed by the null index.
    pub fn with_null_last(n: usize) -> impl Iterator<Item = Index> {
        (1..=n).chain(std::iter::once(0)).map(Index)
    }

    pub fn all(n: usize) -> impl Iterator<Item = Index> {
        (0..=n).map(Index)
    }

    pub fn nonnull(n: usize) -> impl Iterator<Item = Index> {
        (1..=n).map(Index)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for Index {
    fn from(v: usize) -> Self {
        Index(v)
    }
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn zeros(n: usize) -> Self {
        LatticePoint(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    /// Coordinate `x(i)` for a non-null index.
    pub fn at(&self, i: Index) -> i64 {
        self.0[i.position().expect("coordinate of the null index")]
    }

    /// `x(N)`, the sum of all coordinates.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn check_dim(&self, n: usize) -> Result<()> {
        if self.dim() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: n, found: self.dim() })
        }
    }

    pub fn check_index(&self, i: Index) -> Result<()> {
        if i.0 <= self.dim() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i.0, dim: self.dim() })
        }
    }

    /// `x - χ_i + χ_j`, panicking on an out-of-range index.
    pub fn exchange(&self, i: Index, j: Index) -> LatticePoint {
        let mut c = self.0.clone();
        if let Some(p) = i.position() {
            c[p] -= 1;
        }
        if let Some(q) = j.position() {
            c[q] += 1;
        }
        LatticePoint(c)
    }

    /// `x - α χ_i + α χ_j`.
    pub fn scaled_exchange(&self, i: Index, j: Index, alpha: i64) -> LatticePoint {
        let mut c = self.0.clone();
        if let Some(p) = i.position() {
            c[p] -= alpha;
        }
        if let Some(q) = j.position() {
            c[q] += alpha;
        }
        LatticePoint(c)
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }

    pub fn l1_dist(&self, other: &LatticePoint) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).sum()
    }

    pub fn linf_dist(&self, other: &LatticePoint) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).max().unwrap_or(0)
    }

    /// `‖x - y‖₁ + |x(N) - y(N)|`, the distance behind `μ̃`.
    pub fn tilde_dist(&self, other: &LatticePoint) -> i64 {
        self.l1_dist(other) + (self.sum() - other.sum()).abs()
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: i64) -> LatticePoint {
        let mut c = self.0.clone();
        c.push(last);
        LatticePoint(c)
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        LatticePoint(v.to_vec())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Checked `x - χ_i + χ_j`.
pub fn exchange_step(x: &LatticePoint, i: Index, j: Index) -> Result<LatticePoint> {
    x.check_index(i)?;
    x.check_index(j)?;
    Ok(x.exchange(i, j))
}

/// `supp⁺(d) = {i | d(i) > 0}`, ascending.
pub fn supp_pos(d: &LatticePoint) -> Vec<Index> {
    d.0.iter().enumerate().filter(|(_, c)| **c > 0).map(|(k, _)| Index(k + 1)).collect()
}

/// `supp⁻(d) = {j | d(j) < 0}`, ascending.
pub fn supp_neg(d: &LatticePoint) -> Vec<Index> {
    d.0.iter().enumerate().filter(|(_, c)| **c < 0).map(|(k, _)| Index(k + 1)).collect()
}
