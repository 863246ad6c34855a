//! Integer boxes `[ℓ, u]` and coordinate extremes of finite point sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{Index, LatticePoint};

/// Integer interval `[lower, upper] ⊆ Z^n`. Empty when some `lower(i) > upper(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntBox {
    pub lower: LatticePoint,
    pub upper: LatticePoint,
}

impl IntBox {
    pub fn new(lower: LatticePoint, upper: LatticePoint) -> Result<Self> {
        upper.check_dim(lower.dim())?;
        Ok(IntBox { lower, upper })
    }

    /// `[lo, hi]^n`.
    pub fn cube(n: usize, lo: i64, hi: i64) -> Self {
        IntBox { lower: LatticePoint::new(vec![lo; n]), upper: LatticePoint::new(vec![hi; n]) }
    }

    pub fn from_ranges(ranges: &[(i64, i64)]) -> Self {
        IntBox {
            lower: LatticePoint::new(ranges.iter().map(|r| r.0).collect()),
            upper: LatticePoint::new(ranges.iter().map(|r| r.1).collect()),
        }
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.coords().iter().zip(self.upper.coords()).any(|(l, u)| l > u)
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        x.dim() == self.dim()
            && x.coords()
                .iter()
                .zip(self.lower.coords().iter().zip(self.upper.coords()))
                .all(|(c, (l, u))| l <= c && c <= u)
    }

    /// Number of lattice points, saturating.
    pub fn size(&self) -> u128 {
        if self.is_empty() {
            return 0;
        }
        self.lower
            .coords()
            .iter()
            .zip(self.upper.coords())
            .map(|(l, u)| (u - l) as u128 + 1)
            .fold(1u128, |acc, s| acc.saturating_mul(s))
    }

    /// `max_i (u(i) - ℓ(i))`.
    pub fn max_width(&self) -> i64 {
        self.lower.coords().iter().zip(self.upper.coords()).map(|(l, u)| u - l).max().unwrap_or(0)
    }

    pub fn width(&self, i: Index) -> i64 {
        self.upper.at(i) - self.lower.at(i)
    }

    /// Lattice points in lexicographic order.
    pub fn points(&self) -> BoxPoints<'_> {
        BoxPoints { bx: self, next: if self.is_empty() { None } else { Some(self.lower.clone()) } }
    }

    pub fn set_upper(&mut self, i: Index, v: i64) {
        let p = i.position().expect("null index");
        let mut c = self.upper.clone().into_coords();
        c[p] = v;
        self.upper = LatticePoint::new(c);
    }

    pub fn set_lower(&mut self, i: Index, v: i64) {
        let p = i.position().expect("null index");
        let mut c = self.lower.clone().into_coords();
        c[p] = v;
        self.lower = LatticePoint::new(c);
    }
}

pub struct BoxPoints<'a> {
    bx: &'a IntBox,
    next: Option<LatticePoint>,
}

impl Iterator for BoxPoints<'_> {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        let current = self.next.take()?;
        let mut c = current.coords().to_vec();
        let (lo, hi) = (self.bx.lower.coords(), self.bx.upper.coords());
        let mut k = c.len();
        let mut advanced = false;
        while k > 0 {
            k -= 1;
            if c[k] < hi[k] {
                c[k] += 1;
                advanced = true;
                break;
            }
            c[k] = lo[k];
        }
        if advanced {
            self.next = Some(LatticePoint::new(c));
        }
        Some(current)
    }
}

fn common_dim<'a, I>(points: I) -> Result<(usize, Vec<&'a LatticePoint>)>
where
    I: IntoIterator<Item = &'a LatticePoint>,
{
    let pts: Vec<_> = points.into_iter().collect();
    let first = pts.first().ok_or(Error::EmptySet)?;
    let n = first.dim();
    for p in &pts {
        p.check_dim(n)?;
    }
    Ok((n, pts))
}

/// Componentwise min/max box `[ℓ(S), u(S)]`.
pub fn coordinate_bounds<'a, I>(points: I) -> Result<IntBox>
where
    I: IntoIterator<Item = &'a LatticePoint>,
{
    let (n, pts) = common_dim(points)?;
    let mut lo = vec![i64::MAX; n];
    let mut hi = vec![i64::MIN; n];
    for p in pts {
        for (k, c) in p.coords().iter().enumerate() {
            lo[k] = lo[k].min(*c);
            hi[k] = hi[k].max(*c);
        }
    }
    Ok(IntBox { lower: LatticePoint::new(lo), upper: LatticePoint::new(hi) })
}

/// `L∞(S) = max ‖x - y‖∞`, via the widest coordinate range.
pub fn linf_diameter<'a, I>(points: I) -> Result<i64>
where
    I: IntoIterator<Item = &'a LatticePoint>,
{
    Ok(coordinate_bounds(points)?.max_width())
}
