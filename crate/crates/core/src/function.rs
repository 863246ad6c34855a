//! Tabulated functions `f: Z^n → Q ∪ {+∞}` and the evaluation-only oracle interface.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bounds::{coordinate_bounds, IntBox};
use crate::error::{Error, Result};
use crate::point::LatticePoint;
use crate::value::{rational_to_json, ExtendedValue, Rational};

/// Evaluation-only access to a function on `Z^n`.
///
/// Descent algorithms only need this; anything that enumerates the
/// effective domain needs a [`TabulatedFunction`].
pub trait Oracle: Sync {
    fn dim(&self) -> usize;

    /// Value at `x`; callers guarantee `x.dim() == self.dim()`.
    fn value(&self, x: &LatticePoint) -> ExtendedValue;

    fn table(&self) -> Option<&TabulatedFunction> {
        None
    }
}

/// Wraps a closure as an [`Oracle`].
pub struct FnOracle<F> {
    dim: usize,
    f: F,
}

impl<F> FnOracle<F>
where
    F: Fn(&LatticePoint) -> ExtendedValue + Sync,
{
    pub fn new(dim: usize, f: F) -> Self {
        FnOracle { dim, f }
    }
}

impl<F> Oracle for FnOracle<F>
where
    F: Fn(&LatticePoint) -> ExtendedValue + Sync,
{
    fn dim(&self) -> usize {
        self.dim
    }

    fn value(&self, x: &LatticePoint) -> ExtendedValue {
        (self.f)(x)
    }
}

/// Finite table of values; every point not in the table has value `+∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabulatedFunction {
    dim: usize,
    table: BTreeMap<LatticePoint, Rational>,
}

impl TabulatedFunction {
    pub fn empty(dim: usize) -> Self {
        TabulatedFunction { dim, table: BTreeMap::new() }
    }

    /// Builds a table, rejecting wrong dimensions and repeated points.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticePoint, Rational)>,
    {
        let mut f = TabulatedFunction::empty(dim);
        for (x, v) in entries {
            f.insert(x, v)?;
        }
        Ok(f)
    }

    /// Convenience constructor for integer-valued tables.
    pub fn from_ints<P>(dim: usize, entries: impl IntoIterator<Item = (P, i64)>) -> Result<Self>
    where
        P: Into<LatticePoint>,
    {
        Self::from_entries(dim, entries.into_iter().map(|(x, v)| (x.into(), Rational::from_integer(v))))
    }

    /// Tabulates `g` over a box, keeping points where `g` is finite.
    pub fn from_box_fn(bx: &IntBox, g: impl Fn(&LatticePoint) -> Option<Rational>) -> Self {
        let table = bx.points().filter_map(|x| g(&x).map(|v| (x, v))).collect();
        TabulatedFunction { dim: bx.dim(), table }
    }

    /// The indicator (value 0) of a finite set.
    pub fn indicator<'a>(dim: usize, points: impl IntoIterator<Item = &'a LatticePoint>) -> Result<Self> {
        let mut f = TabulatedFunction::empty(dim);
        for x in points {
            x.check_dim(dim)?;
            f.table.insert(x.clone(), Rational::from_integer(0));
        }
        Ok(f)
    }

    pub fn insert(&mut self, x: LatticePoint, v: Rational) -> Result<()> {
        x.check_dim(self.dim)?;
        if self.table.contains_key(&x) {
            return Err(Error::Format(format!("point {x} listed more than once")));
        }
        self.table.insert(x, v);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn eval(&self, x: &LatticePoint) -> Result<ExtendedValue> {
        x.check_dim(self.dim)?;
        Ok(self.value_of(x))
    }

    fn value_of(&self, x: &LatticePoint) -> ExtendedValue {
        self.table.get(x).map_or(ExtendedValue::Infinity, |v| ExtendedValue::Finite(*v))
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.table.contains_key(x)
    }

    /// Effective domain in lexicographic order.
    pub fn domain(&self) -> impl ExactSizeIterator<Item = &LatticePoint> + Clone {
        self.table.keys()
    }

    pub fn entries(&self) -> impl ExactSizeIterator<Item = (&LatticePoint, &Rational)> {
        self.table.iter()
    }

    pub fn require_nonempty(&self) -> Result<()> {
        if self.table.is_empty() {
            Err(Error::EmptyDomain)
        } else {
            Ok(())
        }
    }

    pub fn require_in_domain(&self, x: &LatticePoint) -> Result<Rational> {
        x.check_dim(self.dim)?;
        self.table.get(x).copied().ok_or_else(|| Error::NotInDomain(x.clone()))
    }

    pub fn min_value(&self) -> Option<Rational> {
        self.table.values().min().copied()
    }

    pub fn bounding_box(&self) -> Result<IntBox> {
        coordinate_bounds(self.table.keys()).map_err(|_| Error::EmptyDomain)
    }

    /// Distinct finite values, ascending.
    pub fn value_set(&self) -> Vec<Rational> {
        let mut v: Vec<_> = self.table.values().copied().collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn map_values(&self, g: impl Fn(&Rational) -> Rational) -> TabulatedFunction {
        TabulatedFunction {
            dim: self.dim,
            table: self.table.iter().map(|(x, v)| (x.clone(), g(v))).collect(),
        }
    }

    pub fn map_points(&self, g: impl Fn(&LatticePoint) -> LatticePoint, dim: usize) -> Result<TabulatedFunction> {
        TabulatedFunction::from_entries(dim, self.table.iter().map(|(x, v)| (g(x), *v)))
    }

    pub fn restrict(&self, keep: impl Fn(&LatticePoint) -> bool) -> TabulatedFunction {
        TabulatedFunction {
            dim: self.dim,
            table: self.table.iter().filter(|(x, _)| keep(x)).map(|(x, v)| (x.clone(), *v)).collect(),
        }
    }

    pub fn to_file(&self) -> FunctionFile {
        FunctionFile {
            dim: self.dim,
            points: self
                .table
                .iter()
                .map(|(x, v)| FilePoint { x: x.coords().to_vec(), f: rational_to_json(v) })
                .collect(),
        }
    }

    pub fn from_file(file: FunctionFile) -> Result<Self> {
        if file.dim == 0 {
            return Err(Error::Format("\"dim\" must be at least 1".into()));
        }
        let mut f = TabulatedFunction::empty(file.dim);
        for (k, p) in file.points.into_iter().enumerate() {
            let at = |msg: String| Error::Format(format!("points[{k}]: {msg}"));
            if p.x.len() != file.dim {
                return Err(at(format!("\"x\" has length {}, expected {}", p.x.len(), file.dim)));
            }
            let v: ExtendedValue =
                serde_json::from_value(p.f.clone()).map_err(|e| at(format!("bad \"f\" {}: {e}", p.f)))?;
            let v = v.finite().ok_or_else(|| at("listed points must have finite values".into()))?;
            f.insert(LatticePoint::new(p.x), v).map_err(|e| at(e.to_string()))?;
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("function file serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: FunctionFile = serde_json::from_str(s)?;
        Self::from_file(file)
    }

    pub fn read_from(mut r: impl Read) -> Result<Self> {
        let mut s = String::new();
        r.read_to_string(&mut s)?;
        Self::from_json(&s)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::read_from(std::fs::File::open(path)?)
    }

    pub fn write_to(&self, mut w: impl Write) -> Result<()> {
        w.write_all(self.to_json().as_bytes())?;
        w.write_all(b"\n")?;
        Ok(())
    }
}

impl Oracle for TabulatedFunction {
    fn dim(&self) -> usize {
        self.dim
    }

    fn value(&self, x: &LatticePoint) -> ExtendedValue {
        self.value_of(x)
    }

    fn table(&self) -> Option<&TabulatedFunction> {
        Some(self)
    }
}

/// On-disk function format: `{"dim": n, "points": [{"x": [...], "f": ...}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub dim: usize,
    pub points: Vec<FilePoint>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilePoint {
    pub x: Vec<i64>,
    pub f: serde_json::Value,
}
