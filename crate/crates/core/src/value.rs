//! Exact function values extended with `+∞`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_rational::{Ratio, Rational64};
use num_traits::CheckedAdd;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Rational64;

/// A finite exact rational or `+∞`.
///
/// The derived order puts every finite value below `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedValue {
    Finite(Rational),
    Infinity,
}

impl ExtendedValue {
    pub const INFINITY: ExtendedValue = ExtendedValue::Infinity;

    pub fn int(v: i64) -> Self {
        ExtendedValue::Finite(Rational::from_integer(v))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedValue::Finite(_))
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            ExtendedValue::Finite(q) => Some(*q),
            ExtendedValue::Infinity => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => {
                a.checked_add(b).map(ExtendedValue::Finite)
            }
            _ => Some(ExtendedValue::Infinity),
        }
    }
}

impl From<Rational> for ExtendedValue {
    fn from(q: Rational) -> Self {
        ExtendedValue::Finite(q)
    }
}

impl From<i64> for ExtendedValue {
    fn from(v: i64) -> Self {
        ExtendedValue::int(v)
    }
}

impl Add for ExtendedValue {
    type Output = ExtendedValue;

    fn add(self, rhs: Self) -> Self::Output {
        self.checked_add(&rhs).expect("rational overflow in extended addition")
    }
}

/// `a + b >= c + d` over the extended reals, with `∞ >= ∞` true.
///
/// Finite sums are formed in 128-bit arithmetic so no 64-bit input overflows.
pub fn sum_ge(a: ExtendedValue, b: ExtendedValue, c: ExtendedValue, d: ExtendedValue) -> bool {
    let widen = |q: Rational| Ratio::<i128>::new(*q.numer() as i128, *q.denom() as i128);
    let lhs = match (a, b) {
        (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => Some(widen(a) + widen(b)),
        _ => None,
    };
    let rhs = match (c, d) {
        (ExtendedValue::Finite(c), ExtendedValue::Finite(d)) => Some(widen(c) + widen(d)),
        _ => None,
    };
    match (lhs, rhs) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(l), Some(r)) => l.cmp(&r) != Ordering::Less,
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p"`, `"p/q"` or a plain decimal such as `"-1.25"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidValue(s.to_string());
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            return int.parse::<i64>().map(Rational::from_integer).map_err(|_| bad());
        }
        if !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let whole: i64 = match int {
            "" | "-" | "+" => 0,
            _ => int.parse().map_err(|_| bad())?,
        };
        let denom = 10i64.pow(frac.len() as u32);
        let frac_num: i64 = frac.parse().map_err(|_| bad())?;
        let magnitude = whole
            .checked_abs()
            .and_then(|w| w.checked_mul(denom))
            .and_then(|w| w.checked_add(frac_num))
            .ok_or_else(bad)?;
        let numer = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(numer, denom));
    }
    s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad())
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::Finite(q) => f.write_str(&format_rational(q)),
            ExtendedValue::Infinity => f.write_str("+inf"),
        }
    }
}

impl FromStr for ExtendedValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+inf" | "inf" | "infinity" | "+infinity" => Ok(ExtendedValue::Infinity),
            other => parse_rational(other).map(ExtendedValue::Finite),
        }
    }
}

pub(crate) fn rational_from_json_number(n: &serde_json::Number) -> Result<Rational> {
    if let Some(i) = n.as_i64() {
        return Ok(Rational::from_integer(i));
    }
    // Shortest round-trip decimal of the float, read back exactly.
    let f = n.as_f64().ok_or_else(|| Error::InvalidValue(n.to_string()))?;
    if !f.is_finite() {
        return Err(Error::InvalidValue(n.to_string()));
    }
    parse_rational(&format!("{f}"))
}

/// JSON form: integers as numbers, other rationals as `"p/q"`, infinity as `"+inf"`.
impl Serialize for ExtendedValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedValue::Finite(q) if q.is_integer() => serializer.serialize_i64(*q.numer()),
            ExtendedValue::Finite(q) => serializer.serialize_str(&format_rational(q)),
            ExtendedValue::Infinity => serializer.serialize_str("+inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ValueVisitor;

        impl Visitor<'_> for ValueVisitor {
            type Value = ExtendedValue;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer, a \"p/q\" string or \"+inf\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Self::Value, E> {
                Ok(ExtendedValue::int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Self::Value, E> {
                i64::try_from(v)
                    .map(ExtendedValue::int)
                    .map_err(|_| E::custom(format!("value {v} out of range")))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Self::Value, E> {
                let n = serde_json::Number::from_f64(v)
                    .ok_or_else(|| E::custom("non-finite number"))?;
                rational_from_json_number(&n)
                    .map(ExtendedValue::Finite)
                    .map_err(E::custom)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(ValueVisitor)
    }
}

pub(crate) fn rational_to_json(q: &Rational) -> serde_json::Value {
    if q.is_integer() {
        serde_json::Value::from(*q.numer())
    } else {
        serde_json::Value::from(format_rational(q))
    }
}
