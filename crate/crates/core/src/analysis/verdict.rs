use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::argmin_set;
use crate::function::{Oracle, TabulatedFunction};
use crate::minimize::Halfspace;
use crate::point::{Index, LatticePoint};
use crate::value::ExtendedValue;

/// Directional minimizer-cut statements.
///
/// `Q*` hold under (SSQM♮) when their row/column minimum is attained at a
/// non-null index, `M*` under (M♮-EXC) for every minimizing index, `A*` under
/// (M-EXC) with indices restricted to `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Qi,
    Qii,
    Qiii,
    Qiv,
    Mi,
    Mii,
    Miii,
    Miv,
    Ai,
    Aii,
    Aiii,
}

impl Variant {
    pub const ALL: [Variant; 11] = [
        Variant::Qi,
        Variant::Qii,
        Variant::Qiii,
        Variant::Qiv,
        Variant::Mi,
        Variant::Mii,
        Variant::Miii,
        Variant::Miv,
        Variant::Ai,
        Variant::Aii,
        Variant::Aiii,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Variant::Qi => "qi",
            Variant::Qii => "qii",
            Variant::Qiii => "qiii",
            Variant::Qiv => "qiv",
            Variant::Mi => "mi",
            Variant::Mii => "mii",
            Variant::Miii => "miii",
            Variant::Miv => "miv",
            Variant::Ai => "ai",
            Variant::Aii => "aii",
            Variant::Aiii => "aiii",
        }
    }

    pub fn from_id(s: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.id().eq_ignore_ascii_case(s))
    }

    /// Whether the variant is parameterized by a fixed coordinate.
    pub fn uses_fixed(self) -> bool {
        matches!(self, Variant::Qi | Variant::Qii | Variant::Mi | Variant::Mii | Variant::Ai | Variant::Aii)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// local optimality over `N ∪ {0}` iff global
    LocalGlobal,
    /// local optimality over `N` iff global
    LocalGlobalM,
    MinCutWeak,
    MinCutStrong,
    Directional(Variant),
    StatementA,
    Geodesic,
    ProximityMnat,
    ProximityM,
    ProjectionBridgeMExc,
    ProjectionBridgeSsqm,
    PrjImpliesSsqmNat,
}

impl Theorem {
    pub fn id(self) -> String {
        match self {
            Theorem::LocalGlobal => "local-global".into(),
            Theorem::LocalGlobalM => "local-global-m".into(),
            Theorem::MinCutWeak => "min-cut-weak".into(),
            Theorem::MinCutStrong => "min-cut-strong".into(),
            Theorem::Directional(v) => format!("min-cut-directional-{}", v.id()),
            Theorem::StatementA => "statement-a".into(),
            Theorem::Geodesic => "geodesic".into(),
            Theorem::ProximityMnat => "proximity-mnat".into(),
            Theorem::ProximityM => "proximity-m".into(),
            Theorem::ProjectionBridgeMExc => "projection-bridge-m-exc".into(),
            Theorem::ProjectionBridgeSsqm => "projection-bridge-ssqm".into(),
            Theorem::PrjImpliesSsqmNat => "prj-implies-ssqm-nat".into(),
        }
    }

    pub fn from_id(s: &str) -> Option<Theorem> {
        if let Some(v) = s.strip_prefix("min-cut-directional-") {
            return Variant::from_id(v).map(Theorem::Directional);
        }
        [
            Theorem::LocalGlobal,
            Theorem::LocalGlobalM,
            Theorem::MinCutWeak,
            Theorem::MinCutStrong,
            Theorem::StatementA,
            Theorem::Geodesic,
            Theorem::ProximityMnat,
            Theorem::ProximityM,
            Theorem::ProjectionBridgeMExc,
            Theorem::ProjectionBridgeSsqm,
            Theorem::PrjImpliesSsqmNat,
        ]
        .into_iter()
        .find(|t| t.id() == s)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.id())
    }
}

impl<'de> Deserialize<'de> for Theorem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Theorem::from_id(&s).ok_or_else(|| serde::de::Error::custom(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails,
    HypothesisNotMet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    /// `‖x* − x‖₁`
    L1,
    /// `‖x* − x‖₁ + |x*(N) − x(N)|`
    Tilde,
    /// `‖x* − x‖∞`
    Linf,
    /// `max(‖x* − x‖∞, |x*(N) − x(N)|)`
    LinfAndSum,
}

impl Metric {
    pub fn dist(self, a: &LatticePoint, b: &LatticePoint) -> i64 {
        match self {
            Metric::L1 => a.l1_dist(b),
            Metric::Tilde => a.tilde_dist(b),
            Metric::Linf => a.linf_dist(b),
            Metric::LinfAndSum => a.linf_dist(b).max((a.sum() - b.sum()).abs()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub point: LatticePoint,
    pub value: ExtendedValue,
}

/// Minimum distance from `point` to the minimizer set under `metric`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceRecord {
    pub point: LatticePoint,
    pub metric: Metric,
    pub value: i64,
}

/// Whether `point` lies in each of the context's required half-spaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCheck {
    pub point: LatticePoint,
    pub satisfied: Vec<bool>,
}

/// Everything a failing verdict depended on.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CounterContext {
    pub x: Option<LatticePoint>,
    pub pair: Option<(Index, Index)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub evaluations: Vec<Evaluation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub required: Vec<Halfspace>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CandidateCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub distances: Vec<DistanceRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sets: BTreeMap<String, Vec<LatticePoint>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub quantities: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl CounterContext {
    pub fn at(x: &LatticePoint) -> Self {
        CounterContext { x: Some(x.clone()), ..Default::default() }
    }

    pub(crate) fn eval(&mut self, f: &TabulatedFunction, p: &LatticePoint) {
        self.evaluations.push(Evaluation { point: p.clone(), value: f.value(p) });
    }

    pub(crate) fn check_all(&mut self, points: &[LatticePoint]) {
        for p in points {
            let satisfied = self.required.iter().map(|h| h.contains(p)).collect();
            self.checks.push(CandidateCheck { point: p.clone(), satisfied });
        }
    }

    pub(crate) fn distance(&mut self, p: &LatticePoint, metric: Metric, argmin: &[LatticePoint]) -> i64 {
        let value = argmin.iter().map(|m| metric.dist(m, p)).min().unwrap_or(i64::MAX);
        self.distances.push(DistanceRecord { point: p.clone(), metric, value });
        value
    }

    /// Re-evaluates every recorded value, half-space check and minimizer
    /// distance against `f` and reports whether all of them reproduce.
    pub fn replay(&self, f: &TabulatedFunction) -> bool {
        let dims_ok = self.evaluations.iter().all(|e| e.point.dim() == f.dim())
            && self.checks.iter().all(|c| c.point.dim() == f.dim())
            && self.distances.iter().all(|d| d.point.dim() == f.dim());
        if !dims_ok {
            return false;
        }
        if !self.evaluations.iter().all(|e| f.value(&e.point) == e.value) {
            return false;
        }
        if !self.checks.iter().all(|c| {
            c.satisfied.len() == self.required.len()
                && self.required.iter().zip(&c.satisfied).all(|(h, s)| h.contains(&c.point) == *s)
        }) {
            return false;
        }
        let Ok(argmin) = argmin_set(f) else {
            return false;
        };
        if let Some(recorded) = self.sets.get("argmin") {
            if *recorded != argmin {
                return false;
            }
        }
        self.distances.iter().all(|d| {
            argmin.iter().map(|m| d.metric.dist(m, &d.point)).min() == Some(d.value)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    pub outcome: Outcome,
    pub holds: bool,
    pub witness: Option<LatticePoint>,
    pub counter_context: Option<CounterContext>,
}

impl TheoremVerdict {
    pub fn holds(theorem: Theorem, witness: Option<LatticePoint>) -> Self {
        TheoremVerdict { theorem, outcome: Outcome::Holds, holds: true, witness, counter_context: None }
    }

    pub fn fails(theorem: Theorem, ctx: CounterContext) -> Self {
        TheoremVerdict { theorem, outcome: Outcome::Fails, holds: false, witness: None, counter_context: Some(ctx) }
    }

    pub fn not_met(theorem: Theorem, ctx: CounterContext) -> Self {
        TheoremVerdict {
            theorem,
            outcome: Outcome::HypothesisNotMet,
            holds: false,
            witness: None,
            counter_context: Some(ctx),
        }
    }

    pub fn is_failure(&self) -> bool {
        self.outcome == Outcome::Fails
    }

    /// Failing verdicts must replay their context; others trivially do.
    pub fn replay(&self, f: &TabulatedFunction) -> bool {
        match (&self.outcome, &self.counter_context) {
            (Outcome::Fails, Some(ctx)) => ctx.replay(f),
            (Outcome::Fails, None) => false,
            _ => true,
        }
    }
}
