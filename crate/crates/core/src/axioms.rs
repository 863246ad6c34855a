//! Brute-force checkers for the exchange axioms.
//!
//! Every checker quantifies over `x, y ∈ dom f` in lexicographic order, then over
//! `i ∈ supp⁺(x − y)` ascending, and tries candidates `j` ascending with the null
//! index last. The first triple `(x, y, i)` for which no candidate satisfies the
//! axiom's requirement is reported with the outcome of every candidate, so the
//! certificate can be replayed against the function.
//!
//! | axiom              | candidates `j`           | requirement                         |
//! |--------------------|--------------------------|-------------------------------------|
//! | `mnat-exc`         | `supp⁻(x−y) ∪ {0}`       | `f(x)+f(y) ≥ f(x−χi+χj)+f(y+χi−χj)` |
//! | `ssqm-nat`         | `supp⁻(x−y) ∪ {0}`       | strict gain at x, or at y, or ties  |
//! | `m-exc`            | `supp⁻(x−y)`             | inequality                          |
//! | `ssqm`             | `supp⁻(x−y)`             | quasi                               |
//! | `ssqm-nat-prj-i`   | as `ssqm-nat`, only when `x(N) > y(N)`                         |
//! | `ssqm-nat-prj-ii`  | as `ssqm`, only when `x(N) ≤ y(N)`                             |
//! | `ssqm-nat-prj-iii` | `supp⁻(x−y)` with `i = 0`, only when `x(N) < y(N)`             |
//! | `mnat-set`         | `supp⁻(x−y) ∪ {0}`       | both exchanged points stay in S     |

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{Oracle, TabulatedFunction};
use crate::point::{supp_neg, supp_pos, Index, LatticePoint};
use crate::value::{sum_ge, ExtendedValue};
use crate::Mode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    #[serde(rename = "ssqm-nat")]
    SsqmNat,
    #[serde(rename = "mnat-exc")]
    MnatExc,
    #[serde(rename = "m-exc")]
    MExc,
    #[serde(rename = "ssqm")]
    Ssqm,
    #[serde(rename = "ssqm-nat-prj-i")]
    SsqmNatPrjI,
    #[serde(rename = "ssqm-nat-prj-ii")]
    SsqmNatPrjII,
    #[serde(rename = "ssqm-nat-prj-iii")]
    SsqmNatPrjIII,
    #[serde(rename = "mnat-set")]
    MnatSet,
    #[serde(rename = "descent-lemma")]
    DescentLemma,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::SsqmNat,
        Axiom::MnatExc,
        Axiom::MExc,
        Axiom::Ssqm,
        Axiom::SsqmNatPrjI,
        Axiom::SsqmNatPrjII,
        Axiom::SsqmNatPrjIII,
        Axiom::MnatSet,
        Axiom::DescentLemma,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::SsqmNat => "ssqm-nat",
            Axiom::MnatExc => "mnat-exc",
            Axiom::MExc => "m-exc",
            Axiom::Ssqm => "ssqm",
            Axiom::SsqmNatPrjI => "ssqm-nat-prj-i",
            Axiom::SsqmNatPrjII => "ssqm-nat-prj-ii",
            Axiom::SsqmNatPrjIII => "ssqm-nat-prj-iii",
            Axiom::MnatSet => "mnat-set",
            Axiom::DescentLemma => "descent-lemma",
        }
    }

    pub fn from_id(s: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.id() == s)
    }

    fn allows_null(self) -> bool {
        matches!(self, Axiom::SsqmNat | Axiom::MnatExc | Axiom::SsqmNatPrjI | Axiom::MnatSet)
    }

    fn uses_inequality(self) -> bool {
        matches!(self, Axiom::MnatExc | Axiom::MExc | Axiom::MnatSet)
    }

    fn applies(self, x_sum: i64, y_sum: i64) -> bool {
        match self {
            Axiom::SsqmNatPrjI => x_sum > y_sum,
            Axiom::SsqmNatPrjII => x_sum <= y_sum,
            Axiom::SsqmNatPrjIII => x_sum < y_sum,
            _ => true,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Evaluation of one exchange candidate `(i, j)` for a pair `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeOutcome {
    pub i: Index,
    pub j: Index,
    /// `f(x − χi + χj)`
    pub fx_exchanged: ExtendedValue,
    /// `f(y + χi − χj)`
    pub fy_exchanged: ExtendedValue,
    pub cond_x_improves: bool,
    pub cond_y_improves: bool,
    pub cond_both_equal: bool,
    pub inequality_holds: bool,
}

impl ExchangeOutcome {
    pub fn evaluate<O: Oracle + ?Sized>(f: &O, x: &LatticePoint, y: &LatticePoint, i: Index, j: Index) -> Self {
        let fx = f.value(x);
        let fy = f.value(y);
        let fxe = f.value(&x.exchange(i, j));
        let fye = f.value(&y.exchange(j, i));
        ExchangeOutcome {
            i,
            j,
            fx_exchanged: fxe,
            fy_exchanged: fye,
            cond_x_improves: fxe < fx,
            cond_y_improves: fye < fy,
            cond_both_equal: fxe == fx && fye == fy,
            inequality_holds: sum_ge(fx, fy, fxe, fye),
        }
    }

    pub fn quasi_holds(&self) -> bool {
        self.cond_x_improves || self.cond_y_improves || self.cond_both_equal
    }

    fn satisfies(&self, axiom: Axiom) -> bool {
        match axiom {
            Axiom::DescentLemma => self.cond_x_improves,
            a if a.uses_inequality() => self.inequality_holds,
            _ => self.quasi_holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub x: LatticePoint,
    pub y: LatticePoint,
    pub i: Index,
    pub fx: ExtendedValue,
    pub fy: ExtendedValue,
    pub candidates: Vec<ExchangeOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub pass: bool,
    pub violation: Option<Violation>,
    /// Every violation, filled only by exhaustive runs.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub all_violations: Vec<Violation>,
}

impl AxiomReport {
    fn from_violations(axiom: Axiom, mut all: Vec<Violation>, exhaustive: bool) -> Self {
        let violation = all.first().cloned();
        if !exhaustive {
            all.clear();
        }
        AxiomReport { axiom, pass: violation.is_none(), violation, all_violations: all }
    }

    /// Re-evaluates the certificate against `f`: the recorded outcomes must be
    /// reproduced exactly, the candidate list must be the full candidate set,
    /// and no candidate may satisfy the axiom.
    pub fn replay(&self, f: &TabulatedFunction) -> bool {
        if self.axiom == Axiom::MnatSet {
            return self.replay_on(&domain_indicator(f));
        }
        self.replay_on(f)
    }

    fn replay_on(&self, f: &TabulatedFunction) -> bool {
        match &self.violation {
            None => self.pass,
            Some(v) => !self.pass && replay_violation(f, self.axiom, v),
        }
    }
}

fn replay_violation(f: &TabulatedFunction, axiom: Axiom, v: &Violation) -> bool {
    if v.x.dim() != f.dim() || v.y.dim() != f.dim() {
        return false;
    }
    if f.value(&v.x) != v.fx || f.value(&v.y) != v.fy || !v.fx.is_finite() || !v.fy.is_finite() {
        return false;
    }
    let expected = candidate_pairs(axiom, &v.x, &v.y, v.i);
    let recorded: Vec<_> = v.candidates.iter().map(|c| (c.i, c.j)).collect();
    if expected != recorded {
        return false;
    }
    v.candidates.iter().all(|c| {
        let again = ExchangeOutcome::evaluate(f, &v.x, &v.y, c.i, c.j);
        again == *c && !again.satisfies(axiom)
    })
}

/// Options shared by all checkers.
#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    /// Collect every violation instead of stopping at the first.
    pub exhaustive: bool,
}

fn candidate_pairs(axiom: Axiom, x: &LatticePoint, y: &LatticePoint, i: Index) -> Vec<(Index, Index)> {
    let d = x.sub(y);
    if axiom == Axiom::DescentLemma {
        let is: Vec<Index> = supp_pos(&d).into_iter().chain([Index::NULL]).collect();
        let js: Vec<Index> = supp_neg(&d).into_iter().chain([Index::NULL]).collect();
        return is
            .iter()
            .flat_map(|&a| js.iter().map(move |&b| (a, b)))
            .filter(|(a, b)| !(a.is_null() && b.is_null()))
            .collect();
    }
    let mut js = supp_neg(&d);
    if axiom.allows_null() {
        js.push(Index::NULL);
    }
    js.into_iter().map(|j| (i, j)).collect()
}

fn violations_at(
    f: &TabulatedFunction,
    axiom: Axiom,
    x: &LatticePoint,
    exhaustive: bool,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let fx = f.value(x);
    for y in f.domain() {
        if !axiom.applies(x.sum(), y.sum()) {
            continue;
        }
        let fy = f.value(y);
        let is: Vec<Index> = match axiom {
            Axiom::SsqmNatPrjIII => vec![Index::NULL],
            Axiom::DescentLemma => {
                if fx > fy {
                    vec![Index::NULL]
                } else {
                    vec![]
                }
            }
            _ => supp_pos(&x.sub(y)),
        };
        for i in is {
            let candidates: Vec<ExchangeOutcome> = candidate_pairs(axiom, x, y, i)
                .into_iter()
                .map(|(a, b)| ExchangeOutcome::evaluate(f, x, y, a, b))
                .collect();
            if !candidates.iter().any(|c| c.satisfies(axiom)) {
                out.push(Violation { x: x.clone(), y: y.clone(), i, fx, fy, candidates });
                if !exhaustive {
                    return out;
                }
            }
        }
    }
    out
}

fn domain_indicator(f: &TabulatedFunction) -> TabulatedFunction {
    f.map_values(|_| 0.into())
}

/// Runs any axiom checker on a tabulated function. `mnat-set` looks at `dom f` only.
pub fn check_axiom(f: &TabulatedFunction, axiom: Axiom, opts: CheckOptions) -> Result<AxiomReport> {
    f.require_nonempty()?;
    if axiom == Axiom::MnatSet && f.entries().any(|(_, v)| *v != 0.into()) {
        return check_axiom(&domain_indicator(f), axiom, opts);
    }
    let xs: Vec<&LatticePoint> = f.domain().collect();
    let all: Vec<Violation> = if opts.exhaustive {
        xs.par_iter().map(|x| violations_at(f, axiom, x, true)).collect::<Vec<_>>().concat()
    } else {
        xs.par_iter()
            .find_map_first(|x| violations_at(f, axiom, x, false).into_iter().next())
            .into_iter()
            .collect()
    };
    Ok(AxiomReport::from_violations(axiom, all, opts.exhaustive))
}

/// (SSQM♮): some `j ∈ supp⁻(x−y) ∪ {0}` gives a strict gain at x, at y, or ties at both.
pub fn check_ssqm_nat(f: &TabulatedFunction) -> Result<AxiomReport> {
    check_axiom(f, Axiom::SsqmNat, CheckOptions::default())
}

/// (M♮-EXC)
pub fn check_mnat_exc(f: &TabulatedFunction) -> Result<AxiomReport> {
    check_axiom(f, Axiom::MnatExc, CheckOptions::default())
}

/// (M-EXC)
pub fn check_m_exc(f: &TabulatedFunction) -> Result<AxiomReport> {
    check_axiom(f, Axiom::MExc, CheckOptions::default())
}

/// (SSQM)
pub fn check_ssqm(f: &TabulatedFunction) -> Result<AxiomReport> {
    check_axiom(f, Axiom::Ssqm, CheckOptions::default())
}

/// The three parts of the projected quasi axiom, checked independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrjReport {
    pub part_i: AxiomReport,
    pub part_ii: AxiomReport,
    pub part_iii: AxiomReport,
}

impl PrjReport {
    pub fn all_pass(&self) -> bool {
        self.part_i.pass && self.part_ii.pass && self.part_iii.pass
    }

    pub fn parts(&self) -> [&AxiomReport; 3] {
        [&self.part_i, &self.part_ii, &self.part_iii]
    }
}

pub fn check_ssqm_nat_prj(f: &TabulatedFunction) -> Result<PrjReport> {
    check_ssqm_nat_prj_with(f, CheckOptions::default())
}

pub fn check_ssqm_nat_prj_with(f: &TabulatedFunction, opts: CheckOptions) -> Result<PrjReport> {
    Ok(PrjReport {
        part_i: check_axiom(f, Axiom::SsqmNatPrjI, opts)?,
        part_ii: check_axiom(f, Axiom::SsqmNatPrjII, opts)?,
        part_iii: check_axiom(f, Axiom::SsqmNatPrjIII, opts)?,
    })
}

/// Set exchange axiom: both `x − χi + χj` and `y + χi − χj` stay in `S`.
pub fn check_mnat_set<'a>(points: impl IntoIterator<Item = &'a LatticePoint>) -> Result<AxiomReport> {
    let pts: Vec<&LatticePoint> = points.into_iter().collect();
    let first = pts.first().ok_or(Error::EmptySet)?;
    let indicator = TabulatedFunction::indicator(first.dim(), pts.iter().copied())?;
    check_axiom(&indicator, Axiom::MnatSet, CheckOptions::default())
}

/// For every pair with `f(x) > f(y)`, some `i ∈ supp⁺(x−y)∪{0}`, `j ∈ supp⁻(x−y)∪{0}`
/// has `f(x − χi + χj) < f(x)`.
///
/// Violations carry `i = 0` and list every `(i, j)` pair in their candidates.
pub fn check_descent_lemma(f: &TabulatedFunction, mode: Mode) -> Result<AxiomReport> {
    if mode == Mode::Strict {
        require(f, Axiom::SsqmNat)?;
    }
    check_axiom(f, Axiom::DescentLemma, CheckOptions::default())
}

/// Errors with the failing report unless `f` passes `axiom`.
pub fn require(f: &TabulatedFunction, axiom: Axiom) -> Result<()> {
    let report = check_axiom(f, axiom, CheckOptions::default())?;
    if report.pass {
        Ok(())
    } else {
        Err(Error::AxiomFailed(Box::new(report)))
    }
}
