//! Worked examples with their expected verdicts, and seeded instance generators.
//!
//! Each [`GalleryEntry`] carries the checks it is known to pass or fail, so
//! [`audit_all`] can re-derive every claim from the table alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    argmin_set, geodesic_snapshot, project_to_m, proximity_gap, proximity_hypothesis, verify_geodesic,
    verify_min_cut_directional, verify_min_cut_strong, verify_min_cut_weak, verify_proximity, verify_statement_a,
    Outcome, Regime, TheoremVerdict, Variant,
};
use crate::axioms::{check_axiom, check_mnat_exc, check_ssqm_nat, Axiom, CheckOptions};
use crate::bounds::IntBox;
use crate::error::{Error, Result};
use crate::function::TabulatedFunction;
use crate::minimize::steepest_direction;
use crate::point::{Index, LatticePoint};
use crate::value::{ExtendedValue, Rational};

/// Largest table the generators will build.
pub const SIZE_LIMIT: u128 = 1_000_000;

/// Largest table on which generators re-run the exchange-axiom checker.
pub const VERIFY_LIMIT: u128 = 2_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisNotMet,
}

impl From<&TheoremVerdict> for Verdict {
    fn from(v: &TheoremVerdict) -> Self {
        match v.outcome {
            Outcome::Holds => Verdict::Pass,
            Outcome::Fails => Verdict::Fail,
            Outcome::HypothesisNotMet => Verdict::HypothesisNotMet,
        }
    }
}

fn pass_if(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// A claim about a function that can be re-checked from its table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Check {
    Axiom { axiom: Axiom },
    /// Passes unless `(x, y, i)` is one of the axiom's violations.
    AxiomAt { axiom: Axiom, x: LatticePoint, y: LatticePoint, i: Index },
    /// The axiom on the lift `f̃(x, −x(N)) = f(x)`.
    LiftedAxiom { axiom: Axiom },
    Argmin { points: Vec<LatticePoint> },
    /// Value reached by the steepest exchange at `x`.
    SteepestValue { x: LatticePoint, value: ExtendedValue },
    NearestDistances { x: LatticePoint, mu: Option<i64>, mu_tilde: Option<i64> },
    MinCutWeak { x: LatticePoint, pair: (Index, Index) },
    MinCutStrong { x: LatticePoint, pair: (Index, Index) },
    StatementA { x: LatticePoint, pair: (Index, Index) },
    Geodesic { x: LatticePoint, pair: (Index, Index) },
    Directional { x: LatticePoint, variant: Variant, fixed: Index },
    Proximity { alpha: i64, regime: Regime },
    /// `x` is an `α`-scaled local minimizer at the given distance from `argmin f`.
    ScaledMinimizerGap { x: LatticePoint, alpha: i64, regime: Regime, gap: i64 },
}

impl Check {
    pub fn evaluate(&self, f: &TabulatedFunction) -> Result<Verdict> {
        Ok(match self {
            Check::Axiom { axiom } => pass_if(check_axiom(f, *axiom, CheckOptions::default())?.pass),
            Check::AxiomAt { axiom, x, y, i } => {
                let report = check_axiom(f, *axiom, CheckOptions { exhaustive: true })?;
                pass_if(!report.all_violations.iter().any(|v| v.x == *x && v.y == *y && v.i == *i))
            }
            Check::LiftedAxiom { axiom } => {
                pass_if(check_axiom(&project_to_m(f), *axiom, CheckOptions::default())?.pass)
            }
            Check::Argmin { points } => {
                let mut want = points.clone();
                want.sort();
                pass_if(argmin_set(f)? == want)
            }
            Check::SteepestValue { x, value } => {
                let got = steepest_direction(f, x, None)?.map(|d| d.value);
                pass_if(got == Some(*value))
            }
            Check::NearestDistances { x, mu, mu_tilde } => {
                let s = geodesic_snapshot(f, x)?;
                pass_if(mu.is_none_or(|m| m == s.mu) && mu_tilde.is_none_or(|m| m == s.mu_tilde))
            }
            Check::MinCutWeak { x, pair } => (&verify_min_cut_weak(f, x, *pair)?).into(),
            Check::MinCutStrong { x, pair } => (&verify_min_cut_strong(f, x, *pair)?).into(),
            Check::StatementA { x, pair } => (&verify_statement_a(f, x, *pair)?).into(),
            Check::Geodesic { x, pair } => (&verify_geodesic(f, x, *pair)?).into(),
            Check::Directional { x, variant, fixed } => (&verify_min_cut_directional(f, x, *variant, *fixed)?).into(),
            Check::Proximity { alpha, regime } => (&verify_proximity(f, *alpha, *regime)?).into(),
            Check::ScaledMinimizerGap { x, alpha, regime, gap } => {
                pass_if(proximity_hypothesis(f, x, *alpha, *regime) && proximity_gap(f, x, *regime)? == *gap)
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub check: Check,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalleryEntry {
    pub name: String,
    pub function: TabulatedFunction,
    pub expected: Vec<Expectation>,
}

/// One replayed expectation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditLine {
    pub entry: String,
    pub check: Check,
    pub expected: Verdict,
    pub actual: Verdict,
    pub ok: bool,
}

impl GalleryEntry {
    fn new(name: impl Into<String>, function: TabulatedFunction) -> Self {
        GalleryEntry { name: name.into(), function, expected: Vec::new() }
    }

    fn expect(mut self, check: Check, verdict: Verdict) -> Self {
        self.expected.push(Expectation { check, verdict });
        self
    }

    /// Replays every expectation against `f` (normally `self.function`, or a
    /// copy read back from disk).
    pub fn audit_against(&self, f: &TabulatedFunction) -> Result<Vec<AuditLine>> {
        self.expected
            .iter()
            .map(|e| {
                let actual = e.check.evaluate(f)?;
                Ok(AuditLine {
                    entry: self.name.clone(),
                    check: e.check.clone(),
                    expected: e.verdict,
                    actual,
                    ok: actual == e.verdict,
                })
            })
            .collect()
    }

    pub fn audit(&self) -> Result<Vec<AuditLine>> {
        self.audit_against(&self.function)
    }
}

fn pt<const N: usize>(c: [i64; N]) -> LatticePoint {
    c.into()
}

fn pair(i: usize, j: usize) -> (Index, Index) {
    (Index(i), Index(j))
}

/// Quasi M♮-convex function on 9 points of `Z³` with minimizers `(2,1,0)` and `(2,0,1)`.
pub fn example_2_1() -> GalleryEntry {
    let f = TabulatedFunction::from_ints(
        3,
        [
            ([2, 1, 0], 0),
            ([2, 0, 1], 0),
            ([1, 1, 0], 1),
            ([1, 0, 1], 1),
            ([0, 1, 1], 2),
            ([0, 0, 2], 2),
            ([1, 1, 1], 3),
            ([1, 0, 2], 3),
            ([0, 1, 2], 4),
        ],
    )
    .expect("static table");
    let x = pt([0, 1, 2]);
    GalleryEntry::new("example-2-1", f)
        .expect(Check::Axiom { axiom: Axiom::SsqmNat }, Verdict::Pass)
        .expect(Check::Axiom { axiom: Axiom::MnatExc }, Verdict::Fail)
        .expect(Check::Axiom { axiom: Axiom::DescentLemma }, Verdict::Pass)
        .expect(Check::Argmin { points: vec![pt([2, 1, 0]), pt([2, 0, 1])] }, Verdict::Pass)
        .expect(Check::SteepestValue { x: x.clone(), value: ExtendedValue::int(2) }, Verdict::Pass)
        .expect(Check::MinCutWeak { x: x.clone(), pair: pair(2, 0) }, Verdict::Pass)
        .expect(Check::MinCutStrong { x: x.clone(), pair: pair(2, 0) }, Verdict::Fail)
        .expect(Check::NearestDistances { x: x.clone(), mu: None, mu_tilde: Some(4) }, Verdict::Pass)
        .expect(Check::Geodesic { x, pair: pair(2, 0) }, Verdict::Fail)
}

/// `f(x) = 2 − x(1)` on `[0,2] × [0,1]`.
pub fn example_2_2() -> GalleryEntry {
    let bx = IntBox::from_ranges(&[(0, 2), (0, 1)]);
    let f = TabulatedFunction::from_box_fn(&bx, |x| Some(Rational::from_integer(2 - x.coords()[0])));
    let x = pt([0, 1]);
    GalleryEntry::new("example-2-2", f)
        .expect(Check::Axiom { axiom: Axiom::MnatExc }, Verdict::Pass)
        .expect(Check::LiftedAxiom { axiom: Axiom::MExc }, Verdict::Pass)
        .expect(Check::Argmin { points: vec![pt([2, 0]), pt([2, 1])] }, Verdict::Pass)
        .expect(Check::NearestDistances { x: x.clone(), mu: Some(2), mu_tilde: None }, Verdict::Pass)
        .expect(Check::NearestDistances { x: pt([1, 0]), mu: Some(1), mu_tilde: None }, Verdict::Pass)
        .expect(Check::MinCutWeak { x: x.clone(), pair: pair(2, 1) }, Verdict::Pass)
        .expect(Check::StatementA { x: x.clone(), pair: pair(2, 1) }, Verdict::Fail)
        .expect(Check::Geodesic { x, pair: pair(2, 1) }, Verdict::Pass)
        .expect(Check::Proximity { alpha: 2, regime: Regime::Mnat }, Verdict::Pass)
}

/// The `4(k+1)`-point function on `[0,k] × [0,1] × [0,1]` whose `2`-scaled
/// local minimizer `(k,0,0)` is at distance `k` from the unique minimizer.
pub fn example_2_4(k: i64) -> Result<GalleryEntry> {
    if k < 2 {
        return Err(Error::Precondition(format!("k must be at least 2, got {k}")));
    }
    let bx = IntBox::from_ranges(&[(0, k), (0, 1), (0, 1)]);
    let f = TabulatedFunction::from_box_fn(&bx, |x| {
        let c = x.coords();
        let v = (c[1] + c[2]) * (c[0] - k - 1);
        Some(Rational::from_integer(v))
    });
    let far = k > Regime::Mnat.bound(3, 2);
    Ok(GalleryEntry::new(format!("example-2-4-k{k}"), f)
        .expect(Check::Axiom { axiom: Axiom::SsqmNat }, Verdict::Pass)
        .expect(Check::Argmin { points: vec![pt([0, 1, 1])] }, Verdict::Pass)
        .expect(Check::ScaledMinimizerGap { x: pt([k, 0, 0]), alpha: 2, regime: Regime::Mnat, gap: k }, Verdict::Pass)
        .expect(Check::Proximity { alpha: 2, regime: Regime::Mnat }, if far { Verdict::Fail } else { Verdict::Pass }))
}

/// Quasi M♮-convex function on 4 points of `Z²` with unique minimizer `(2,0)`.
pub fn example_4_1() -> GalleryEntry {
    let f = TabulatedFunction::from_ints(2, [([1, 0], 1), ([2, 0], 0), ([0, 1], 2), ([1, 1], 3)]).expect("static table");
    GalleryEntry::new("example-4-1", f)
        .expect(Check::Axiom { axiom: Axiom::SsqmNat }, Verdict::Pass)
        .expect(Check::Argmin { points: vec![pt([2, 0])] }, Verdict::Pass)
        .expect(Check::Directional { x: pt([1, 1]), variant: Variant::Mi, fixed: Index(1) }, Verdict::Fail)
        .expect(Check::Directional { x: pt([1, 1]), variant: Variant::Qi, fixed: Index(1) }, Verdict::HypothesisNotMet)
        .expect(Check::Directional { x: pt([0, 1]), variant: Variant::Miii, fixed: Index::NULL }, Verdict::Fail)
        .expect(Check::Axiom { axiom: Axiom::SsqmNatPrjIII }, Verdict::Fail)
        .expect(Check::LiftedAxiom { axiom: Axiom::Ssqm }, Verdict::Fail)
}

/// Quasi M♮-convex function on `{x ≥ 0, x(1) + x(2) ≤ 2}`.
pub fn example_4_2() -> GalleryEntry {
    let f = TabulatedFunction::from_ints(
        2,
        [([0, 0], 0), ([1, 0], 1), ([0, 1], 1), ([0, 2], 2), ([2, 0], 3), ([1, 1], 3)],
    )
    .expect("static table");
    GalleryEntry::new("example-4-2", f)
        .expect(Check::Axiom { axiom: Axiom::SsqmNat }, Verdict::Pass)
        .expect(Check::Axiom { axiom: Axiom::MnatSet }, Verdict::Pass)
        .expect(Check::Axiom { axiom: Axiom::SsqmNatPrjII }, Verdict::Fail)
        .expect(
            Check::AxiomAt { axiom: Axiom::SsqmNatPrjII, x: pt([0, 2]), y: pt([2, 0]), i: Index(2) },
            Verdict::Fail,
        )
        .expect(Check::LiftedAxiom { axiom: Axiom::Ssqm }, Verdict::Fail)
}

/// `g(x) = f(−x)`. Expectations are not carried over.
pub fn example_neg_flip(entry: &GalleryEntry) -> GalleryEntry {
    let f = entry.function.map_points(LatticePoint::neg, entry.function.dim()).expect("negation is injective");
    GalleryEntry::new(format!("{}-flip", entry.name), f)
}

/// The flip of [`example_4_1`], which breaks the `i = 0` cases of the
/// column and decrement statements.
pub fn example_4_1_flip() -> GalleryEntry {
    example_neg_flip(&example_4_1())
        .expect(Check::Axiom { axiom: Axiom::SsqmNat }, Verdict::Pass)
        .expect(Check::Argmin { points: vec![pt([-2, 0])] }, Verdict::Pass)
        .expect(Check::Directional { x: pt([-1, -1]), variant: Variant::Mii, fixed: Index(1) }, Verdict::Fail)
        .expect(Check::Directional { x: pt([0, -1]), variant: Variant::Miv, fixed: Index::NULL }, Verdict::Fail)
}

/// Every named entry, with `k ∈ {2, 5, 10}` for the proximity family.
pub fn entries() -> Vec<GalleryEntry> {
    let mut out = vec![example_2_1(), example_2_2()];
    for k in [2, 5, 10] {
        out.push(example_2_4(k).expect("k >= 2"));
    }
    out.extend([example_4_1(), example_4_2(), example_4_1_flip()]);
    out
}

pub fn names() -> Vec<String> {
    let mut names: Vec<String> = entries().into_iter().map(|e| e.name).collect();
    names.push("example-2-4".into());
    names
}

/// Looks up an entry; `example-2-4` takes its parameter from `k`.
pub fn by_name(name: &str, k: Option<i64>) -> Result<GalleryEntry> {
    let canonical = name.replace('_', "-");
    if canonical == "example-2-4" {
        return example_2_4(k.unwrap_or(5));
    }
    entries()
        .into_iter()
        .find(|e| e.name == canonical)
        .ok_or_else(|| Error::Precondition(format!("unknown gallery entry {name:?}")))
}

/// Audits every entry in [`entries`].
pub fn audit_all() -> Result<Vec<AuditLine>> {
    let mut out = Vec::new();
    for e in entries() {
        out.extend(e.audit()?);
    }
    Ok(out)
}

fn check_size(bx: &IntBox) -> Result<()> {
    if bx.is_empty() {
        return Err(Error::EmptyDomain);
    }
    if bx.size() > SIZE_LIMIT {
        return Err(Error::SizeLimit { size: bx.size(), limit: SIZE_LIMIT });
    }
    Ok(())
}

fn assert_axiom(f: &TabulatedFunction, check: fn(&TabulatedFunction) -> Result<crate::axioms::AxiomReport>) -> Result<()> {
    if f.len() as u128 <= VERIFY_LIMIT {
        let report = check(f)?;
        if !report.pass {
            return Err(Error::AxiomFailed(Box::new(report)));
        }
    }
    Ok(())
}

/// Integer convex sequence of `len` values: random start, random first slope, nondecreasing slopes.
fn convex_sequence(rng: &mut ChaCha8Rng, len: usize) -> Vec<i64> {
    let mut v = rng.gen_range(0..=5);
    let mut slope = rng.gen_range(-6..=3);
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v);
        v += slope;
        slope += rng.gen_range(0..=3);
    }
    out
}

/// `Σ φ_i(x(i))` over a box.
pub fn separable(bx: &IntBox, phi: impl Fn(usize, i64) -> Rational) -> TabulatedFunction {
    TabulatedFunction::from_box_fn(bx, |x| Some(x.coords().iter().enumerate().map(|(i, &t)| phi(i, t)).sum()))
}

/// Random separable convex function on a box. Checked against (M♮-EXC)
/// when the box has at most [`VERIFY_LIMIT`] points.
pub fn gen_separable_convex(bx: &IntBox, seed: u64) -> Result<TabulatedFunction> {
    check_size(bx)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phis: Vec<Vec<i64>> = Index::nonnull(bx.dim()).map(|i| convex_sequence(&mut rng, (bx.width(i) + 1) as usize)).collect();
    let lower = bx.lower.coords().to_vec();
    let f = separable(bx, |i, t| Rational::from_integer(phis[i][(t - lower[i]) as usize]));
    assert_axiom(&f, check_mnat_exc)?;
    Ok(f)
}

/// Random `ψ(x(N)) + Σ φ_i(x(i))` with convex `ψ, φ_i` on a box, which is M♮-convex
/// without being separable.
pub fn gen_laminar_convex(bx: &IntBox, seed: u64) -> Result<TabulatedFunction> {
    check_size(bx)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phis: Vec<Vec<i64>> = Index::nonnull(bx.dim()).map(|i| convex_sequence(&mut rng, (bx.width(i) + 1) as usize)).collect();
    let (smin, smax) = (bx.lower.sum(), bx.upper.sum());
    let psi = convex_sequence(&mut rng, (smax - smin + 1) as usize);
    let lower = bx.lower.coords().to_vec();
    let f = TabulatedFunction::from_box_fn(bx, |x| {
        let sep: i64 = x.coords().iter().enumerate().map(|(i, &t)| phis[i][(t - lower[i]) as usize]).sum();
        Some(Rational::from_integer(sep + psi[(x.sum() - smin) as usize]))
    });
    assert_axiom(&f, check_mnat_exc)?;
    Ok(f)
}

/// Remaps values through a strictly increasing table of `(old, new)` pairs
/// covering every value of `f`. (SSQM♮) only compares values, so its verdict
/// is preserved; this is re-checked on tables up to [`VERIFY_LIMIT`] points.
pub fn monotone_transform(f: &TabulatedFunction, remap: &[(Rational, Rational)]) -> Result<TabulatedFunction> {
    for w in remap.windows(2) {
        if !(w[0].0 < w[1].0 && w[0].1 < w[1].1) {
            return Err(Error::NonMonotone(format!("{} -> {}, {} -> {}", w[0].0, w[0].1, w[1].0, w[1].1)));
        }
    }
    let lookup = |v: &Rational| remap.binary_search_by(|(old, _)| old.cmp(v)).ok().map(|k| remap[k].1);
    if let Some(missing) = f.value_set().into_iter().find(|v| lookup(v).is_none()) {
        return Err(Error::NonMonotone(format!("value {missing} has no image")));
    }
    let g = f.map_values(|v| lookup(v).expect("checked above"));
    if f.len() as u128 <= VERIFY_LIMIT && check_ssqm_nat(f)?.pass != check_ssqm_nat(&g)?.pass {
        return Err(Error::NonMonotone("quasi verdict changed under the remap".into()));
    }
    Ok(g)
}

/// [`monotone_transform`] with the remap table built from a closure on `f`'s value set.
pub fn monotone_map(f: &TabulatedFunction, g: impl Fn(&Rational) -> Rational) -> Result<TabulatedFunction> {
    let remap: Vec<(Rational, Rational)> = f.value_set().into_iter().map(|v| (v, g(&v))).collect();
    monotone_transform(f, &remap)
}

fn random_subdomain(bx: &IntBox, rng: &mut ChaCha8Rng) -> Vec<LatticePoint> {
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for i in Index::nonnull(bx.dim()) {
        let a = rng.gen_range(bx.lower.at(i)..=bx.upper.at(i));
        let b = rng.gen_range(a..=bx.upper.at(i));
        lo.push(a);
        hi.push(b);
    }
    let sub = IntBox { lower: lo.into(), upper: hi.into() };
    match rng.gen_range(0..4) {
        // sub-box cut by a band of coordinate sums
        0 => {
            let s1 = rng.gen_range(sub.lower.sum()..=sub.upper.sum());
            let s2 = rng.gen_range(s1..=sub.upper.sum());
            sub.points().filter(|x| (s1..=s2).contains(&x.sum())).collect()
        }
        // arbitrary subset
        1 => sub.points().filter(|_| rng.gen_bool(0.75)).collect(),
        _ => sub.points().collect(),
    }
}

/// Rejection-samples a table on a random sub-domain of `bx` with integer
/// values in `values` until it passes `axiom`; `None` after `max_attempts`.
pub fn gen_random_filtered(
    bx: &IntBox,
    values: (i64, i64),
    seed: u64,
    axiom: Axiom,
    max_attempts: usize,
) -> Result<Option<TabulatedFunction>> {
    gen_random_filtered_sized(bx, values, seed, axiom, max_attempts, 1)
}

/// As [`gen_random_filtered`], skipping sub-domains with fewer than `min_points` points.
pub fn gen_random_filtered_sized(
    bx: &IntBox,
    values: (i64, i64),
    seed: u64,
    axiom: Axiom,
    max_attempts: usize,
    min_points: usize,
) -> Result<Option<TabulatedFunction>> {
    check_size(bx)?;
    if values.0 > values.1 {
        return Err(Error::Precondition(format!("empty value range [{}, {}]", values.0, values.1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_attempts {
        let dom = random_subdomain(bx, &mut rng);
        if dom.is_empty() || dom.len() < min_points {
            continue;
        }
        let mut f = TabulatedFunction::empty(bx.dim());
        for x in dom {
            f.insert(x, Rational::from_integer(rng.gen_range(values.0..=values.1)))?;
        }
        if check_axiom(&f, axiom, CheckOptions::default())?.pass {
            return Ok(Some(f));
        }
    }
    Ok(None)
}
