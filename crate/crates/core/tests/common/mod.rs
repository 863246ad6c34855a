#![allow(dead_code)]

use mnat::axioms::{check_mnat_exc, check_ssqm_nat, Axiom};
use mnat::gallery::{self, gen_laminar_convex, gen_random_filtered, gen_random_filtered_sized, gen_separable_convex, monotone_map};
use mnat::{IntBox, Rational, TabulatedFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Instance {
    pub name: String,
    pub f: TabulatedFunction,
}

fn inst(name: impl Into<String>, f: TabulatedFunction) -> Instance {
    Instance { name: name.into(), f }
}

/// Boxes cycled through by the random suites, all within 4×4×4.
pub fn suite_box(seed: u64) -> IntBox {
    match seed % 5 {
        0 => IntBox::cube(3, 0, 3),
        1 => IntBox::from_ranges(&[(0, 3), (0, 3)]),
        2 => IntBox::from_ranges(&[(0, 2), (0, 3), (0, 1)]),
        3 => IntBox::from_ranges(&[(0, 3)]),
        _ => IntBox::cube(3, 0, 2),
    }
}

/// At least 100 seeded tables with values in [0, 5] passing the quasi axiom.
/// Sub-domains of fewer than 4 or 6 points are skipped, since small tables pass trivially.
pub fn random_quasi(count: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let min_points = if seed.is_multiple_of(2) { 4 } else { 6 };
        if let Some(f) =
            gen_random_filtered_sized(&suite_box(seed), (0, 5), seed, Axiom::SsqmNat, 5000, min_points).unwrap()
        {
            out.push(inst(format!("random-quasi-{seed}"), f));
        }
        seed += 1;
    }
    out
}

/// M♮-convex tables: separable and laminar convex on boxes, and filtered random tables.
pub fn random_mnat(count: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let bx = suite_box(seed);
        let f = match seed % 3 {
            0 => Some(gen_separable_convex(&bx, seed).unwrap()),
            1 => Some(gen_laminar_convex(&bx, seed).unwrap()),
            _ => gen_random_filtered(&bx, (0, 5), seed, Axiom::MnatExc, 400).unwrap(),
        };
        if let Some(f) = f {
            out.push(inst(format!("random-mnat-{seed}"), f));
        }
        seed += 1;
    }
    out
}

/// Cubic remaps of M♮-convex tables: quasi but generally not M♮-convex.
pub fn remapped(count: usize) -> Vec<Instance> {
    random_mnat(count)
        .into_iter()
        .map(|i| {
            let shift = Rational::from_integer(3);
            let g = monotone_map(&i.f, |v| (v + shift) * (v + shift) * (v + shift)).unwrap();
            inst(format!("{}-cubed", i.name), g)
        })
        .collect()
}

/// Unfiltered random tables on random subsets of a box.
pub fn random_any(count: usize) -> Vec<Instance> {
    (0..count as u64)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
            let bx = suite_box(seed);
            let mut f = TabulatedFunction::empty(bx.dim());
            for x in bx.points() {
                if rng.gen_bool(0.6) || f.is_empty() {
                    f.insert(x, Rational::from_integer(rng.gen_range(0..=5))).unwrap();
                }
            }
            inst(format!("random-any-{seed}"), f)
        })
        .collect()
}

pub fn gallery_instances() -> Vec<Instance> {
    gallery::entries().into_iter().map(|e| inst(e.name, e.function)).collect()
}

/// Every quasi instance: gallery entries passing the quasi axiom plus the random suites.
pub fn quasi_corpus() -> Vec<Instance> {
    let mut all = gallery_instances();
    all.extend(random_quasi(100));
    all.extend(remapped(20));
    all.retain(|i| check_ssqm_nat(&i.f).unwrap().pass);
    all
}

pub fn mnat_corpus() -> Vec<Instance> {
    let mut all = gallery_instances();
    all.extend(random_mnat(60));
    all.extend(random_quasi(100));
    all.retain(|i| check_mnat_exc(&i.f).unwrap().pass);
    all
}

/// Largest coordinate spread of the domain.
pub fn diameter(f: &TabulatedFunction) -> i64 {
    mnat::linf_diameter(f.domain()).unwrap()
}
