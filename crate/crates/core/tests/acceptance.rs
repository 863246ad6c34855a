//! Acceptance run: one PASS/FAIL line per criterion, with sub-items indented.
//!
//! Known exceptions are printed as FAIL with the computed value and do not
//! change the exit status. Any other failure does.

mod common;

use std::time::{Duration, Instant};

use common::{diameter, gallery_instances, mnat_corpus, quasi_corpus, random_any, Instance};
use mnat::analysis::{
    argmin_set, directional_contexts, geodesic_snapshot, minimizing_contexts, project_to_m, proximity_gap,
    proximity_hypothesis, verify_geodesic, verify_local_global, verify_min_cut_directional, verify_min_cut_strong,
    verify_min_cut_weak, verify_projection_bridges, verify_proximity, verify_statement_a, Outcome, Regime,
    TheoremVerdict, Variant,
};
use mnat::axioms::{
    check_axiom, check_descent_lemma, check_m_exc, check_mnat_exc, check_mnat_set, check_ssqm, check_ssqm_nat,
    check_ssqm_nat_prj, Axiom, AxiomReport, CheckOptions,
};
use mnat::gallery::{self, gen_separable_convex};
use mnat::minimize::{basic_steepest_descent, domain_reduction, modified_steepest_descent, steepest_direction};
use mnat::{ExtendedValue, Index, IntBox, LatticePoint, Mode, Rational, TabulatedFunction};
use rayon::prelude::*;

fn pt(c: &[i64]) -> LatticePoint {
    LatticePoint::new(c.to_vec())
}

fn pair(i: usize, j: usize) -> (Index, Index) {
    (Index(i), Index(j))
}

#[derive(Default)]
struct Run {
    unexpected: Vec<String>,
}

/// Outcome of one sub-item: a pass, a failure, or a documented exception.
enum Item {
    Ok,
    Fail(String),
    Known(String),
}

fn item(ok: bool, detail: impl FnOnce() -> String) -> Item {
    if ok {
        Item::Ok
    } else {
        Item::Fail(detail())
    }
}

impl Run {
    fn criterion(&mut self, id: &str, title: &str, limit: Duration, items: Vec<(String, Duration, Item)>) {
        let mut ok = true;
        let mut known = 0;
        let mut lines = Vec::new();
        let mut total = Duration::ZERO;
        for (label, took, it) in items {
            total += took;
            let slow = took > limit;
            let (tag, note) = match it {
                Item::Ok if !slow => ("PASS", String::new()),
                Item::Ok => ("FAIL", format!(" over the {limit:?} limit")),
                Item::Fail(d) => ("FAIL", format!(": {d}")),
                Item::Known(d) => ("FAIL", format!(": known exception, {d}")),
            };
            if tag == "FAIL" {
                if note.starts_with(": known") {
                    known += 1;
                } else {
                    ok = false;
                    self.unexpected.push(format!("{id} {label}{note}"));
                }
            }
            lines.push(format!("    {tag} {id} {label} ({} ms){note}", took.as_millis()));
        }
        let tag = if ok && known == 0 { "PASS" } else { "FAIL" };
        let suffix = if ok && known > 0 { format!(", {known} known exception(s)") } else { String::new() };
        println!("{tag} criterion {id}: {title} ({} ms){suffix}", total.as_millis());
        for l in lines {
            println!("{l}");
        }
    }
}

fn timed(label: &str, body: impl FnOnce() -> Item) -> (String, Duration, Item) {
    let t = Instant::now();
    let it = body();
    (label.to_string(), t.elapsed(), it)
}

fn example_replay() -> Vec<(String, Duration, Item)> {
    let mut out = Vec::new();
    let f21 = gallery::example_2_1().function;
    let x = pt(&[0, 1, 2]);

    out.push(timed("example-2-1", || {
        let quasi = check_ssqm_nat(&f21).unwrap().pass;
        let steep = steepest_direction(&f21, &x, None).unwrap().unwrap();
        let weak = verify_min_cut_weak(&f21, &x, pair(2, 0)).unwrap();
        let strong = verify_min_cut_strong(&f21, &x, pair(2, 0)).unwrap();
        let no_low_sum = argmin_set(&f21).unwrap().iter().all(|m| m.sum() > 2);
        item(
            quasi
                && steep.value == ExtendedValue::int(2)
                && (steep.i, steep.j) == pair(2, 0)
                && weak.holds
                && weak.witness == Some(pt(&[2, 0, 1]))
                && strong.outcome == Outcome::Fails
                && no_low_sum,
            || format!("steepest {steep:?}, weak {weak:?}, strong {:?}", strong.outcome),
        )
    }));

    let f22 = gallery::example_2_2().function;
    out.push(timed("example-2-2", || {
        let x = pt(&[0, 1]);
        let s = geodesic_snapshot(&f22, &x).unwrap();
        let a = verify_statement_a(&f22, &x, pair(2, 1)).unwrap();
        let after = a.counter_context.as_ref().and_then(|c| c.quantities.get("distance_after_step").copied());
        item(
            check_mnat_exc(&f22).unwrap().pass
                && s.mu == 2
                && s.m_set == vec![pt(&[2, 1])]
                && a.outcome == Outcome::Fails
                && after == Some(1),
            || format!("mu {} set {:?}, statement {:?} after {after:?}", s.mu, s.m_set, a.outcome),
        )
    }));

    out.push(timed("example-2-3 distances and verdict", || {
        let s = geodesic_snapshot(&f21, &x).unwrap();
        let g = verify_geodesic(&f21, &x, pair(2, 0)).unwrap();
        let mut want = vec![pt(&[2, 1, 0]), pt(&[2, 0, 1])];
        want.sort();
        item(s.mu_tilde == 4 && s.m_tilde_set == want && g.outcome == Outcome::Fails, || {
            format!("mu~ {} set {:?}, geodesic {:?}", s.mu_tilde, s.m_tilde_set, g.outcome)
        })
    }));

    out.push(timed("example-2-3 mu~ after the (2,0) step equals 3", || {
        let next = x.exchange(Index(2), Index(0));
        let after = geodesic_snapshot(&f21, &next).unwrap().mu_tilde;
        if after == 3 {
            Item::Ok
        } else {
            Item::Known(format!("computed mu~({next}) = {after}; the sum term |x*(N) - x(N)| = 1 is included"))
        }
    }));

    for k in [2i64, 5, 10] {
        out.push(timed(&format!("example-2-4 k={k}"), || {
            let f = gallery::example_2_4(k).unwrap().function;
            let xh = pt(&[k, 0, 0]);
            let gap = proximity_gap(&f, &xh, Regime::Mnat).unwrap();
            let hyp = proximity_hypothesis(&f, &xh, 2, Regime::Mnat);
            let prox = verify_proximity(&f, 2, Regime::Mnat).unwrap();
            item(
                argmin_set(&f).unwrap() == vec![pt(&[0, 1, 1])] && hyp && gap == k && prox.holds == (k <= 3),
                || format!("hypothesis {hyp}, gap {gap}, proximity {:?}", prox.outcome),
            )
        }));
        out.push(timed(&format!("example-2-4 k={k} gap exceeds 3"), || {
            let f = gallery::example_2_4(k).unwrap().function;
            let gap = proximity_gap(&f, &pt(&[k, 0, 0]), Regime::Mnat).unwrap();
            if gap > Regime::Mnat.bound(3, 2) {
                Item::Ok
            } else {
                Item::Known(format!("gap = k = {gap} is within the bound 3"))
            }
        }));
    }

    out.push(timed("example-4-1", || {
        let f = gallery::example_4_1().function;
        let mi = verify_min_cut_directional(&f, &pt(&[1, 1]), Variant::Mi, Index(1)).unwrap();
        let miii = verify_min_cut_directional(&f, &pt(&[0, 1]), Variant::Miii, Index::NULL).unwrap();
        let prj = check_ssqm_nat_prj(&f).unwrap();
        let lifted = check_ssqm(&project_to_m(&f)).unwrap();
        item(
            mi.outcome == Outcome::Fails
                && mi.counter_context.as_ref().and_then(|c| c.pair) == Some(pair(1, 0))
                && miii.outcome == Outcome::Fails
                && !prj.part_iii.pass
                && !lifted.pass,
            || format!("mi {:?}, miii {:?}, prj iii {}, lifted {}", mi.outcome, miii.outcome, prj.part_iii.pass, lifted.pass),
        )
    }));

    out.push(timed("example-4-2", || {
        let f = gallery::example_4_2().function;
        let prj = check_ssqm_nat_prj(&f).unwrap();
        let v = prj.part_ii.violation.clone();
        item(
            check_ssqm_nat(&f).unwrap().pass
                && v.as_ref().is_some_and(|v| v.x == pt(&[0, 2]) && v.y == pt(&[2, 0]) && v.i == Index(2)),
            || format!("part ii violation {v:?}"),
        )
    }));
    out
}

/// First failing instance of a per-instance check, run in parallel.
fn sweep(corpus: &[Instance], check: impl Fn(&TabulatedFunction) -> Result<(), String> + Sync) -> Item {
    let bad = corpus.par_iter().find_map_first(|inst| check(&inst.f).err().map(|e| format!("{}: {e}", inst.name)));
    match bad {
        None => Item::Ok,
        Some(e) => Item::Fail(e),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn property_suites(quasi: &[Instance], mnat: &[Instance]) -> Vec<(String, Duration, Item)> {
    let random = quasi.iter().filter(|i| i.name.starts_with("random-quasi")).count();
    let mut out = vec![timed("quasi corpus has at least 100 random tables", || {
        item(random >= 100, || format!("{random} random tables"))
    })];

    out.push(timed("quasi suite", || {
        sweep(quasi, |f| {
            for x in f.domain() {
                ensure(verify_local_global(f, x).unwrap().holds, || format!("local-global at {x}"))?;
            }
            for (x, p) in minimizing_contexts(f).unwrap() {
                ensure(verify_min_cut_weak(f, &x, p).unwrap().holds, || format!("weak cut at {x}"))?;
            }
            for v in [Variant::Qi, Variant::Qii, Variant::Qiii, Variant::Qiv] {
                for (x, k) in directional_contexts(f, v) {
                    let out = verify_min_cut_directional(f, &x, v, k).unwrap().outcome;
                    ensure(out != Outcome::Fails, || format!("{v:?} at {x} fixed {k}"))?;
                }
            }
            ensure(check_descent_lemma(f, Mode::Fast).unwrap().pass, || "descent lemma".into())
        })
    }));

    out.push(timed("M-natural suite", || {
        sweep(mnat, |f| {
            for (x, p) in minimizing_contexts(f).unwrap() {
                ensure(verify_min_cut_strong(f, &x, p).unwrap().holds, || format!("strong cut at {x}"))?;
                ensure(verify_geodesic(f, &x, p).unwrap().holds, || format!("geodesic at {x}"))?;
            }
            for v in [Variant::Mi, Variant::Mii, Variant::Miii, Variant::Miv] {
                for (x, k) in directional_contexts(f, v) {
                    let out = verify_min_cut_directional(f, &x, v, k).unwrap().outcome;
                    ensure(out == Outcome::Holds, || format!("{v:?} at {x} fixed {k}"))?;
                }
            }
            for alpha in [2, 3] {
                ensure(verify_proximity(f, alpha, Regime::Mnat).unwrap().holds, || format!("proximity alpha {alpha}"))?;
            }
            for x0 in f.domain() {
                let t = basic_steepest_descent(f, x0, Mode::Fast).unwrap();
                let s = geodesic_snapshot(f, x0).unwrap();
                ensure(2 * t.iterations as i64 == s.mu_tilde, || format!("iterations from {x0}"))?;
            }
            Ok(())
        })
    }));

    out.push(timed("projection bridges", || {
        let mut all = gallery_instances();
        all.extend(random_any(60));
        all.extend(quasi.iter().map(|i| Instance { name: i.name.clone(), f: i.f.clone() }));
        let bridges = sweep(&all, |f| {
            let (s, verdicts) = verify_projection_bridges(f).unwrap();
            ensure(verdicts.iter().all(|v| v.holds), || format!("{s:?}"))
        });
        if let Item::Fail(_) = bridges {
            return bridges;
        }
        let converse: Vec<bool> = [gallery::example_4_1(), gallery::example_4_2()]
            .iter()
            .map(|e| {
                let (s, _) = verify_projection_bridges(&e.function).unwrap();
                s.ssqm_nat && !s.prj()
            })
            .collect();
        item(converse == [true, true], || format!("converse refutations {converse:?}"))
    }));
    out
}

fn dr_bound(n: i64, l: i64) -> f64 {
    8.0 * (n * n) as f64 * (1.0 + (1.0 + l as f64).log2())
}

fn algorithm_bounds(quasi: &[Instance]) -> Vec<(String, Duration, Item)> {
    let mut out = vec![timed("modified descent within 2nL + n", || {
        sweep(quasi, |f| {
            let (n, l) = (f.dim() as i64, diameter(f));
            let bx = f.bounding_box().unwrap();
            let argmin = argmin_set(f).unwrap();
            for x0 in f.domain() {
                let t = modified_steepest_descent(f, x0, &bx, Mode::Fast).unwrap();
                ensure(argmin.contains(&t.minimizer), || format!("from {x0} ended at {}", t.minimizer))?;
                ensure(t.iterations as i64 <= 2 * n * l + n, || format!("{} iterations from {x0}", t.iterations))?;
            }
            Ok(())
        })
    })];

    out.push(timed("domain reduction within 8 n^2 (1 + log2(1 + L))", || {
        let runs: Vec<&Instance> = quasi.iter().filter(|i| check_mnat_set(i.f.domain()).unwrap().pass).collect();
        let owned: Vec<Instance> = runs.iter().map(|i| Instance { name: i.name.clone(), f: i.f.clone() }).collect();
        if owned.len() < 50 {
            return Item::Fail(format!("only {} instances with an M-natural domain", owned.len()));
        }
        sweep(&owned, |f| {
            let out = domain_reduction(f, Mode::Strict, true).unwrap();
            let bound = dr_bound(f.dim() as i64, diameter(f));
            ensure(argmin_set(f).unwrap().contains(&out.minimizer), || format!("ended at {}", out.minimizer))?;
            ensure(out.iterations as f64 <= bound, || format!("{} iterations > {bound}", out.iterations))
        })
    }));

    out.push(timed("domain reduction on separable convex [0,50]^3", || {
        let f = gen_separable_convex(&IntBox::cube(3, 0, 50), 7).unwrap();
        let out = domain_reduction(&f, Mode::Fast, false).unwrap();
        let bound = dr_bound(3, 50);
        let min = f.min_value().unwrap();
        item(f.eval(&out.minimizer).unwrap() == ExtendedValue::Finite(min) && out.iterations as f64 <= bound, || {
            format!("ended at {} after {} iterations", out.minimizer, out.iterations)
        })
    }));
    out
}

/// Reloads `f` from its file form and replays a certificate read back from JSON.
fn replay_report(f: &TabulatedFunction, report: &AxiomReport) -> Result<(), String> {
    let text = serde_json::to_string(report).unwrap();
    let back: AxiomReport = serde_json::from_str(&text).unwrap();
    let g = TabulatedFunction::from_json(&f.to_json()).unwrap();
    ensure(back.replay(&g) && serde_json::to_string(&back).unwrap() == text, || format!("{} report", report.axiom))
}

fn replay_verdict(f: &TabulatedFunction, v: &TheoremVerdict) -> Result<(), String> {
    let text = serde_json::to_string(v).unwrap();
    let back: TheoremVerdict = serde_json::from_str(&text).unwrap();
    let g = TabulatedFunction::from_json(&f.to_json()).unwrap();
    ensure(back.replay(&g) && serde_json::to_string(&back).unwrap() == text, || format!("{} verdict", v.theorem.id()))
}

fn failing_verdicts(f: &TabulatedFunction) -> Vec<TheoremVerdict> {
    let mut out = Vec::new();
    for (x, p) in minimizing_contexts(f).unwrap() {
        out.push(verify_min_cut_weak(f, &x, p).unwrap());
        out.push(verify_min_cut_strong(f, &x, p).unwrap());
        out.push(verify_statement_a(f, &x, p).unwrap());
        out.push(verify_geodesic(f, &x, p).unwrap());
    }
    for v in Variant::ALL {
        for (x, k) in directional_contexts(f, v) {
            out.push(verify_min_cut_directional(f, &x, v, k).unwrap());
        }
    }
    for x in f.domain() {
        out.push(verify_local_global(f, x).unwrap());
    }
    out.push(verify_proximity(f, 2, Regime::Mnat).unwrap());
    out.extend(verify_projection_bridges(f).unwrap().1);
    out.retain(|v| v.is_failure());
    out
}

fn certificate_replay() -> (Vec<(String, Duration, Item)>, String) {
    let mut corpus = gallery_instances();
    corpus.extend(random_any(40));
    let mut reports = 0usize;
    let mut verdicts = 0usize;
    let mut out = vec![timed("axiom reports", || {
        let item = sweep(&corpus, |f| {
            for axiom in Axiom::ALL {
                let r = check_axiom(f, axiom, CheckOptions { exhaustive: true }).unwrap();
                if !r.pass {
                    replay_report(f, &r)?;
                }
            }
            Ok(())
        });
        reports = corpus
            .iter()
            .map(|i| Axiom::ALL.iter().filter(|&&a| !check_axiom(&i.f, a, CheckOptions::default()).unwrap().pass).count())
            .sum();
        match item {
            Item::Ok if reports < 50 => Item::Fail(format!("only {reports} failing reports")),
            other => other,
        }
    })];
    out.push(timed("theorem verdicts", || {
        let item = sweep(&corpus, |f| failing_verdicts(f).iter().try_for_each(|v| replay_verdict(f, v)));
        verdicts = corpus.par_iter().map(|i| failing_verdicts(&i.f).len()).sum();
        match item {
            Item::Ok if verdicts < 50 => Item::Fail(format!("only {verdicts} failing verdicts")),
            other => other,
        }
    }));
    out.push(timed("certificates reject an edited table", || {
        let f = gallery::example_2_1().function;
        let r = check_axiom(&f, Axiom::MnatExc, CheckOptions::default()).unwrap();
        let v = verify_geodesic(&f, &pt(&[0, 1, 2]), pair(2, 0)).unwrap();
        let edited = f.map_values(|x| x * Rational::from_integer(2) + Rational::from_integer(1));
        let shifted = f.map_values(|x| x + Rational::from_integer(1));
        item(!r.replay(&edited) && !v.replay(&shifted), || "replay accepted an edited table".into())
    }));
    (out, format!("    ({reports} failing axiom reports and {verdicts} failing verdicts replayed)"))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let mut full = vec!["mnat"];
    full.extend_from_slice(args);
    let code = mnat::cli::run(full, &mut stdout, &mut stderr);
    (code, String::from_utf8(stdout).unwrap())
}

fn gallery_round_trip() -> Vec<(String, Duration, Item)> {
    let mut out = vec![timed("gallery --audit exits 0", || {
        let (code, json) = run_cli(&["gallery", "--audit"]);
        let lines: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
        item(code == 0 && lines.iter().all(|l| l["ok"] == true), || format!("exit {code}"))
    })];
    out.push(timed("emitted files audit identically", || {
        let dir = tempfile::tempdir().unwrap();
        for entry in gallery::entries() {
            let path = dir.path().join(format!("{}.json", entry.name));
            let (code, _) = run_cli(&["gallery", "--name", &entry.name, "--emit", path.to_str().unwrap()]);
            if code != 0 {
                return Item::Fail(format!("emit {} exited {code}", entry.name));
            }
            let loaded = TabulatedFunction::load(&path).unwrap();
            if loaded != entry.function || entry.audit_against(&loaded).unwrap() != entry.audit().unwrap() {
                return Item::Fail(format!("{} changed after the round trip", entry.name));
            }
        }
        Item::Ok
    }));
    out
}

fn main() {
    // `cargo test -- --list` and filtered runs expect no output from a custom harness.
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--list") {
        return;
    }
    let mut run = Run::default();
    run.criterion("1", "worked-example replay", Duration::from_secs(1), example_replay());

    let quasi = quasi_corpus();
    let mnat = mnat_corpus();
    assert!(mnat.iter().all(|i| check_m_exc(&project_to_m(&i.f)).unwrap().pass));
    run.criterion("2", "theorem property suites", Duration::from_secs(60), property_suites(&quasi, &mnat));
    run.criterion("3", "algorithm envelopes", Duration::from_secs(60), algorithm_bounds(&quasi));
    let (items, counts) = certificate_replay();
    run.criterion("4", "certificate replay from JSON", Duration::from_secs(60), items);
    println!("{counts}");
    run.criterion("5", "gallery audit and file round trip", Duration::from_secs(60), gallery_round_trip());

    if !run.unexpected.is_empty() {
        eprintln!("unexpected failures:");
        for u in &run.unexpected {
            eprintln!("  {u}");
        }
        std::process::exit(1);
    }
}
