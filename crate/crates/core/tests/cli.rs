use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mnat::{gallery, TabulatedFunction};
use serde_json::Value;

fn mnat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mnat")).args(args).env_remove("MNAT_THREADS").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn write(dir: &Path, name: &str, f: &TabulatedFunction) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, f.to_json()).unwrap();
    p
}

struct Files {
    _dir: tempfile::TempDir,
    ex21: String,
    ex22: String,
    ex42: String,
    ex24: String,
    bumpy: String,
}

fn files() -> Files {
    let dir = tempfile::tempdir().unwrap();
    let s = |p: PathBuf| p.to_str().unwrap().to_string();
    let bumpy = TabulatedFunction::from_ints(1, [([0], 0), ([1], 1), ([2], 0)]).unwrap();
    Files {
        ex21: s(write(dir.path(), "ex21.json", &gallery::example_2_1().function)),
        ex22: s(write(dir.path(), "ex22.json", &gallery::example_2_2().function)),
        ex42: s(write(dir.path(), "ex42.json", &gallery::example_4_2().function)),
        ex24: s(write(dir.path(), "ex24.json", &gallery::example_2_4(5).unwrap().function)),
        bumpy: s(write(dir.path(), "bumpy.json", &bumpy)),
        _dir: dir,
    }
}

#[test]
fn check_passes_and_fails() {
    let f = files();
    let o = mnat(&["check", &f.ex21, "--axiom", "ssqm-nat"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["pass"], true);

    let o = mnat(&["check", &f.ex21, "--axiom", "mnat-exc"]);
    assert_eq!(code(&o), 1);
    assert!(json(&o)["violation"].is_object());
}

#[test]
fn projected_axiom_failure_names_the_triple() {
    let f = files();
    let o = mnat(&["check", &f.ex42, "--axiom", "ssqm-nat-prj"]);
    assert_eq!(code(&o), 1);
    let v = &json(&o)["part_ii"]["violation"];
    assert_eq!(v["x"], serde_json::json!([0, 2]));
    assert_eq!(v["y"], serde_json::json!([2, 0]));
    assert_eq!(v["i"], 2);
}

#[test]
fn minimize_reaches_a_minimizer() {
    let f = files();
    let o = mnat(&["minimize", &f.ex21, "--algo", "basic", "--start", "0,1,2"]);
    assert_eq!(code(&o), 0);
    let out = json(&o);
    assert!(["[2,1,0]", "[2,0,1]"].contains(&out["minimizer"].to_string().as_str()));
    assert_eq!(out["iterations"], 3);
    assert_eq!(out["value"], 0);

    let o = mnat(&["minimize", &f.ex22, "--algo", "domain-reduction"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["minimizer"][0], 2);

    let o = mnat(&["minimize", &f.ex21, "--algo", "modified", "--start", "0,1,2", "--trace"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["steps"].as_array().is_some_and(|s| !s.is_empty()));
}

#[test]
fn bad_input_exits_two() {
    let f = files();
    assert_eq!(code(&mnat(&["minimize", &f.ex21, "--algo", "basic", "--start", "5,5,5"])), 2);
    assert_eq!(code(&mnat(&["minimize", &f.ex21, "--algo", "basic", "--start", "0,1"])), 2);
    assert_eq!(code(&mnat(&["check", "/nonexistent.json", "--axiom", "ssqm-nat"])), 2);
    assert_eq!(code(&mnat(&["check", &f.ex21, "--axiom", "nope"])), 2);
    assert_eq!(code(&mnat(&["verify", &f.ex21, "--theorem", "nope"])), 2);
}

#[test]
fn strict_precondition_failure_exits_three() {
    let f = files();
    let o = mnat(&["minimize", &f.bumpy, "--algo", "basic", "--start", "1", "--strict"]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["pass"], false);
    let o = mnat(&["minimize", &f.bumpy, "--algo", "basic", "--start", "1", "--fast"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_reports_failing_contexts() {
    let f = files();
    let o = mnat(&["verify", &f.ex21, "--theorem", "geodesic", "--at", "0,1,2"]);
    assert_eq!(code(&o), 1);
    let ctx = &json(&o)[0]["counter_context"];
    assert_eq!(ctx["x"], serde_json::json!([0, 1, 2]));
    assert_eq!(ctx["pair"], serde_json::json!([2, 0]));

    let o = mnat(&["verify", &f.ex21, "--theorem", "min-cut-weak"]);
    assert_eq!(code(&o), 0);

    let o = mnat(&["verify", &f.ex24, "--theorem", "proximity", "--alpha", "2"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)[0]["counter_context"]["quantities"]["worst_gap"], 5);

    let o = mnat(&["verify", &f.ex22, "--theorem", "min-cut-directional", "--variant", "mi"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn gallery_emits_lists_and_audits() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("k5.json");
    let o = mnat(&["gallery", "--name", "example-2-4", "--k", "5", "--emit", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(TabulatedFunction::load(&p).unwrap().len(), 24);

    let names = json(&mnat(&["gallery", "--list"]));
    assert!(names.as_array().unwrap().iter().any(|n| n == "example-4-2"));
    assert_eq!(code(&mnat(&["gallery", "--audit"])), 0);
}

#[test]
fn output_flag_writes_the_json_to_a_file() {
    let f = files();
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("report.json");
    let o = mnat(&["check", &f.ex21, "--axiom", "ssqm-nat", "-o", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(v["axiom"], "ssqm-nat");
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let f = files();
    for args in [
        vec!["verify", &f.ex24, "--theorem", "proximity"],
        vec!["check", &f.ex21, "--axiom", "mnat-exc", "--exhaustive"],
        vec!["verify", &f.ex21, "--theorem", "min-cut-directional"],
    ] {
        let one = mnat(&[&["--threads", "1"], args.as_slice()].concat());
        let four = mnat(&[&["--threads", "4"], args.as_slice()].concat());
        assert_eq!(one.stdout, four.stdout, "{args:?}");
        assert_eq!(code(&one), code(&four));
    }
}
