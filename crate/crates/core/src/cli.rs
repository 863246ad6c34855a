//! The `mnat` command line: `check`, `minimize`, `verify` and `gallery`.
//!
//! JSON goes to standard output (or `--output`), a one-line summary to
//! standard error. Exit codes: 0 pass, 1 axiom or theorem failure, 2 usage or
//! input error, 3 strict-mode precondition failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{
    directional_contexts, minimizing_contexts, verify_geodesic, verify_local_global, verify_local_global_m,
    verify_min_cut_directional, verify_min_cut_strong, verify_min_cut_weak, verify_projection_bridges,
    verify_proximity, verify_statement_a, Regime, TheoremVerdict, Variant,
};
use crate::axioms::{check_axiom, check_ssqm_nat_prj_with, Axiom, CheckOptions};
use crate::error::{Error, Result};
use crate::function::TabulatedFunction;
use crate::gallery;
use crate::minimize::{basic_steepest_descent, domain_reduction, modified_steepest_descent};
use crate::point::LatticePoint;
use crate::Mode;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

/// Tables up to this size are run in strict mode unless `--fast` is given.
pub const STRICT_DEFAULT_LIMIT: usize = 10_000;

#[derive(Debug, Parser)]
#[command(name = "mnat", version, about = "Exchange-axiom checks, steepest descent and minimizer verifiers")]
struct Cli {
    /// Worker threads for parallel sweeps; output does not depend on it
    #[arg(long, global = true, env = "MNAT_THREADS")]
    threads: Option<usize>,

    /// Write JSON here instead of standard output
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an exchange axiom on a function file
    Check(CheckArgs),
    /// Run a minimization algorithm
    Minimize(MinimizeArgs),
    /// Verify a theorem at every applicable context
    Verify(VerifyArgs),
    /// Emit or audit the built-in examples
    Gallery(GalleryArgs),
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Function file, or `-` for standard input
    input: PathBuf,
    /// ssqm-nat, mnat-exc, m-exc, ssqm, ssqm-nat-prj, ssqm-nat-prj-{i,ii,iii}, mnat-set, descent-lemma
    #[arg(long)]
    axiom: String,
    /// Report every violation instead of the first
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    Basic,
    Modified,
    DomainReduction,
}

#[derive(Debug, Args)]
struct MinimizeArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    algo: Algo,
    /// Start point as comma-separated integers
    #[arg(long, allow_hyphen_values = true)]
    start: Option<String>,
    #[arg(long, conflicts_with = "fast")]
    strict: bool,
    #[arg(long)]
    fast: bool,
    /// Emit the full step log
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    input: PathBuf,
    /// min-cut-weak, min-cut-strong, min-cut-directional, statement-a, geodesic,
    /// proximity, local-global, local-global-m, projection-bridge
    #[arg(long)]
    theorem: String,
    /// Directional variant (qi..qiv, mi..miv, ai..aiii); all when omitted
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, default_value_t = 2)]
    alpha: i64,
    #[arg(long, value_enum, default_value_t = RegimeArg::Mnat)]
    regime: RegimeArg,
    /// Only contexts at this point
    #[arg(long, allow_hyphen_values = true)]
    at: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RegimeArg {
    Mnat,
    M,
}

#[derive(Debug, Args)]
struct GalleryArgs {
    #[arg(long, conflicts_with_all = ["audit", "list"])]
    name: Option<String>,
    /// Parameter of example-2-4
    #[arg(long)]
    k: Option<i64>,
    /// Destination of the function file, `-` for standard output
    #[arg(long, requires = "name")]
    emit: Option<PathBuf>,
    /// Replay every recorded expectation
    #[arg(long)]
    audit: bool,
    #[arg(long)]
    list: bool,
}

/// Buffered streams, flushed once the command finishes so work can run on a thread pool.
#[derive(Default)]
struct Io {
    stdout: Vec<u8>,
    stderr: Vec<u8>,
    output: Option<PathBuf>,
}

impl Io {
    fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let text = serde_json::to_string_pretty(value)?;
        match &self.output {
            Some(p) => std::fs::write(p, text + "\n")?,
            None => writeln!(self.stdout, "{text}")?,
        }
        Ok(())
    }

    fn note(&mut self, msg: impl AsRef<str>) {
        let _ = writeln!(self.stderr, "{}", msg.as_ref());
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{text}") } else { write!(stdout, "{text}") };
            return code;
        }
    };
    let mut io = Io { output: cli.output.clone(), ..Default::default() };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, &mut io)),
            Err(e) => Err(Error::Precondition(format!("thread pool: {e}"))),
        },
        None => dispatch(cli.command, &mut io),
    };
    let code = match result {
        Ok(code) => code,
        Err(Error::AxiomFailed(report)) => {
            io.note(format!("precondition failed: {} does not hold", report.axiom));
            let _ = io.json(&report);
            EXIT_PRECONDITION
        }
        Err(e) => {
            io.note(format!("error: {e}"));
            EXIT_USAGE
        }
    };
    let _ = stdout.write_all(&io.stdout).and_then(|_| stdout.flush());
    let _ = stderr.write_all(&io.stderr).and_then(|_| stderr.flush());
    code
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<i32> {
    match cmd {
        Command::Check(a) => cmd_check(a, io),
        Command::Minimize(a) => cmd_minimize(a, io),
        Command::Verify(a) => cmd_verify(a, io),
        Command::Gallery(a) => cmd_gallery(a, io),
    }
}

fn load(path: &PathBuf) -> Result<TabulatedFunction> {
    if path.as_os_str() == "-" {
        TabulatedFunction::read_from(std::io::stdin().lock())
    } else {
        TabulatedFunction::load(path)
    }
}

/// Parses `"0,1,-2"`.
pub fn parse_point(s: &str) -> Result<LatticePoint> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Precondition(format!("bad coordinate {t:?} in {s:?}"))))
        .collect::<Result<Vec<_>>>()
        .map(LatticePoint::new)
}

fn exit_for(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn cmd_check(a: CheckArgs, io: &mut Io) -> Result<i32> {
    let f = load(&a.input)?;
    let opts = CheckOptions { exhaustive: a.exhaustive };
    if a.axiom == "ssqm-nat-prj" {
        let report = check_ssqm_nat_prj_with(&f, opts)?;
        io.json(&report)?;
        let pass = report.all_pass();
        io.note(format!("ssqm-nat-prj: {}", if pass { "pass" } else { "fail" }));
        return Ok(exit_for(pass));
    }
    let axiom = Axiom::from_id(&a.axiom).ok_or_else(|| Error::Precondition(format!("unknown axiom {:?}", a.axiom)))?;
    let report = check_axiom(&f, axiom, opts)?;
    io.json(&report)?;
    match &report.violation {
        None => io.note(format!("{axiom}: pass")),
        Some(v) => io.note(format!("{axiom}: fail at x={} y={} i={}", v.x, v.y, v.i)),
    }
    Ok(exit_for(report.pass))
}

#[derive(Serialize)]
struct MinimizeSummary {
    minimizer: LatticePoint,
    value: crate::value::ExtendedValue,
    iterations: usize,
}

fn cmd_minimize(a: MinimizeArgs, io: &mut Io) -> Result<i32> {
    let f = load(&a.input)?;
    let mode = if a.fast || (!a.strict && f.len() > STRICT_DEFAULT_LIMIT) { Mode::Fast } else { Mode::Strict };
    let start = || -> Result<LatticePoint> {
        let s = a.start.as_deref().ok_or_else(|| Error::Precondition("--start is required for this algorithm".into()))?;
        let x = parse_point(s)?;
        x.check_dim(f.dim())?;
        f.require_in_domain(&x)?;
        Ok(x)
    };
    let summary = match a.algo {
        Algo::Basic | Algo::Modified => {
            let x0 = start()?;
            let trace = match a.algo {
                Algo::Basic => basic_steepest_descent(&f, &x0, mode)?,
                _ => modified_steepest_descent(&f, &x0, &f.bounding_box()?, mode)?,
            };
            let s = MinimizeSummary { minimizer: trace.minimizer.clone(), value: trace.value, iterations: trace.iterations };
            if a.trace {
                io.json(&trace)?;
            } else {
                io.json(&s)?;
            }
            s
        }
        Algo::DomainReduction => {
            let out = domain_reduction(&f, mode, false)?;
            let s = MinimizeSummary { minimizer: out.minimizer.clone(), value: out.value, iterations: out.iterations };
            if a.trace {
                io.json(&out.state)?;
            } else {
                io.json(&s)?;
            }
            s
        }
    };
    io.note(format!("minimizer {} value {} after {} iterations", summary.minimizer, summary.value, summary.iterations));
    Ok(EXIT_OK)
}

fn cmd_verify(a: VerifyArgs, io: &mut Io) -> Result<i32> {
    let f = load(&a.input)?;
    let at = a.at.as_deref().map(parse_point).transpose()?;
    let keep = |x: &LatticePoint| at.as_ref().is_none_or(|p| p == x);
    let regime = match a.regime {
        RegimeArg::Mnat => Regime::Mnat,
        RegimeArg::M => Regime::M,
    };
    let theorem = a.theorem.to_ascii_lowercase();
    let mut verdicts: Vec<TheoremVerdict> = Vec::new();
    match theorem.as_str() {
        "min-cut-weak" | "min-cut-strong" | "statement-a" | "geodesic" => {
            let verifier = match theorem.as_str() {
                "min-cut-weak" => verify_min_cut_weak,
                "min-cut-strong" => verify_min_cut_strong,
                "statement-a" => verify_statement_a,
                _ => verify_geodesic,
            };
            for (x, pair) in minimizing_contexts(&f)? {
                if keep(&x) {
                    verdicts.push(verifier(&f, &x, pair)?);
                }
            }
        }
        "min-cut-directional" => {
            let variants = match &a.variant {
                Some(v) => vec![Variant::from_id(v).ok_or_else(|| Error::Precondition(format!("unknown variant {v:?}")))?],
                None => Variant::ALL.to_vec(),
            };
            for v in variants {
                for (x, k) in directional_contexts(&f, v) {
                    if keep(&x) {
                        verdicts.push(verify_min_cut_directional(&f, &x, v, k)?);
                    }
                }
            }
        }
        "proximity" => verdicts.push(verify_proximity(&f, a.alpha, regime)?),
        "local-global" | "local-global-m" => {
            for x in f.domain().filter(|x| keep(x)) {
                verdicts.push(if theorem == "local-global" {
                    verify_local_global(&f, x)?
                } else {
                    verify_local_global_m(&f, x)?
                });
            }
        }
        "projection-bridge" => verdicts.extend(verify_projection_bridges(&f)?.1),
        other => return Err(Error::Precondition(format!("unknown theorem {other:?}"))),
    }
    io.json(&verdicts)?;
    let failures: Vec<&TheoremVerdict> = verdicts.iter().filter(|v| v.is_failure()).collect();
    match failures.first().and_then(|v| v.counter_context.as_ref()) {
        None => io.note(format!("{theorem}: {} contexts, no failures", verdicts.len())),
        Some(ctx) => io.note(format!(
            "{theorem}: {} of {} contexts fail; first at {}{}",
            failures.len(),
            verdicts.len(),
            ctx.x.as_ref().map_or("-".to_string(), |x| x.to_string()),
            ctx.pair.map_or(String::new(), |(i, j)| format!(" pair ({i},{j})")),
        )),
    }
    Ok(exit_for(failures.is_empty()))
}

fn cmd_gallery(a: GalleryArgs, io: &mut Io) -> Result<i32> {
    if a.list {
        io.json(&gallery::names())?;
        return Ok(EXIT_OK);
    }
    if a.audit {
        let lines = gallery::audit_all()?;
        io.json(&lines)?;
        let bad = lines.iter().filter(|l| !l.ok).count();
        io.note(format!("{} expectations, {bad} mismatches", lines.len()));
        return Ok(exit_for(bad == 0));
    }
    let name = a.name.ok_or_else(|| Error::Precondition("one of --name, --audit or --list is required".into()))?;
    let entry = gallery::by_name(&name, a.k)?;
    match a.emit.as_deref() {
        Some(p) if p.as_os_str() != "-" => {
            let mut file = std::fs::File::create(p)?;
            entry.function.write_to(&mut file)?;
        }
        _ => match &io.output {
            Some(p) => entry.function.write_to(std::fs::File::create(p)?)?,
            None => entry.function.write_to(&mut io.stdout)?,
        },
    }
    io.note(format!("{}: {} points", entry.name, entry.function.len()));
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("mnat").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn point_parsing() {
        assert_eq!(parse_point("0, 1,-2").unwrap(), LatticePoint::from([0, 1, -2]));
        assert!(parse_point("1,,2").is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["check"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["gallery", "--name", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn gallery_emits_to_stdout() {
        let (code, out, _) = run_args(&["gallery", "--name", "example-2-2", "--emit", "-"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(TabulatedFunction::from_json(&out).unwrap().len(), 6);
    }
}
