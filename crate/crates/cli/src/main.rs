//! Command-line harness: evaluate the functional, classify hypothesis
//! conditions, run seeded verification campaigns, exhaustively enumerate
//! small grids, and sweep one parameter of a case.
//!
//! Machine output (JSON / CSV) goes to stdout; human-readable status goes
//! to stderr. Exit codes: 0 success, 1 validation failure or violations
//! found, 2 internal route discrepancy, 64 usage / unknown property,
//! 65 enumeration cap exceeded.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cheb_core::bounds;
use cheb_core::campaign::{run_campaign, Mode, VerifyConfig};
use cheb_core::decimal::{format_number, parse_number};
use cheb_core::functional::{
    cheb_direct, cheb_via_det_identity, cheb_via_mean_identity, cheb_via_tail_identity,
    magnitude_scale, prefix_table,
};
use cheb_core::oracle::{enumerate_and_verify, GridSpec, DEFAULT_CAP};
use cheb_core::scalar::eq_tol_scaled;
use cheb_core::{
    Case, CaseFile, ChebError, Exec, PropertyId, Rat, RealSeq, Scalar, WeightSeq,
};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_DISCREPANCY: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_CAP: u8 = 65;

#[derive(Parser)]
#[command(name = "cheb", about = "Weighted Chebyshev functional toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CaseInput {
    /// Case file (JSON); stdin when omitted.
    #[arg(long)]
    case: Option<PathBuf>,
}

#[derive(Args)]
struct ModeArgs {
    /// Arithmetic mode.
    #[arg(long, default_value = "float")]
    mode: String,
    /// Relative tolerance for float-mode comparisons.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate T by the direct definition and all three identities.
    Eval {
        #[command(flatten)]
        input: CaseInput,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Report every hypothesis predicate on a case.
    Classify {
        #[command(flatten)]
        input: CaseInput,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Run a seeded verification campaign for one property.
    Verify {
        property: String,
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long, default_value_t = 1000)]
        cases: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for violation case files.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Also check the strict-literal claim variants.
        #[arg(long)]
        strict_literal: bool,
    },
    /// Exhaustively check one property on a small exact grid.
    Enumerate {
        property: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Comma-separated grid values for a and b.
        #[arg(long, default_value = "-2,-1,0,1,2", allow_hyphen_values = true)]
        values: String,
        /// Comma-separated grid values for the weights.
        #[arg(long, default_value = "1,2,3", allow_hyphen_values = true)]
        weights: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long)]
        strict_literal: bool,
    },
    /// Vary one entry of a case over a range; CSV of T and bounds.
    Sweep {
        #[command(flatten)]
        input: CaseInput,
        #[command(flatten)]
        mode: ModeArgs,
        /// Which slot to vary: p, a, b or k.
        #[arg(long)]
        field: String,
        /// 1-based entry index (ignored for k).
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        /// Number of rows (>= 1).
        #[arg(long)]
        steps: usize,
        /// Emit out-of-hypothesis bound values (non-asserting).
        #[arg(long)]
        force: bool,
    },
}

fn read_case(input: &CaseInput) -> Result<Case, String> {
    let json = match &input.case {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            buf
        }
    };
    CaseFile::from_json(&json)
        .and_then(|f| f.parse())
        .map_err(|e| format!("invalid case: {e}"))
}

fn parse_mode(mode: &ModeArgs) -> Result<Mode, String> {
    mode.mode
        .parse::<Mode>()
        .map_err(|_| format!("unknown mode {:?} (expected float or exact)", mode.mode))
}

fn parse_property(s: &str) -> Result<PropertyId, String> {
    s.parse::<PropertyId>().map_err(|e| e.to_string())
}

fn parse_grid_list(s: &str) -> Result<Vec<Rat>, String> {
    s.split(',')
        .map(|tok| parse_number(tok).map_err(|e| e.to_string()))
        .collect()
}

fn json_rat(r: &Rat) -> serde_json::Value {
    serde_json::Value::String(format_number(r))
}

fn route_value<S: Scalar>(
    route: Result<S, ChebError>,
    to_json: &dyn Fn(&S) -> serde_json::Value,
) -> (Option<S>, serde_json::Value) {
    match route {
        Ok(v) => {
            let j = to_json(&v);
            (Some(v), j)
        }
        Err(e) => (None, serde_json::json!({ "undefined": e.to_string() })),
    }
}

/// Shared eval body for both scalar instantiations. Returns (json, all
/// defined routes agree).
fn eval_generic<S: Scalar>(
    case: &Case,
    tol: &S,
    to_json: &dyn Fn(&S) -> serde_json::Value,
) -> Result<(serde_json::Value, bool), ChebError> {
    let p: WeightSeq<S> = case.weights()?;
    let a: RealSeq<S> = case.seq_a()?;
    let b: RealSeq<S> = case.seq_b()?;
    let direct = cheb_direct(&p, &a, &b)?;
    let scale = magnitude_scale(&p, &a, &b)?;
    let (det, det_j) = route_value(cheb_via_det_identity(&p, &a, &b), to_json);
    let (mean, mean_j) = route_value(cheb_via_mean_identity(&p, &a, &b), to_json);
    let (tail, tail_j) = route_value(cheb_via_tail_identity(&p, &a, &b), to_json);
    let agree = [&det, &mean, &tail]
        .iter()
        .filter_map(|r| r.as_ref())
        .all(|v| eq_tol_scaled(&direct, v, tol, &scale));
    let t = prefix_table(&p, &a, &b)?;
    let list = |v: &[S]| -> serde_json::Value {
        serde_json::Value::Array(v.iter().map(to_json).collect())
    };
    let json = serde_json::json!({
        "n": case.n(),
        "direct": to_json(&direct),
        "det_identity": det_j,
        "mean_identity": mean_j,
        "tail_identity": tail_j,
        "routes_agree": agree,
        "prefix_table": {
            "p": list(&t.p),
            "pbar": list(&t.pbar),
            "a": list(&t.a),
            "abar": list(&t.abar),
            "b": list(&t.b),
        },
    });
    Ok((json, agree))
}

fn cmd_eval(input: &CaseInput, mode: &ModeArgs) -> u8 {
    let case = match read_case(input) {
        Ok(c) => c,
        Err(msg) => return usage_fail(&msg, EXIT_FAIL),
    };
    let m = match parse_mode(mode) {
        Ok(m) => m,
        Err(msg) => return usage_fail(&msg, EXIT_USAGE),
    };
    let out = match m {
        Mode::Exact => eval_generic::<Rat>(&case, &Rat::zero(), &json_rat),
        Mode::Float => eval_generic::<f64>(&case, &mode.tol, &|v: &f64| {
            serde_json::json!(v)
        }),
    };
    match out {
        Ok((json, agree)) => {
            println!("{}", serde_json::to_string_pretty(&json).unwrap());
            if agree {
                eprintln!("ok: all defined evaluation routes agree");
                EXIT_OK
            } else {
                eprintln!("error: evaluation routes disagree beyond tolerance");
                EXIT_DISCREPANCY
            }
        }
        Err(e) => usage_fail(&format!("evaluation failed: {e}"), EXIT_FAIL),
    }
}

fn cmd_classify(input: &CaseInput, mode: &ModeArgs) -> u8 {
    let case = match read_case(input) {
        Ok(c) => c,
        Err(msg) => return usage_fail(&msg, EXIT_FAIL),
    };
    let m = match parse_mode(mode) {
        Ok(m) => m,
        Err(msg) => return usage_fail(&msg, EXIT_USAGE),
    };
    let profile = match m {
        Mode::Exact => {
            let p: WeightSeq<Rat> = match case.weights() {
                Ok(p) => p,
                Err(e) => return usage_fail(&e.to_string(), EXIT_FAIL),
            };
            case.seq_a::<Rat>().and_then(|a| {
                case.seq_b::<Rat>().and_then(|b| {
                    cheb_core::classifiers::condition_profile(&p, &a, &b, &Rat::zero())
                })
            })
        }
        Mode::Float => {
            let p: Result<WeightSeq<f64>, _> = case.weights();
            p.and_then(|p| {
                case.seq_a::<f64>().and_then(|a| {
                    case.seq_b::<f64>().and_then(|b| {
                        cheb_core::classifiers::condition_profile(&p, &a, &b, &mode.tol)
                    })
                })
            })
        }
    };
    match profile {
        Ok(profile) => {
            println!("{}", serde_json::to_string_pretty(&profile).unwrap());
            eprintln!("ok: classified n = {} case", case.n());
            EXIT_OK
        }
        Err(e) => usage_fail(&format!("classification failed: {e}"), EXIT_FAIL),
    }
}

fn cmd_verify(
    property: &str,
    mode: &ModeArgs,
    cases: u64,
    seed: u64,
    corpus: Option<PathBuf>,
    strict_literal: bool,
) -> u8 {
    let prop = match parse_property(property) {
        Ok(p) => p,
        Err(msg) => return usage_fail(&msg, EXIT_USAGE),
    };
    let m = match parse_mode(mode) {
        Ok(m) => m,
        Err(msg) => return usage_fail(&msg, EXIT_USAGE),
    };
    let mut cfg = VerifyConfig::new(prop, m, cases, seed);
    cfg.tol = mode.tol;
    cfg.strict_literal = strict_literal;
    let report = match run_campaign(&cfg) {
        Ok(r) => r,
        Err(e) => return usage_fail(&format!("campaign failed: {e}"), EXIT_FAIL),
    };
    if let Some(dir) = &corpus {
        let sub = dir.join(prop.as_str());
        if let Err(e) = std::fs::create_dir_all(&sub) {
            return usage_fail(&format!("cannot create {}: {e}", sub.display()), EXIT_FAIL);
        }
        for v in &report.violations {
            let path = sub.join(format!("violation-{seed}-{}.json", v.index));
            let json = serde_json::to_string_pretty(&v.case).unwrap();
            if let Err(e) = std::fs::write(&path, json) {
                return usage_fail(
                    &format!("cannot write {}: {e}", path.display()),
                    EXIT_FAIL,
                );
            }
        }
    }
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    eprintln!(
        "{}: {} cases, {} hypothesis hits, {} skipped, {} tolerance incidents, {} violations",
        prop,
        report.cases,
        report.hypothesis_hits,
        report.skipped,
        report.tolerance_incidents,
        report.violations.len()
    );
    if report.violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn cmd_enumerate(
    property: &str,
    n: usize,
    values: &str,
    weights: &str,
    cap: u64,
    strict_literal: bool,
) -> u8 {
    let prop = match parse_property(property) {
        Ok(p) => p,
        Err(msg) => return usage_fail(&msg, EXIT_USAGE),
    };
    let values = match parse_grid_list(values) {
        Ok(v) => v,
        Err(msg) => return usage_fail(&format!("bad --values: {msg}"), EXIT_USAGE),
    };
    let weights = match parse_grid_list(weights) {
        Ok(v) => v,
        Err(msg) => return usage_fail(&format!("bad --weights: {msg}"), EXIT_USAGE),
    };
    let spec = GridSpec {
        n,
        values,
        weights,
        cap,
    };
    let summary = match enumerate_and_verify(&spec, prop, strict_literal, Exec::default()) {
        Ok(s) => s,
        Err(ChebError::CapExceeded { size, cap }) => {
            return usage_fail(
                &format!("grid size {size} exceeds cap {cap}"),
                EXIT_CAP,
            )
        }
        Err(e) => return usage_fail(&format!("enumeration failed: {e}"), EXIT_FAIL),
    };
    let json = serde_json::json!({
        "property": prop.as_str(),
        "n": spec.n,
        "values": spec.values.iter().map(format_number).collect::<Vec<_>>(),
        "weights": spec.weights.iter().map(format_number).collect::<Vec<_>>(),
        "strict_literal": strict_literal,
        "enumerated": summary.enumerated,
        "hypothesis_hits": summary.hypothesis_hits,
        "branch_hits": summary.branch_hits,
        "violations": summary.violations,
    });
    println!("{}", serde_json::to_string_pretty(&json).unwrap());
    if summary.hypothesis_hits == 0 {
        eprintln!("{prop}: empty hypothesis on this grid (0 of {} cases)", summary.enumerated);
    } else {
        eprintln!(
            "{prop}: {} cases, {} hypothesis hits, {} violations",
            summary.enumerated,
            summary.hypothesis_hits,
            summary.violations.len()
        );
    }
    if summary.violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

/// One CSV cell for a gated bound: value when the hypothesis holds,
/// non-asserting value under --force, empty otherwise.
fn bound_cell(gated: Result<f64, ChebError>, raw: impl Fn() -> Result<f64, ChebError>, force: bool) -> Option<f64> {
    match gated {
        Ok(v) => Some(v),
        Err(ChebError::HypothesisNotMet(_)) if force => raw().ok(),
        Err(_) => None,
    }
}

fn sweep_row(case: &Case, tol: f64, force: bool) -> Result<Vec<Option<f64>>, ChebError> {
    let p: WeightSeq<f64> = case.weights()?;
    let a: RealSeq<f64> = case.seq_a()?;
    let b: RealSeq<f64> = case.seq_b()?;
    let t = cheb_direct(&p, &a, &b)?;
    let k = case.scalar_k::<f64>().unwrap_or(0.0);
    let cells = vec![
        Some(t),
        bounds::dp_refinement(&p, &a, &b).ok(),
        bounds::k_split_bound(&p, &a, &b, &k).ok(),
        bounds::pm_split_bound(&p, &a, &b).ok(),
        bound_cell(bounds::t21_bound(&p, &a, &b, &tol), || {
            bounds::t21_bound_value(&p, &a, &b, false)
        }, force),
        bound_cell(bounds::t31_bound(&p, &a, &b, &tol), || {
            bounds::t31_bound_value(&p, &a, &b)
        }, force),
        bound_cell(bounds::t35_bound(&p, &a, &b, &tol), || {
            bounds::t35_bound_value(&p, &a, &b)
        }, force),
    ];
    Ok(cells)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    input: &CaseInput,
    mode: &ModeArgs,
    field: &str,
    index: usize,
    from: &str,
    to: &str,
    steps: usize,
    force: bool,
) -> u8 {
    let base = match read_case(input) {
        Ok(c) => c,
        Err(msg) => return usage_fail(&msg, EXIT_FAIL),
    };
    if parse_mode(mode).is_err() {
        return usage_fail("unknown mode", EXIT_USAGE);
    }
    if steps == 0 {
        return usage_fail("--steps must be at least 1", EXIT_FAIL);
    }
    let (from, to) = match (parse_number(from), parse_number(to)) {
        (Ok(f), Ok(t)) => (f, t),
        _ => return usage_fail("bad --from/--to value", EXIT_FAIL),
    };
    let n = base.n();
    let valid_slot = match field {
        "p" | "a" | "b" => index >= 1 && index <= n,
        "k" => true,
        _ => false,
    };
    if !valid_slot {
        return usage_fail(
            &format!("invalid sweep target: field {field:?}, index {index} (n = {n})"),
            EXIT_FAIL,
        );
    }
    println!("param,T,dp_refinement,k_split,pm_split,t21,t31,t35,slack_min");
    for step in 0..steps {
        let param = if steps == 1 {
            from.clone()
        } else {
            &from
                + (&to - &from) * Rat::from_i64(step as i64)
                    / Rat::from_i64((steps - 1) as i64)
        };
        let mut case = base.clone();
        match field {
            "p" => case.p[index - 1] = param.clone(),
            "a" => case.a[index - 1] = param.clone(),
            "b" => case.b[index - 1] = param.clone(),
            _ => case.k = Some(param.clone()),
        }
        let row = match sweep_row(&case, mode.tol, force) {
            Ok(r) => r,
            Err(e) => {
                return usage_fail(&format!("sweep step {} failed: {e}", step + 1), EXIT_FAIL)
            }
        };
        let t = row[0].expect("T always present");
        let slack_min = row[1..]
            .iter()
            .flatten()
            .map(|bound| t - bound)
            .fold(None, |acc: Option<f64>, s| {
                Some(acc.map_or(s, |m| m.min(s)))
            });
        let cells: Vec<String> = row
            .iter()
            .map(|c| c.map(|v| format!("{v}")).unwrap_or_default())
            .collect();
        println!(
            "{},{},{}",
            format_number(&param),
            cells.join(","),
            slack_min.map(|s| format!("{s}")).unwrap_or_default()
        );
    }
    eprintln!("swept {field}[{index}] over [{}, {}] in {steps} steps", format_number(&from), format_number(&to));
    EXIT_OK
}

fn usage_fail(msg: &str, code: u8) -> u8 {
    eprintln!("error: {msg}");
    code
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not errors
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
    };
    let code = match &cli.command {
        Command::Eval { input, mode } => cmd_eval(input, mode),
        Command::Classify { input, mode } => cmd_classify(input, mode),
        Command::Verify {
            property,
            mode,
            cases,
            seed,
            corpus,
            strict_literal,
        } => cmd_verify(property, mode, *cases, *seed, corpus.clone(), *strict_literal),
        Command::Enumerate {
            property,
            n,
            values,
            weights,
            cap,
            strict_literal,
        } => cmd_enumerate(property, *n, values, weights, *cap, *strict_literal),
        Command::Sweep {
            input,
            mode,
            field,
            index,
            from,
            to,
            steps,
            force,
        } => cmd_sweep(input, mode, field, *index, from, to, *steps, *force),
    };
    ExitCode::from(code)
}
