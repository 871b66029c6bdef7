//! Seeded verification campaigns: generate hypothesis-class cases, check
//! each claim in float or exact mode, and cross-check float failures
//! against the exact oracle before calling them violations.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use num_traits::Zero;
use rand::Rng;

use crate::bounds::{self, Sign};
use crate::case::Case;
use crate::classifiers::Direction;
use crate::error::{ChebError, Result};
use crate::exec::{map_indexed, Exec};
use crate::functional::{
    cheb_direct, cheb_via_det_identity, cheb_via_mean_identity, cheb_via_tail_identity,
    magnitude_scale,
};
use crate::generators::{
    gen_convex, gen_first_max_in_mean, gen_last_max_in_mean, gen_monotone,
    gen_monotone_in_mean, gen_sbar_member, gen_synchronous_pair, gen_weights, GenConfig,
};
use crate::oracle::{self, Verdict, Violation};
use crate::property::PropertyId;
use crate::scalar::{eq_tol_scaled, ge_tol, le_tol, Rat};
use crate::seq::{RealSeq, Regime, WeightSeq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Float,
    Exact,
}

impl std::str::FromStr for Mode {
    type Err = ChebError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "float" => Ok(Mode::Float),
            "exact" => Ok(Mode::Exact),
            other => Err(ChebError::UnknownProperty(format!("mode {other}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub property: PropertyId,
    pub mode: Mode,
    pub cases: u64,
    /// Relative tolerance for float-mode comparisons.
    pub tol: f64,
    pub strict_literal: bool,
    /// When set, every generated case is persisted under
    /// `<dir>/<property>/<seed>-<index>.json`.
    pub corpus_dir: Option<PathBuf>,
    pub exec: Exec,
    pub gen: GenConfig,
}

impl VerifyConfig {
    pub fn new(property: PropertyId, mode: Mode, cases: u64, seed: u64) -> Self {
        VerifyConfig {
            property,
            mode,
            cases,
            tol: 1e-9,
            strict_literal: false,
            corpus_dir: None,
            exec: Exec::default(),
            gen: GenConfig {
                seed,
                ..GenConfig::default()
            },
        }
    }
}

/// Side observations from the strict-literal variants of a claim.
#[derive(Debug, Clone, Copy, Default, serde::Serialize)]
pub struct LiteralSummary {
    /// Cases where the literal variant was applicable.
    pub checked: u64,
    /// Applicable literal cases on which the literal claim failed.
    pub violations: u64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CampaignReport {
    pub property: PropertyId,
    pub mode: Mode,
    pub seed: u64,
    pub cases: u64,
    pub strict_literal: bool,
    /// Cases on which the hypothesis held and the claim was checked.
    pub hypothesis_hits: u64,
    /// Generation gave up (rejection budget) on these cases.
    pub skipped: u64,
    /// Float-mode claim failures that the exact oracle overturned.
    pub tolerance_incidents: u64,
    pub violations: Vec<Violation>,
    /// Smallest observed slack (functional minus bound) across applicable
    /// float-mode cases; None in exact mode or when nothing applied.
    pub min_slack: Option<f64>,
    pub branch_hits: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub literal: Option<LiteralSummary>,
    pub runtime_ms: u128,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.hypothesis_hits > 0
    }
}

#[derive(Debug, Clone)]
enum Outcome {
    Skipped,
    NotApplicable,
    Pass { slack: Option<f64>, branch: Option<String> },
    ToleranceIncident,
    Violation { detail: String, branch: Option<String> },
}

#[derive(Debug, Clone, Copy, Default)]
struct LiteralObs {
    checked: bool,
    violated: bool,
}

struct CaseResult {
    case: Option<Case>,
    outcome: Outcome,
    literal: LiteralObs,
}

fn rand_dir(rng: &mut rand_chacha::ChaCha8Rng) -> Direction {
    if rng.gen_bool(0.5) {
        Direction::Nondecreasing
    } else {
        Direction::Nonincreasing
    }
}

fn sense_label(da: Direction, db: Direction) -> &'static str {
    if da == db {
        "same_sense"
    } else {
        "opposite_sense"
    }
}

/// Threshold construction for the global-mean conditions: given the tail
/// entries, choose a_1 so the weighted mean lands at or above (upper) or
/// at or below (lower) every later entry.
fn mean_condition_head(p: &[Rat], rest: &[Rat], upper: bool, margin: Rat) -> Rat {
    let extreme = rest
        .iter()
        .cloned()
        .reduce(|acc, v| if upper { acc.max(v) } else { acc.min(v) })
        .expect("rest nonempty");
    let mut spread = Rat::zero();
    for (w, v) in p[1..].iter().zip(rest) {
        spread += w * (&extreme - v);
    }
    let threshold = &extreme + spread / &p[0];
    if upper {
        threshold + margin
    } else {
        threshold - margin
    }
}

/// Build one case in the hypothesis class of the property, driven by the
/// case index's sub-seed.
pub fn gen_case(prop: PropertyId, cfg: &GenConfig, index: u64) -> Result<Case> {
    let rng = &mut cfg.rng_for(index);
    let n = cfg.draw_n(rng);
    let mut case = Case {
        p: Vec::new(),
        a: Vec::new(),
        b: Vec::new(),
        k: None,
        x: None,
        label: None,
    };
    match prop {
        PropertyId::A2 => {
            case.p = gen_weights(cfg, rng, n, Regime::AllPositive);
            let da = rand_dir(rng);
            let db = if rng.gen_bool(0.5) { da } else { da.flip() };
            case.a = gen_monotone(cfg, rng, n, da);
            case.b = gen_monotone(cfg, rng, n, db);
            case.label = Some(sense_label(da, db).into());
        }
        PropertyId::Biernacki => {
            case.p = gen_weights(cfg, rng, n, Regime::AllPositive);
            let da = rand_dir(rng);
            let db = if rng.gen_bool(0.5) { da } else { da.flip() };
            case.a = gen_monotone_in_mean(cfg, rng, &case.p, da);
            case.b = gen_monotone_in_mean(cfg, rng, &case.p, db);
            case.label = Some(sense_label(da, db).into());
        }
        PropertyId::A6 | PropertyId::A9 | PropertyId::A10 => {
            case.p = gen_weights(cfg, rng, n, Regime::AllPositive);
            let (a, b) = gen_synchronous_pair(cfg, rng, n);
            case.a = a;
            case.b = b;
        }
        PropertyId::A8 => {
            case.p = gen_weights(cfg, rng, n, Regime::AllPositive);
            let (a, b) = gen_synchronous_pair(cfg, rng, n);
            case.a = a;
            case.b = b;
            case.k = Some(cfg.draw(rng));
        }
        PropertyId::A11 => {
            case.p = gen_weights(cfg, rng, n, Regime::PartialSumBounded);
            let da = rand_dir(rng);
            let db = if rng.gen_bool(0.5) { da } else { da.flip() };
            case.a = gen_monotone(cfg, rng, n, da);
            case.b = gen_monotone(cfg, rng, n, db);
            case.label = Some(sense_label(da, db).into());
        }
        PropertyId::T21 => {
            let n = n.min(12).max(2);
            case.p = gen_weights(cfg, rng, n, Regime::AllPositive);
            if rng.gen_bool(0.5) {
                case.b = gen_monotone(cfg, rng, n, Direction::Nondecreasing);
                case.a = gen_last_max_in_mean(cfg, rng, &case.p)?;
                case.label = Some("branch_nondecreasing".into());
            } else {
                case.b = gen_monotone(cfg, rng, n, Direction::Nonincreasing);
                case.a = gen_first_max_in_mean(cfg, rng, &case.p)?;
                case.label = Some("branch_nonincreasing".into());
            }
        }
        PropertyId::T23 => {
            let db = rand_dir(rng);
            case.b = gen_monotone(cfg, rng, n, db);
            if rng.gen_bool(0.5) {
                // determinant clause over sign-changing weights
                for _ in 0..cfg.max_rejections {
                    let p = gen_weights(cfg, rng, n, Regime::PartialSumBounded);
                    let a = cfg.draw_seq(rng, n);
                    if oracle::exact_det_condition(&p, &a) {
                        case.p = p;
                        case.a = a;
                        return Ok(case);
                    }
                }
                return Err(ChebError::RejectionBudgetExhausted(cfg.max_rejections));
            }
            case.p = gen_weights(cfg, rng, n, Regime::AllPositive);
            case.a = gen_last_max_in_mean(cfg, rng, &case.p)?;
        }
        PropertyId::T31 => {
            case.p = gen_weights(cfg, rng, n, Regime::AllPositive);
            let upper = rng.gen_bool(0.5);
            case.b = gen_convex(cfg, rng, n, upper);
            let rest = cfg.draw_seq(rng, n - 1);
            let margin = cfg.draw_positive(rng);
            let head = mean_condition_head(&case.p, &rest, upper, margin);
            case.a = std::iter::once(head).chain(rest).collect();
            case.label = Some(if upper { "convex" } else { "concave" }.into());
        }
        PropertyId::T35 => {
            case.p = gen_weights(cfg, rng, n, Regime::AllPositive);
            let convex = rng.gen_bool(0.5);
            case.b = gen_convex(cfg, rng, n, convex);
            let dir = if convex {
                Direction::Nonincreasing
            } else {
                Direction::Nondecreasing
            };
            case.a = gen_monotone_in_mean(cfg, rng, &case.p, dir);
            case.label = Some(if convex { "convex" } else { "concave" }.into());
        }
        PropertyId::Sbar => {
            case.p = gen_weights(cfg, rng, n, Regime::AllPositive);
            let (a, b) = gen_synchronous_pair(cfg, rng, n);
            case.x = Some(gen_sbar_member(cfg, rng, &a, &b));
            case.a = a;
            case.b = b;
        }
        PropertyId::IdentityEquiv => {
            for _ in 0..cfg.max_rejections {
                let p = cfg.draw_seq(rng, n);
                let mut prefix = Rat::zero();
                let total: Rat = p.iter().sum();
                let ok = !total.is_zero()
                    && p[..n - 1].iter().all(|w| {
                        prefix += w;
                        !prefix.is_zero() && prefix != total
                    });
                if ok {
                    case.p = p;
                    case.a = cfg.draw_seq(rng, n);
                    case.b = cfg.draw_seq(rng, n);
                    return Ok(case);
                }
                prefix = Rat::zero();
            }
            return Err(ChebError::RejectionBudgetExhausted(cfg.max_rejections));
        }
    }
    Ok(case)
}

fn sign_holds(t: f64, sense: &str, tol: f64) -> bool {
    match sense {
        "same_sense" => ge_tol(&t, &0.0, &tol),
        _ => le_tol(&t, &0.0, &tol),
    }
}

struct FloatEval {
    applicable: bool,
    pass: bool,
    slack: Option<f64>,
    branch: Option<String>,
    detail: String,
    literal: LiteralObs,
}

impl FloatEval {
    fn na() -> Self {
        FloatEval {
            applicable: false,
            pass: true,
            slack: None,
            branch: None,
            detail: String::new(),
            literal: LiteralObs::default(),
        }
    }

    fn claim(pass: bool, slack: f64, branch: Option<String>, detail: String) -> Self {
        FloatEval {
            applicable: true,
            pass,
            slack: Some(slack),
            branch,
            detail,
            literal: LiteralObs::default(),
        }
    }
}

fn eval_float(prop: PropertyId, case: &Case, tol: f64, strict: bool) -> Result<FloatEval> {
    let p: WeightSeq<f64> = case.weights()?;
    let a: RealSeq<f64> = case.seq_a()?;
    let b: RealSeq<f64> = case.seq_b()?;
    match prop {
        PropertyId::A2 | PropertyId::Biernacki | PropertyId::A11 => {
            let sense = case.label.as_deref().unwrap_or("same_sense");
            let t = cheb_direct(&p, &a, &b)?;
            let slack = if sense == "same_sense" { t } else { -t };
            Ok(FloatEval::claim(
                sign_holds(t, sense, tol),
                slack,
                Some(sense.to_string()),
                format!("{sense} sign claim failed: T = {t}"),
            ))
        }
        PropertyId::A6 => {
            let t = cheb_direct(&p, &a, &b)?;
            let bound = bounds::dp_refinement(&p, &a, &b)?;
            Ok(FloatEval::claim(
                ge_tol(&t, &bound, &tol) && ge_tol(&bound, &0.0, &tol),
                t - bound,
                None,
                format!("T = {t} below refinement {bound}"),
            ))
        }
        PropertyId::A8 => {
            let k = case.scalar_k::<f64>().unwrap_or(0.0);
            let t = cheb_direct(&p, &a, &b)?;
            let bound = bounds::k_split_bound(&p, &a, &b, &k)?;
            Ok(FloatEval::claim(
                ge_tol(&t, &bound, &tol),
                t - bound,
                None,
                format!("T = {t} below split bound {bound} at k = {k}"),
            ))
        }
        PropertyId::A9 => {
            let t = cheb_direct(&p, &a, &b)?;
            let bound = bounds::pm_split_bound(&p, &a, &b)?;
            Ok(FloatEval::claim(
                ge_tol(&t, &bound, &tol),
                t - bound,
                None,
                format!("T = {t} below pm split {bound}"),
            ))
        }
        PropertyId::A10 => {
            let (t, mid, low) = bounds::refinement_chain(&p, &a, &b, &tol)?;
            let pass = ge_tol(&t, &mid, &tol)
                && ge_tol(&mid, &low, &tol)
                && ge_tol(&low, &0.0, &tol);
            Ok(FloatEval::claim(
                pass,
                (t - mid).min(mid - low).min(low),
                None,
                format!("chain broken: t = {t}, mid = {mid}, low = {low}"),
            ))
        }
        PropertyId::T21 => {
            let t = cheb_direct(&p, &a, &b)?;
            let bound = match bounds::t21_bound(&p, &a, &b, &tol) {
                Ok(v) => v,
                Err(ChebError::HypothesisNotMet(_)) => return Ok(FloatEval::na()),
                Err(e) => return Err(e),
            };
            let mut eval = FloatEval::claim(
                ge_tol(&t, &bound, &tol) && ge_tol(&bound, &0.0, &tol),
                t - bound,
                case.label.clone(),
                format!("T = {t} below bound {bound}"),
            );
            if strict {
                let lit = bounds::t21_bound_value(&p, &a, &b, true)?;
                eval.literal = LiteralObs {
                    checked: true,
                    violated: !(ge_tol(&t, &lit, &tol) && ge_tol(&lit, &0.0, &tol)),
                };
            }
            Ok(eval)
        }
        PropertyId::T23 => {
            let t = cheb_direct(&p, &a, &b)?;
            let (sign, clause) = bounds::t23_sign(&p, &a, &b, &tol, false)?;
            let pass = match sign {
                Sign::NonNegative => ge_tol(&t, &0.0, &tol),
                Sign::NonPositive => le_tol(&t, &0.0, &tol),
                Sign::Unknown => return Ok(FloatEval::na()),
            };
            let slack = if sign == Sign::NonNegative { t } else { -t };
            let mut eval = FloatEval::claim(
                pass,
                slack,
                clause.map(|c| format!("clause{c}")),
                format!("sign claim {sign:?} failed: T = {t}"),
            );
            if strict {
                let (lsign, lclause) = bounds::t23_sign(&p, &a, &b, &tol, true)?;
                if lclause == Some(3) {
                    let lpass = match lsign {
                        Sign::NonNegative => ge_tol(&t, &0.0, &tol),
                        _ => le_tol(&t, &0.0, &tol),
                    };
                    eval.literal = LiteralObs {
                        checked: true,
                        violated: !lpass,
                    };
                }
            }
            Ok(eval)
        }
        PropertyId::T31 | PropertyId::T35 => {
            let t = cheb_direct(&p, &a, &b)?;
            let gated = if prop == PropertyId::T31 {
                bounds::t31_bound(&p, &a, &b, &tol)
            } else {
                bounds::t35_bound(&p, &a, &b, &tol)
            };
            let bound = match gated {
                Ok(v) => v,
                Err(ChebError::HypothesisNotMet(_)) => return Ok(FloatEval::na()),
                Err(e) => return Err(e),
            };
            let mut eval = FloatEval::claim(
                ge_tol(&t, &bound, &tol),
                t - bound,
                case.label.clone(),
                format!("T = {t} below bound {bound}"),
            );
            if strict && prop == PropertyId::T35 {
                if bounds::t35_literal_hypothesis(&p, &a, &b, &tol)? {
                    eval.literal = LiteralObs {
                        checked: true,
                        violated: !ge_tol(&t, &bound, &tol),
                    };
                }
            }
            Ok(eval)
        }
        PropertyId::Sbar => {
            let x = match case.seq_x::<f64>() {
                Some(x) => x?,
                None => return Ok(FloatEval::na()),
            };
            match bounds::sbar_check(&p, &a, &b, &x, &tol) {
                Ok(report) => Ok(FloatEval::claim(
                    report.applicable,
                    report.slack,
                    None,
                    format!(
                        "member value {} exceeds T = {}",
                        report.bound_value, report.functional_value
                    ),
                )),
                Err(ChebError::HypothesisNotMet(_)) | Err(ChebError::NotAMember) => {
                    Ok(FloatEval::na())
                }
                Err(e) => Err(e),
            }
        }
        PropertyId::IdentityEquiv => {
            let t = cheb_direct(&p, &a, &b)?;
            let scale = magnitude_scale(&p, &a, &b)?;
            let det = cheb_via_det_identity(&p, &a, &b)?;
            let mean = cheb_via_mean_identity(&p, &a, &b)?;
            let tail = cheb_via_tail_identity(&p, &a, &b)?;
            let pass = eq_tol_scaled(&t, &det, &tol, &scale)
                && eq_tol_scaled(&t, &mean, &tol, &scale)
                && eq_tol_scaled(&t, &tail, &tol, &scale);
            let worst = (t - det).abs().max((t - mean).abs()).max((t - tail).abs());
            Ok(FloatEval::claim(
                pass,
                -worst,
                None,
                format!("routes disagree: direct {t}, det {det}, mean {mean}, tail {tail}"),
            ))
        }
    }
}

fn eval_case(
    prop: PropertyId,
    case: &Case,
    mode: Mode,
    tol: f64,
    strict: bool,
) -> CaseResult {
    match mode {
        Mode::Exact => {
            let (verdict, tag) = oracle::check_property_tagged(prop, case, false);
            let literal = if strict
                && matches!(prop, PropertyId::T21 | PropertyId::T23 | PropertyId::T35)
            {
                let (lv, ltag) = oracle::check_property_tagged(prop, case, true);
                let relevant = prop != PropertyId::T23
                    || ltag.is_some_and(|t| t.contains('3'));
                LiteralObs {
                    checked: relevant && lv != Verdict::NotApplicable,
                    violated: relevant && lv.is_fail(),
                }
            } else {
                LiteralObs::default()
            };
            let outcome = match verdict {
                Verdict::NotApplicable => Outcome::NotApplicable,
                Verdict::Pass => Outcome::Pass {
                    slack: None,
                    branch: tag.map(str::to_string),
                },
                Verdict::Fail(detail) => Outcome::Violation {
                    detail,
                    branch: tag.map(str::to_string),
                },
            };
            CaseResult {
                case: Some(case.clone()),
                outcome,
                literal,
            }
        }
        Mode::Float => match eval_float(prop, case, tol, strict) {
            Ok(eval) => {
                let outcome = if !eval.applicable {
                    Outcome::NotApplicable
                } else if eval.pass {
                    Outcome::Pass {
                        slack: eval.slack,
                        branch: eval.branch,
                    }
                } else if oracle::check_property(prop, case, false) == Verdict::Pass {
                    // float said no, exact arithmetic says yes: tolerance
                    // artifact, not a counterexample
                    Outcome::ToleranceIncident
                } else if oracle::check_property(prop, case, false)
                    == Verdict::NotApplicable
                {
                    Outcome::ToleranceIncident
                } else {
                    Outcome::Violation {
                        detail: eval.detail,
                        branch: eval.branch,
                    }
                };
                CaseResult {
                    case: Some(case.clone()),
                    outcome,
                    literal: eval.literal,
                }
            }
            Err(e) => CaseResult {
                case: Some(case.clone()),
                outcome: Outcome::Violation {
                    detail: format!("evaluation error: {e}"),
                    branch: None,
                },
                literal: LiteralObs::default(),
            },
        },
    }
}

fn fnv64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn persist_corpus(
    dir: &std::path::Path,
    prop: PropertyId,
    seed: u64,
    index: u64,
    case: &Case,
) -> Result<()> {
    let sub = dir.join(prop.as_str());
    std::fs::create_dir_all(&sub).map_err(|e| ChebError::BadDecimal(e.to_string()))?;
    let json = case.to_file().to_json();
    let mut path = sub.join(format!("{seed}-{index}.json"));
    if path.exists() {
        let existing = std::fs::read_to_string(&path).unwrap_or_default();
        if existing == json {
            return Ok(());
        }
        path = sub.join(format!("{seed}-{index}-{:016x}.json", fnv64(json.as_bytes())));
    }
    std::fs::write(&path, json).map_err(|e| ChebError::BadDecimal(e.to_string()))
}

/// Run one seeded campaign: `cases` generated cases, evaluated under the
/// configured mode. Case generation and evaluation are pure functions of
/// (seed, index), so parallel and sequential runs agree.
pub fn run_campaign(cfg: &VerifyConfig) -> Result<CampaignReport> {
    let start = Instant::now();
    let results = map_indexed(cfg.exec, cfg.cases, |index| {
        let case = match gen_case(cfg.property, &cfg.gen, index) {
            Ok(c) => c,
            Err(_) => {
                return (
                    index,
                    CaseResult {
                        case: None,
                        outcome: Outcome::Skipped,
                        literal: LiteralObs::default(),
                    },
                )
            }
        };
        (
            index,
            eval_case(cfg.property, &case, cfg.mode, cfg.tol, cfg.strict_literal),
        )
    });

    let mut report = CampaignReport {
        property: cfg.property,
        mode: cfg.mode,
        seed: cfg.gen.seed,
        cases: cfg.cases,
        strict_literal: cfg.strict_literal,
        hypothesis_hits: 0,
        skipped: 0,
        tolerance_incidents: 0,
        violations: Vec::new(),
        min_slack: None,
        branch_hits: BTreeMap::new(),
        literal: if cfg.strict_literal {
            Some(LiteralSummary::default())
        } else {
            None
        },
        runtime_ms: 0,
    };

    for (index, result) in &results {
        if let (Some(dir), Some(case)) = (&cfg.corpus_dir, &result.case) {
            persist_corpus(dir, cfg.property, cfg.gen.seed, *index, case)?;
        }
        if let Some(lit) = &mut report.literal {
            if result.literal.checked {
                lit.checked += 1;
                if result.literal.violated {
                    lit.violations += 1;
                }
            }
        }
        match &result.outcome {
            Outcome::Skipped => report.skipped += 1,
            Outcome::NotApplicable => {}
            Outcome::Pass { slack, branch } => {
                report.hypothesis_hits += 1;
                if let Some(b) = branch {
                    *report.branch_hits.entry(b.clone()).or_insert(0) += 1;
                }
                if let Some(s) = slack {
                    report.min_slack =
                        Some(report.min_slack.map_or(*s, |m: f64| m.min(*s)));
                }
            }
            Outcome::ToleranceIncident => {
                report.hypothesis_hits += 1;
                report.tolerance_incidents += 1;
            }
            Outcome::Violation { detail, branch } => {
                report.hypothesis_hits += 1;
                if let Some(b) = branch {
                    *report.branch_hits.entry(b.clone()).or_insert(0) += 1;
                }
                report.violations.push(Violation {
                    index: *index,
                    case: result
                        .case
                        .as_ref()
                        .map(Case::to_file)
                        .expect("violations carry their case"),
                    detail: detail.clone(),
                });
            }
        }
    }
    report.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}
