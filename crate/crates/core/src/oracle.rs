//! Exact rational ground truth.
//!
//! Everything here is written directly against `&[Rat]` slices with its
//! own prefix sums, independent of the generic engine it cross-checks:
//! the engine instantiated at `Rat` and this module are two separate
//! exact routes to the same quantities. The module also houses the
//! exhaustive small-grid enumerator and the float-vs-exact fidelity
//! check.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::bounds::{self, BoundKind};
use crate::case::{Case, CaseFile};
use crate::classifiers::Direction;
use crate::error::{ChebError, Result};
use crate::exec::{map_indexed, Exec};
use crate::property::PropertyId;
use crate::scalar::{Rat, Scalar};
use crate::seq::{RealSeq, WeightSeq};

fn rz() -> Rat {
    <Rat as Zero>::zero()
}

fn prefix_sums(p: &[Rat]) -> Vec<Rat> {
    let mut out = Vec::with_capacity(p.len());
    let mut acc = rz();
    for w in p {
        acc += w;
        out.push(acc.clone());
    }
    out
}

fn weighted_prefix_sums(p: &[Rat], a: &[Rat]) -> Vec<Rat> {
    let mut out = Vec::with_capacity(p.len());
    let mut acc = rz();
    for (w, v) in p.iter().zip(a) {
        acc += w * v;
        out.push(acc.clone());
    }
    out
}

/// Exact value of the functional; errors when the total weight is
/// exactly zero.
pub fn exact_t(p: &[Rat], a: &[Rat], b: &[Rat]) -> Result<Rat> {
    let pn: Rat = p.iter().sum();
    if pn.is_zero() {
        return Err(ChebError::ZeroTotalWeight);
    }
    let mut sab = rz();
    let mut sa = rz();
    let mut sb = rz();
    for ((w, x), y) in p.iter().zip(a).zip(b) {
        sab += w * x * y;
        sa += w * x;
        sb += w * y;
    }
    Ok(sab / &pn - sa * sb / (&pn * &pn))
}

pub fn exact_monotone(s: &[Rat], dir: Direction) -> bool {
    s.windows(2).all(|w| match dir {
        Direction::Nondecreasing => w[1] >= w[0],
        Direction::Nonincreasing => w[1] <= w[0],
    })
}

pub fn exact_synchronous(a: &[Rat], b: &[Rat]) -> bool {
    let n = a.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| (&a[i] - &a[j]) * (&b[i] - &b[j]) >= rz())
    })
}

pub fn exact_convex(s: &[Rat]) -> bool {
    s.windows(3)
        .all(|w| &w[2] + &w[0] - Rat::from_i64(2) * &w[1] >= rz())
}

pub fn exact_concave(s: &[Rat]) -> bool {
    s.windows(3)
        .all(|w| &w[2] + &w[0] - Rat::from_i64(2) * &w[1] <= rz())
}

pub fn exact_partial_sums_bounded(p: &[Rat]) -> bool {
    let sums = prefix_sums(p);
    let total = &sums[sums.len() - 1];
    sums[..sums.len() - 1]
        .iter()
        .all(|s| *s >= rz() && s <= total)
}

/// None when some prefix weight sum is exactly zero.
pub fn exact_monotone_in_mean(p: &[Rat], s: &[Rat], dir: Direction) -> Option<bool> {
    let ps = prefix_sums(p);
    if ps.iter().any(|x| x.is_zero()) {
        return None;
    }
    let ws = weighted_prefix_sums(p, s);
    let means: Vec<Rat> = ws.iter().zip(&ps).map(|(w, q)| w / q).collect();
    Some(exact_monotone(&means, dir))
}

pub fn exact_last_max_in_mean(p: &[Rat], s: &[Rat]) -> Option<bool> {
    let ps = prefix_sums(p);
    if ps.iter().any(|x| x.is_zero()) {
        return None;
    }
    let ws = weighted_prefix_sums(p, s);
    let n = p.len();
    let last = &ws[n - 1] / &ps[n - 1];
    Some((0..n - 1).all(|i| last >= &ws[i] / &ps[i]))
}

pub fn exact_first_max_in_mean(p: &[Rat], s: &[Rat]) -> Option<bool> {
    let ps = prefix_sums(p);
    if ps.iter().any(|x| x.is_zero()) {
        return None;
    }
    let ws = weighted_prefix_sums(p, s);
    let n = p.len();
    let last = &ws[n - 1] / &ps[n - 1];
    Some((0..n - 1).all(|i| last <= &ws[i] / &ps[i]))
}

pub fn exact_det_condition(p: &[Rat], a: &[Rat]) -> bool {
    let ps = prefix_sums(p);
    let ws = weighted_prefix_sums(p, a);
    let n = p.len();
    let pn = &ps[n - 1];
    let an = &ws[n - 1];
    (0..n - 1).all(|i| &ps[i] * an - pn * &ws[i] >= rz())
}

/// Tail mean dominates prefix mean; None when a prefix or tail weight
/// sum is exactly zero. `literal` divides the tail sum by the prefix
/// weight instead.
pub fn exact_tail_mean_dominates(p: &[Rat], a: &[Rat], literal: bool) -> Option<bool> {
    let ps = prefix_sums(p);
    let ws = weighted_prefix_sums(p, a);
    let n = p.len();
    let pn = ps[n - 1].clone();
    let an = ws[n - 1].clone();
    for i in 0..n - 1 {
        if ps[i].is_zero() {
            return None;
        }
        let pbar = &pn - &ps[i];
        let abar = &an - &ws[i];
        let denom = if literal { ps[i].clone() } else { pbar };
        if denom.is_zero() {
            return None;
        }
        if abar / denom < &ws[i] / &ps[i] {
            return Some(false);
        }
    }
    Some(true)
}

pub fn exact_upper_mean_condition(p: &[Rat], a: &[Rat]) -> Option<bool> {
    let pn: Rat = p.iter().sum();
    if pn.is_zero() {
        return None;
    }
    let an: Rat = p.iter().zip(a).map(|(w, v)| w * v).sum();
    let mean = an / pn;
    Some(a[1..].iter().all(|v| *v <= mean))
}

pub fn exact_lower_mean_condition(p: &[Rat], a: &[Rat]) -> Option<bool> {
    let pn: Rat = p.iter().sum();
    if pn.is_zero() {
        return None;
    }
    let an: Rat = p.iter().zip(a).map(|(w, v)| w * v).sum();
    let mean = an / pn;
    Some(a[1..].iter().all(|v| *v >= mean))
}

/// Prefix means monotone under positive prefix sums; None when some
/// prefix sum is not positive. The literal variant uses the tail-weight
/// denominator on the right-hand side and skips vanishing tails.
pub fn exact_prefix_means_monotone(
    p: &[Rat],
    a: &[Rat],
    dir: Direction,
    literal: bool,
) -> Option<bool> {
    let ps = prefix_sums(p);
    if ps.iter().any(|x| *x <= rz()) {
        return None;
    }
    let ws = weighted_prefix_sums(p, a);
    let n = p.len();
    if literal {
        let pn = ps[n - 1].clone();
        for i in 0..n - 1 {
            let pbar_next = &pn - &ps[i + 1];
            if pbar_next.is_zero() {
                continue;
            }
            let lhs = &ws[i] / &ps[i];
            let rhs = &ws[i + 1] / pbar_next;
            let ok = match dir {
                Direction::Nonincreasing => lhs >= rhs,
                Direction::Nondecreasing => lhs <= rhs,
            };
            if !ok {
                return Some(false);
            }
        }
        Some(true)
    } else {
        let means: Vec<Rat> = ws.iter().zip(&ps).map(|(w, q)| w / q).collect();
        Some(exact_monotone(&means, dir))
    }
}

pub fn exact_in_sbar(x: &[Rat], a: &[Rat], b: &[Rat]) -> bool {
    let plus: Vec<Rat> = a.iter().zip(x).map(|(u, v)| u + v).collect();
    let minus: Vec<Rat> = a.iter().zip(x).map(|(u, v)| u - v).collect();
    exact_synchronous(&plus, b) && exact_synchronous(&minus, b)
}

fn abs_seq(s: &[Rat]) -> Vec<Rat> {
    s.iter().map(|v| v.abs()).collect()
}

fn max_with(s: &[Rat], k: &Rat) -> Vec<Rat> {
    s.iter().map(|v| v.clone().max(k.clone())).collect()
}

fn min_with(s: &[Rat], k: &Rat) -> Vec<Rat> {
    s.iter().map(|v| v.clone().min(k.clone())).collect()
}

pub fn exact_dp_refinement(p: &[Rat], a: &[Rat], b: &[Rat]) -> Result<Rat> {
    let t1 = exact_t(p, &abs_seq(a), b)?.abs();
    let t2 = exact_t(p, a, &abs_seq(b))?.abs();
    let t3 = exact_t(p, &abs_seq(a), &abs_seq(b))?.abs();
    Ok(t1.max(t2).max(t3))
}

pub fn exact_k_split(p: &[Rat], a: &[Rat], b: &[Rat], k: &Rat) -> Result<Rat> {
    let sa = exact_t(p, &max_with(a, k), b)?.abs() + exact_t(p, &min_with(a, k), b)?.abs();
    let sb = exact_t(p, a, &max_with(b, k))?.abs() + exact_t(p, a, &min_with(b, k))?.abs();
    Ok(sa.max(sb))
}

pub fn exact_chain(p: &[Rat], a: &[Rat], b: &[Rat]) -> Result<(Rat, Rat, Rat)> {
    let t = exact_t(p, a, b)?;
    let zero = rz();
    let mid = exact_t(p, &max_with(a, &zero), b)?.abs()
        + exact_t(p, &min_with(a, &zero), b)?.abs();
    let low = exact_t(p, &abs_seq(a), b)?.abs();
    Ok((t, mid, low))
}

fn exact_t21_abs_term(p: &[Rat], a: &[Rat], b: &[Rat]) -> Rat {
    let ps = prefix_sums(p);
    let ws = weighted_prefix_sums(p, a);
    let n = p.len();
    let pn = ps[n - 1].clone();
    let mut abs_sum = rz();
    let mut weight_sum = rz();
    for i in 0..n - 1 {
        let db = &b[i + 1] - &b[i];
        abs_sum += ws[i].abs() * &db;
        weight_sum += &ps[i] * &db;
    }
    abs_sum / &pn - ws[n - 1].abs() * weight_sum / (&pn * &pn)
}

fn exact_t21_tail_term(p: &[Rat], a: &[Rat], b: &[Rat], literal: bool) -> Rat {
    let ps = prefix_sums(p);
    let ws = weighted_prefix_sums(p, a);
    let n = p.len();
    let pn = ps[n - 1].clone();
    let an = ws[n - 1].clone();
    let mut sum = rz();
    for i in 0..n - 1 {
        let db = &b[i + 1] - &b[i];
        let abar = (&an - &ws[i]).abs();
        let term = if literal {
            &ps[i] * (abar - ws[i].abs())
        } else {
            &ps[i] * abar - (&pn - &ps[i]) * ws[i].abs()
        };
        sum += term * db;
    }
    sum / (&pn * &pn)
}

pub fn exact_t21_bound(p: &[Rat], a: &[Rat], b: &[Rat], literal: bool) -> Rat {
    let ab = abs_seq(b);
    let e1 = exact_t21_abs_term(p, a, b).abs();
    let e2 = exact_t21_abs_term(p, a, &ab).abs();
    let e3 = exact_t(p, a, &ab).expect("nonzero total checked by caller").abs();
    let e4 = exact_t21_tail_term(p, a, b, literal).abs();
    let e5 = exact_t21_tail_term(p, a, &ab, literal).abs();
    e1.max(e2).max(e3).max(e4).max(e5)
}

pub fn exact_t31_bound(p: &[Rat], a: &[Rat], b: &[Rat]) -> Rat {
    let n = p.len();
    let pn: Rat = p.iter().sum();
    let an: Rat = p.iter().zip(a).map(|(w, v)| w * v).sum();
    let mean = an / &pn;
    let mut sum = rz();
    for i in 0..n - 1 {
        sum += Rat::from_i64((n - 1 - i) as i64) * &p[i] * (&mean - &a[i]);
    }
    (&b[n - 1] - &b[0]) / Rat::from_i64((n - 1) as i64) * sum / pn
}

pub fn exact_t35_bound(p: &[Rat], a: &[Rat], b: &[Rat]) -> Rat {
    let n = p.len();
    let pn: Rat = p.iter().sum();
    let an: Rat = p.iter().zip(a).map(|(w, v)| w * v).sum();
    let bn: Rat = p.iter().zip(b).map(|(w, v)| w * v).sum();
    let mean = an / &pn;
    let mut weighted = rz();
    let mut weight = rz();
    for i in 0..n - 1 {
        let coeff = Rat::from_i64((n - 1 - i) as i64) * &p[i];
        weighted += &coeff * (&mean - &a[i]);
        weight += coeff;
    }
    weighted / weight * (&b[n - 1] - bn / pn)
}

/// Exact verdict of one property claim on one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Hypothesis does not hold (or a precondition fails); the case does
    /// not count toward verification.
    NotApplicable,
    Pass,
    Fail(String),
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }
}

/// Exact hypothesis check and claim check for one property on one case.
/// `literal` switches the strict-literal readings where they exist.
pub fn check_property(prop: PropertyId, case: &Case, literal: bool) -> Verdict {
    check_property_tagged(prop, case, literal).0
}

/// As [`check_property`], also reporting which hypothesis branch or
/// clause fired (for per-branch hit accounting).
pub fn check_property_tagged(
    prop: PropertyId,
    case: &Case,
    literal: bool,
) -> (Verdict, Option<&'static str>) {
    let p = &case.p;
    let a = &case.a;
    let b = &case.b;
    let pn: Rat = p.iter().sum();
    let nonneg = p.iter().all(|w| *w >= rz());
    match prop {
        PropertyId::A2 | PropertyId::A11 => {
            let hyp_w = match prop {
                PropertyId::A2 => nonneg && pn > rz(),
                _ => exact_partial_sums_bounded(p) && !pn.is_zero(),
            };
            if !hyp_w {
                return (Verdict::NotApplicable, None);
            }
            let a_up = exact_monotone(a, Direction::Nondecreasing);
            let a_down = exact_monotone(a, Direction::Nonincreasing);
            let b_up = exact_monotone(b, Direction::Nondecreasing);
            let b_down = exact_monotone(b, Direction::Nonincreasing);
            let same = (a_up && b_up) || (a_down && b_down);
            let opposite = (a_up && b_down) || (a_down && b_up);
            if !same && !opposite {
                return (Verdict::NotApplicable, None);
            }
            let t = exact_t(p, a, b).expect("nonzero total checked");
            if same && t < rz() {
                return (
                    Verdict::Fail(format!("same-sense monotone but T = {t} < 0")),
                    Some("same_sense"),
                );
            }
            if opposite && !same && t > rz() {
                return (
                    Verdict::Fail(format!("opposite-sense monotone but T = {t} > 0")),
                    Some("opposite_sense"),
                );
            }
            (
                Verdict::Pass,
                Some(if same { "same_sense" } else { "opposite_sense" }),
            )
        }
        PropertyId::Biernacki => {
            if !nonneg || pn <= rz() {
                return (Verdict::NotApplicable, None);
            }
            let a_up = exact_monotone_in_mean(p, a, Direction::Nondecreasing);
            let b_up = exact_monotone_in_mean(p, b, Direction::Nondecreasing);
            let (a_up, b_up) = match (a_up, b_up) {
                (Some(x), Some(y)) => (x, y),
                _ => return (Verdict::NotApplicable, None),
            };
            let a_down = exact_monotone_in_mean(p, a, Direction::Nonincreasing).unwrap();
            let b_down = exact_monotone_in_mean(p, b, Direction::Nonincreasing).unwrap();
            let same = (a_up && b_up) || (a_down && b_down);
            let opposite = (a_up && b_down) || (a_down && b_up);
            if !same && !opposite {
                return (Verdict::NotApplicable, None);
            }
            let t = exact_t(p, a, b).expect("nonzero total checked");
            if same && t < rz() {
                return (
                    Verdict::Fail(format!("same-sense in mean but T = {t} < 0")),
                    Some("same_sense"),
                );
            }
            if opposite && !same && t > rz() {
                return (
                    Verdict::Fail(format!("opposite-sense in mean but T = {t} > 0")),
                    Some("opposite_sense"),
                );
            }
            (
                Verdict::Pass,
                Some(if same { "same_sense" } else { "opposite_sense" }),
            )
        }
        PropertyId::A6 => {
            if !nonneg || pn <= rz() || !exact_synchronous(a, b) {
                return (Verdict::NotApplicable, None);
            }
            let t = exact_t(p, a, b).unwrap();
            let bound = exact_dp_refinement(p, a, b).unwrap();
            if bound < rz() {
                return (Verdict::Fail(format!("refinement {bound} < 0")), None);
            }
            if t < bound {
                return (Verdict::Fail(format!("T = {t} < refinement {bound}")), None);
            }
            (Verdict::Pass, None)
        }
        PropertyId::A8 => {
            if !nonneg || pn <= rz() || !exact_synchronous(a, b) {
                return (Verdict::NotApplicable, None);
            }
            let ks: Vec<Rat> = match &case.k {
                Some(k) => vec![k.clone()],
                None => [-1i64, 0, 1].iter().map(|&v| Rat::from_i64(v)).collect(),
            };
            let t = exact_t(p, a, b).unwrap();
            for k in &ks {
                let bound = exact_k_split(p, a, b, k).unwrap();
                if t < bound {
                    return (
                        Verdict::Fail(format!("T = {t} < split bound {bound} at k = {k}")),
                        None,
                    );
                }
            }
            (Verdict::Pass, None)
        }
        PropertyId::A9 => {
            if !nonneg || pn <= rz() || !exact_synchronous(a, b) {
                return (Verdict::NotApplicable, None);
            }
            let t = exact_t(p, a, b).unwrap();
            let bound = exact_k_split(p, a, b, &rz()).unwrap();
            if t < bound {
                return (Verdict::Fail(format!("T = {t} < pm split {bound}")), None);
            }
            (Verdict::Pass, None)
        }
        PropertyId::A10 => {
            if !nonneg || pn <= rz() || !exact_synchronous(a, b) {
                return (Verdict::NotApplicable, None);
            }
            let (t, mid, low) = exact_chain(p, a, b).unwrap();
            if !(t >= mid && mid >= low && low >= rz()) {
                return (
                    Verdict::Fail(format!("chain broken: t = {t}, mid = {mid}, low = {low}")),
                    None,
                );
            }
            (Verdict::Pass, None)
        }
        PropertyId::T21 => {
            if !nonneg {
                return (Verdict::NotApplicable, None);
            }
            let ps = prefix_sums(p);
            if ps.iter().any(|x| x.is_zero()) {
                return (Verdict::NotApplicable, None);
            }
            let branch_up = exact_monotone(b, Direction::Nondecreasing)
                && exact_last_max_in_mean(p, a).unwrap_or(false);
            let branch_down = exact_monotone(b, Direction::Nonincreasing)
                && exact_first_max_in_mean(p, a).unwrap_or(false);
            if !branch_up && !branch_down {
                return (Verdict::NotApplicable, None);
            }
            let tag = if branch_up {
                "branch_nondecreasing"
            } else {
                "branch_nonincreasing"
            };
            let t = exact_t(p, a, b).unwrap();
            let bound = exact_t21_bound(p, a, b, literal);
            if bound < rz() {
                return (Verdict::Fail(format!("bound {bound} < 0")), Some(tag));
            }
            if t < bound {
                return (Verdict::Fail(format!("T = {t} < bound {bound}")), Some(tag));
            }
            (Verdict::Pass, Some(tag))
        }
        PropertyId::T23 => {
            let b_up = exact_monotone(b, Direction::Nondecreasing);
            let b_down = exact_monotone(b, Direction::Nonincreasing);
            if (!b_up && !b_down) || pn.is_zero() {
                return (Verdict::NotApplicable, None);
            }
            let ps = prefix_sums(p);
            let c1 = exact_det_condition(p, a);
            let c2 = ps.iter().all(|x| *x > rz())
                && exact_last_max_in_mean(p, a).unwrap_or(false);
            let c3 = ps[..ps.len() - 1]
                .iter()
                .all(|x| *x > rz() && x < &ps[ps.len() - 1])
                && exact_tail_mean_dominates(p, a, literal).unwrap_or(false);
            // every satisfied clause is part of the tag, so per-clause hit
            // counts stay visible even though the first clause subsumes
            // the other two whenever they apply
            let tag = match (c1, c2, c3) {
                (true, false, false) => "clause1",
                (true, true, false) => "clause1+2",
                (true, false, true) => "clause1+3",
                (true, true, true) => "clause1+2+3",
                (false, true, false) => "clause2",
                (false, true, true) => "clause2+3",
                (false, false, true) => "clause3",
                (false, false, false) => return (Verdict::NotApplicable, None),
            };
            let t = exact_t(p, a, b).unwrap();
            if b_up && t < rz() {
                return (
                    Verdict::Fail(format!("{tag} with nondecreasing b but T = {t} < 0")),
                    Some(tag),
                );
            }
            if b_down && !b_up && t > rz() {
                return (
                    Verdict::Fail(format!("{tag} with nonincreasing b but T = {t} > 0")),
                    Some(tag),
                );
            }
            (Verdict::Pass, Some(tag))
        }
        PropertyId::T31 => {
            if p.iter().any(|w| *w <= rz()) {
                return (Verdict::NotApplicable, None);
            }
            let convex_branch = exact_convex(b)
                && exact_upper_mean_condition(p, a).unwrap_or(false);
            let concave_branch = exact_concave(b)
                && exact_lower_mean_condition(p, a).unwrap_or(false);
            if !convex_branch && !concave_branch {
                return (Verdict::NotApplicable, None);
            }
            let tag = if convex_branch { "convex" } else { "concave" };
            let t = exact_t(p, a, b).unwrap();
            let bound = exact_t31_bound(p, a, b);
            if t < bound {
                return (Verdict::Fail(format!("T = {t} < bound {bound}")), Some(tag));
            }
            (Verdict::Pass, Some(tag))
        }
        PropertyId::T35 => {
            let ps = prefix_sums(p);
            if ps.iter().any(|x| *x <= rz()) {
                return (Verdict::NotApplicable, None);
            }
            let convex_branch = exact_convex(b)
                && exact_prefix_means_monotone(p, a, Direction::Nonincreasing, literal)
                    .unwrap_or(false);
            let concave_branch = exact_concave(b)
                && exact_prefix_means_monotone(p, a, Direction::Nondecreasing, literal)
                    .unwrap_or(false);
            if !convex_branch && !concave_branch {
                return (Verdict::NotApplicable, None);
            }
            let tag = if convex_branch { "convex" } else { "concave" };
            let t = exact_t(p, a, b).unwrap();
            let bound = exact_t35_bound(p, a, b);
            if t < bound {
                return (Verdict::Fail(format!("T = {t} < bound {bound}")), Some(tag));
            }
            (Verdict::Pass, Some(tag))
        }
        PropertyId::Sbar => {
            let x = match &case.x {
                Some(x) => x,
                None => return (Verdict::NotApplicable, None),
            };
            if !nonneg || pn <= rz() || !exact_synchronous(a, b) || !exact_in_sbar(x, a, b)
            {
                return (Verdict::NotApplicable, None);
            }
            let t = exact_t(p, a, b).unwrap();
            let member = exact_t(p, x, b).unwrap().abs();
            if member > t {
                return (Verdict::Fail(format!("|T(x,b)| = {member} > T = {t}")), None);
            }
            (Verdict::Pass, None)
        }
        PropertyId::IdentityEquiv => {
            if pn.is_zero() {
                return (Verdict::NotApplicable, None);
            }
            let direct = exact_t(p, a, b).unwrap();
            // determinant route, written out independently
            let ps = prefix_sums(p);
            let ws = weighted_prefix_sums(p, a);
            let n = p.len();
            let an = ws[n - 1].clone();
            let mut det_sum = rz();
            for i in 0..n - 1 {
                det_sum += (&ps[i] * &an - &pn * &ws[i]) * (&b[i + 1] - &b[i]);
            }
            let det = det_sum / (&pn * &pn);
            if det != direct {
                return (
                    Verdict::Fail(format!("det route {det} != direct {direct}")),
                    None,
                );
            }
            (Verdict::Pass, None)
        }
    }
}

/// Finite grid over which cases are enumerated exhaustively.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub n: usize,
    pub values: Vec<Rat>,
    pub weights: Vec<Rat>,
    pub cap: u64,
}

pub const DEFAULT_CAP: u64 = 10_000_000;

impl GridSpec {
    /// Total number of enumerated (p, a, b) triples, None on overflow.
    pub fn size(&self) -> Option<u64> {
        let v = self.values.len() as u128;
        let w = self.weights.len() as u128;
        let mut total: u128 = 1;
        for _ in 0..self.n {
            total = total.checked_mul(w)?;
        }
        for _ in 0..2 * self.n {
            total = total.checked_mul(v)?;
        }
        u64::try_from(total).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    pub index: u64,
    pub case: CaseFile,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSummary {
    pub enumerated: u64,
    pub hypothesis_hits: u64,
    pub violations: Vec<Violation>,
    /// Per-branch / per-clause hit counts.
    pub branch_hits: BTreeMap<String, u64>,
}

fn unrank(mut idx: u64, base: usize, digits: usize) -> Vec<usize> {
    let mut out = vec![0usize; digits];
    for slot in (0..digits).rev() {
        out[slot] = (idx % base as u64) as usize;
        idx /= base as u64;
    }
    out
}

/// Exhaustively enumerate the grid (weights outermost, then a, then b,
/// lexicographic) and check the property exactly on every triple.
pub fn enumerate_and_verify(
    spec: &GridSpec,
    prop: PropertyId,
    literal: bool,
    exec: Exec,
) -> Result<EnumSummary> {
    if spec.values.is_empty() || spec.weights.is_empty() || spec.n < 2 {
        return Err(ChebError::TooShort(spec.n));
    }
    let size = spec
        .size()
        .ok_or(ChebError::CapExceeded { size: u64::MAX, cap: spec.cap })?;
    if size > spec.cap {
        return Err(ChebError::CapExceeded { size, cap: spec.cap });
    }
    let n = spec.n;
    let v_count = (spec.values.len() as u64).pow(n as u32);
    let w_count = (spec.weights.len() as u64).pow(n as u32);

    let partials = map_indexed(exec, w_count, |wi| {
        let p: Vec<Rat> = unrank(wi, spec.weights.len(), n)
            .into_iter()
            .map(|d| spec.weights[d].clone())
            .collect();
        let mut hits = 0u64;
        let mut violations = Vec::new();
        let mut branch_hits: BTreeMap<String, u64> = BTreeMap::new();
        for ai in 0..v_count {
            let a: Vec<Rat> = unrank(ai, spec.values.len(), n)
                .into_iter()
                .map(|d| spec.values[d].clone())
                .collect();
            for bi in 0..v_count {
                let b: Vec<Rat> = unrank(bi, spec.values.len(), n)
                    .into_iter()
                    .map(|d| spec.values[d].clone())
                    .collect();
                let case = Case {
                    p: p.clone(),
                    a: a.clone(),
                    b,
                    k: None,
                    x: None,
                    label: None,
                };
                let (verdict, tag) = check_property_tagged(prop, &case, literal);
                match verdict {
                    Verdict::NotApplicable => {}
                    Verdict::Pass => {
                        hits += 1;
                        if let Some(tag) = tag {
                            *branch_hits.entry(tag.to_string()).or_insert(0) += 1;
                        }
                    }
                    Verdict::Fail(detail) => {
                        hits += 1;
                        if let Some(tag) = tag {
                            *branch_hits.entry(tag.to_string()).or_insert(0) += 1;
                        }
                        violations.push(Violation {
                            index: (wi * v_count + ai) * v_count + bi,
                            case: case.to_file(),
                            detail,
                        });
                    }
                }
            }
        }
        (hits, violations, branch_hits)
    });

    let mut summary = EnumSummary {
        enumerated: size,
        hypothesis_hits: 0,
        violations: Vec::new(),
        branch_hits: BTreeMap::new(),
    };
    for (hits, violations, branch_hits) in partials {
        summary.hypothesis_hits += hits;
        summary.violations.extend(violations);
        for (k, v) in branch_hits {
            *summary.branch_hits.entry(k).or_insert(0) += v;
        }
    }
    Ok(summary)
}

/// Relative discrepancy record between the float engine and the exact
/// oracle for one case.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FidelityRecord {
    pub t_discrepancy: Option<f64>,
    pub bound_discrepancies: Vec<(BoundKind, f64)>,
    pub max_discrepancy: f64,
    pub flagged: bool,
}

fn rel_disc(float_val: f64, exact: &Rat) -> f64 {
    let e = exact.to_f64();
    (float_val - e).abs() / f64::max(1.0, e.abs())
}

/// Evaluate T and every bound whose exact hypothesis holds in both the
/// float engine and the exact oracle, reporting relative discrepancies.
pub fn float_vs_exact(case: &Case, tol: f64) -> Result<FidelityRecord> {
    let p: WeightSeq<f64> = case.weights()?;
    let a: RealSeq<f64> = case.seq_a()?;
    let b: RealSeq<f64> = case.seq_b()?;
    let rel = f64::rel_tol();
    let pn: Rat = case.p.iter().sum();
    let nonneg = case.p.iter().all(|w| *w >= rz());

    let mut record = FidelityRecord {
        t_discrepancy: None,
        bound_discrepancies: Vec::new(),
        max_discrepancy: 0.0,
        flagged: false,
    };
    let push = |record: &mut FidelityRecord, kind: Option<BoundKind>, d: f64| {
        match kind {
            Some(k) => record.bound_discrepancies.push((k, d)),
            None => record.t_discrepancy = Some(d),
        }
        if d > record.max_discrepancy {
            record.max_discrepancy = d;
        }
    };

    if !pn.is_zero() {
        let exact = exact_t(&case.p, &case.a, &case.b)?;
        let float = crate::functional::cheb_direct(&p, &a, &b)?;
        push(&mut record, None, rel_disc(float, &exact));
    }
    if nonneg && pn > rz() && exact_synchronous(&case.a, &case.b) {
        let exact = exact_dp_refinement(&case.p, &case.a, &case.b)?;
        let float = bounds::dp_refinement(&p, &a, &b)?;
        push(&mut record, Some(BoundKind::DpRefinement), rel_disc(float, &exact));

        let k = case.k.clone().unwrap_or_else(rz);
        let exact = exact_k_split(&case.p, &case.a, &case.b, &k)?;
        let float = bounds::k_split_bound(&p, &a, &b, &k.to_f64())?;
        push(&mut record, Some(BoundKind::KSplit), rel_disc(float, &exact));

        let (_, mid, _) = exact_chain(&case.p, &case.a, &case.b)?;
        let (_, fmid, _) = bounds::refinement_chain(&p, &a, &b, &rel)?;
        push(&mut record, Some(BoundKind::Chain), rel_disc(fmid, &mid));
    }
    if check_property(PropertyId::T21, case, false) != Verdict::NotApplicable {
        let exact = exact_t21_bound(&case.p, &case.a, &case.b, false);
        let float = bounds::t21_bound_value(&p, &a, &b, false)?;
        push(&mut record, Some(BoundKind::T21), rel_disc(float, &exact));
    }
    if check_property(PropertyId::T31, case, false) != Verdict::NotApplicable {
        let exact = exact_t31_bound(&case.p, &case.a, &case.b);
        let float = bounds::t31_bound_value(&p, &a, &b)?;
        push(&mut record, Some(BoundKind::T31), rel_disc(float, &exact));
    }
    if check_property(PropertyId::T35, case, false) != Verdict::NotApplicable {
        let exact = exact_t35_bound(&case.p, &case.a, &case.b);
        let float = bounds::t35_bound_value(&p, &a, &b)?;
        push(&mut record, Some(BoundKind::T35), rel_disc(float, &exact));
    }
    record.flagged = record.max_discrepancy > tol;
    Ok(record)
}
