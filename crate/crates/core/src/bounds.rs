//! Refinements, lower bounds and sign predictions for the functional.
//!
//! Every gated bound checks its hypotheses first and
//! returns `HypothesisNotMet` otherwise; `*_value` variants compute the
//! raw expression without the hypothesis gate (the CLI exposes these
//! behind --force as non-asserting output).
//!
//! The tail-difference term of the mean-max bound is implemented with the
//! tail weight on the second sum, `(1/P_n^2) sum (P_i|Abar_i| -
//! Pbar_i|A_i|) Db_i`, which is the form the third evaluation identity
//! produces; `*_literal` keeps the prefix-weighted variant for
//! comparison runs.

use crate::classifiers::{
    condition_profile, det_condition_nonneg, in_sbar, is_concave, is_convex,
    is_first_max_in_mean, is_last_max_in_mean, is_monotone, is_synchronous,
    lower_mean_condition, partial_sums_bounded, prefix_means_monotone,
    prefix_means_monotone_literal, tail_mean_dominates, tail_mean_dominates_literal,
    upper_mean_condition, ConditionProfile, Direction,
};
use crate::error::{ChebError, Result};
use crate::functional::{cheb_direct, check_triple, prefix_table, weight_floor};
use crate::scalar::{ge_tol, max_s, Scalar};
use crate::seq::{RealSeq, WeightSeq};

/// Sign prediction for the functional under a sufficient condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    NonNegative,
    NonPositive,
    Unknown,
}

/// Which bound or sign claim a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    DpRefinement,
    KSplit,
    PmSplit,
    Chain,
    T21,
    MpSign,
    T23Sign,
    T31,
    T35,
    SbarMember,
}

/// One bound-vs-functional comparison. `slack = functional - bound` for
/// lower bounds; nonnegative slack certifies the inequality on the case.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<S: Scalar> {
    pub kind: BoundKind,
    pub functional_value: S,
    pub bound_value: S,
    pub slack: S,
    pub applicable: bool,
    pub profile: ConditionProfile,
}

fn require_nonneg_weights<S: Scalar>(p: &WeightSeq<S>) -> Result<()> {
    if p.values().iter().any(|w| *w < S::zero()) {
        return Err(ChebError::HypothesisNotMet(
            "weights must be nonnegative".into(),
        ));
    }
    Ok(())
}

fn require_positive_weights<S: Scalar>(p: &WeightSeq<S>) -> Result<()> {
    if p.values().iter().any(|w| *w <= S::zero()) {
        return Err(ChebError::HypothesisNotMet(
            "weights must be positive".into(),
        ));
    }
    Ok(())
}

fn require_nonzero_prefixes<S: Scalar>(p: &WeightSeq<S>) -> Result<()> {
    let floor = weight_floor(p);
    let mut prefix = S::zero();
    for (i, w) in p.values().iter().enumerate() {
        prefix = prefix + w.clone();
        if prefix.abs() <= floor {
            return Err(ChebError::ZeroPrefixSum(i + 1));
        }
    }
    Ok(())
}

/// max{ |T(|a|,b)|, |T(a,|b|)|, |T(|a|,|b|)| } for nonnegative weights.
pub fn dp_refinement<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    require_nonneg_weights(p)?;
    let t1 = cheb_direct(p, &a.abs(), b)?.abs();
    let t2 = cheb_direct(p, a, &b.abs())?.abs();
    let t3 = cheb_direct(p, &a.abs(), &b.abs())?.abs();
    Ok(max_s(t1, max_s(t2, t3)))
}

/// max{ |T(a max k, b)| + |T(a min k, b)|, |T(a, b max k)| + |T(a, b min k)| }.
pub fn k_split_bound<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    k: &S,
) -> Result<S> {
    require_nonneg_weights(p)?;
    let split_a = cheb_direct(p, &a.truncate_above(k), b)?.abs()
        + cheb_direct(p, &a.truncate_below(k), b)?.abs();
    let split_b = cheb_direct(p, a, &b.truncate_above(k))?.abs()
        + cheb_direct(p, a, &b.truncate_below(k))?.abs();
    Ok(max_s(split_a, split_b))
}

/// [`k_split_bound`] at k = 0.
pub fn pm_split_bound<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    k_split_bound(p, a, b, &S::zero())
}

/// The three-step chain T >= |T(a_+,b)| + |T(a_-,b)| >= |T(|a|,b)| >= 0,
/// claimed for synchronous pairs with nonnegative weights. Returns
/// (t, mid, low).
pub fn refinement_chain<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    rel: &S,
) -> Result<(S, S, S)> {
    require_nonneg_weights(p)?;
    if !is_synchronous(a, b, rel)? {
        return Err(ChebError::HypothesisNotMet(
            "(a, b) must be synchronous".into(),
        ));
    }
    let t = cheb_direct(p, a, b)?;
    let mid = cheb_direct(p, &a.plus_part(), b)?.abs()
        + cheb_direct(p, &a.minus_part(), b)?.abs();
    let low = cheb_direct(p, &a.abs(), b)?.abs();
    Ok((t, mid, low))
}

/// Absolute-prefix term of the mean-max bound:
/// (1/P_n) sum |A_i| Db_i - (|A_n|/P_n) (1/P_n) sum P_i Db_i.
pub fn t21_abs_term<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, b)?;
    let db = b.deltas();
    let mut abs_sum = S::zero();
    let mut weight_sum = S::zero();
    for i in 0..p.len() - 1 {
        abs_sum = abs_sum + t.a[i].abs() * db[i].clone();
        weight_sum = weight_sum + t.p[i].clone() * db[i].clone();
    }
    Ok(abs_sum / pn.clone() - (t.a_total().abs() / pn.clone()) * (weight_sum / pn))
}

/// Tail-difference term: (1/P_n^2) sum (P_i|Abar_i| - Pbar_i|A_i|) Db_i.
pub fn t21_tail_term<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, b)?;
    let db = b.deltas();
    let mut sum = S::zero();
    for i in 0..p.len() - 1 {
        sum = sum
            + (t.p[i].clone() * t.abar[i].abs() - t.pbar[i].clone() * t.a[i].abs())
                * db[i].clone();
    }
    Ok(sum / (pn.clone() * pn))
}

/// Literal print of the tail-difference term with the prefix weight on
/// both sums. Violates the bound; kept only for --strict-literal runs.
pub fn t21_tail_term_literal<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, b)?;
    let db = b.deltas();
    let mut sum = S::zero();
    for i in 0..p.len() - 1 {
        sum = sum + t.p[i].clone() * (t.abar[i].abs() - t.a[i].abs()) * db[i].clone();
    }
    Ok(sum / (pn.clone() * pn))
}

/// Raw five-element max without the hypothesis gate.
pub fn t21_bound_value<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    literal: bool,
) -> Result<S> {
    let abs_b = b.abs();
    let tail = if literal {
        t21_tail_term_literal
    } else {
        t21_tail_term
    };
    let e1 = t21_abs_term(p, a, b)?.abs();
    let e2 = t21_abs_term(p, a, &abs_b)?.abs();
    let e3 = cheb_direct(p, a, &abs_b)?.abs();
    let e4 = tail(p, a, b)?.abs();
    let e5 = tail(p, a, &abs_b)?.abs();
    Ok(max_s(e1, max_s(e2, max_s(e3, max_s(e4, e5)))))
}

/// Five-element lower bound for T under: nonnegative weights with nonzero
/// prefix sums, and either (b nondecreasing, a last-max in mean) or
/// (b nonincreasing, a first-max in mean).
pub fn t21_bound<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    rel: &S,
) -> Result<S> {
    require_nonneg_weights(p)?;
    require_nonzero_prefixes(p)?;
    let branch_up = is_monotone(b, Direction::Nondecreasing, rel)
        && is_last_max_in_mean(p, a, rel)?;
    let branch_down = is_monotone(b, Direction::Nonincreasing, rel)
        && is_first_max_in_mean(p, a, rel)?;
    if !branch_up && !branch_down {
        return Err(ChebError::HypothesisNotMet(
            "need b nondecreasing with a last-max in mean, or b nonincreasing with a first-max in mean".into(),
        ));
    }
    t21_bound_value(p, a, b, false)
}

/// Raw convex-sequence bound value:
/// (b_n - b_1)/(n-1) * (1/P_n) sum_{i<n} (n-i) p_i (A_n/P_n - a_i).
pub fn t31_bound_value<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    check_triple(p, a, b)?;
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, b)?;
    let n = p.len();
    let mean = t.a_total() / pn.clone();
    let mut sum = S::zero();
    for i in 0..n - 1 {
        sum = sum
            + S::from_i64((n - 1 - i) as i64)
                * p.values()[i].clone()
                * (mean.clone() - a.values()[i].clone());
    }
    let span = b.values()[n - 1].clone() - b.values()[0].clone();
    Ok(span / S::from_i64((n - 1) as i64) * (sum / pn))
}

/// Lower bound for positive weights when b is convex and every entry of a
/// after the first sits at or below the global mean (or the concave /
/// at-or-above mirror). Both branches assert T >= bound with the same
/// right-hand side: the (a, b) -> (-a, -b) reflection maps one branch to
/// the other and leaves the expression invariant.
pub fn t31_bound<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    rel: &S,
) -> Result<S> {
    require_positive_weights(p)?;
    let convex_branch = is_convex(b, rel) && upper_mean_condition(p, a, rel)?;
    let concave_branch = is_concave(b, rel) && lower_mean_condition(p, a, rel)?;
    if !convex_branch && !concave_branch {
        return Err(ChebError::HypothesisNotMet(
            "need b convex with a at-or-below mean, or b concave with a at-or-above mean".into(),
        ));
    }
    t31_bound_value(p, a, b)
}

/// Raw mean-monotone bound value:
/// (1/sum (n-i)p_i) sum (n-i) p_i (A_n/P_n - a_i) * (b_n - B_n/P_n).
pub fn t35_bound_value<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    check_triple(p, a, b)?;
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, b)?;
    let n = p.len();
    let mean = t.a_total() / pn.clone();
    let mut weighted = S::zero();
    let mut weight = S::zero();
    for i in 0..n - 1 {
        let coeff = S::from_i64((n - 1 - i) as i64) * p.values()[i].clone();
        weighted = weighted + coeff.clone() * (mean.clone() - a.values()[i].clone());
        weight = weight + coeff;
    }
    let b_gap = b.values()[n - 1].clone() - t.b_total() / pn;
    Ok(weighted / weight * b_gap)
}

/// Lower bound under positive prefix sums when b is convex and the prefix
/// means of a are nonincreasing (or the concave / nondecreasing mirror;
/// same reflection argument as [`t31_bound`]).
pub fn t35_bound<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    rel: &S,
) -> Result<S> {
    let convex_branch = is_convex(b, rel)
        && prefix_means_monotone(p, a, Direction::Nonincreasing, rel)?;
    let concave_branch = is_concave(b, rel)
        && prefix_means_monotone(p, a, Direction::Nondecreasing, rel)?;
    if !convex_branch && !concave_branch {
        return Err(ChebError::HypothesisNotMet(
            "need b convex with nonincreasing prefix means of a, or the concave mirror".into(),
        ));
    }
    t35_bound_value(p, a, b)
}

/// Strict-literal hypothesis for the mean-monotone bound, using the
/// tail-weight denominator. Returns whether the literal hypothesis holds;
/// the bound expression itself is unchanged.
pub fn t35_literal_hypothesis<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    rel: &S,
) -> Result<bool> {
    Ok((is_convex(b, rel)
        && prefix_means_monotone_literal(p, a, Direction::Nonincreasing, rel)?)
        || (is_concave(b, rel)
            && prefix_means_monotone_literal(p, a, Direction::Nondecreasing, rel)?))
}

/// Sign prediction for bounded partial sums with monotone a, b.
pub fn mp_sign<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    rel: &S,
) -> Sign {
    if !partial_sums_bounded(p, rel) {
        return Sign::Unknown;
    }
    let a_up = is_monotone(a, Direction::Nondecreasing, rel);
    let a_down = is_monotone(a, Direction::Nonincreasing, rel);
    let b_up = is_monotone(b, Direction::Nondecreasing, rel);
    let b_down = is_monotone(b, Direction::Nonincreasing, rel);
    if (a_up && b_up) || (a_down && b_down) {
        Sign::NonNegative
    } else if (a_up && b_down) || (a_down && b_up) {
        Sign::NonPositive
    } else {
        Sign::Unknown
    }
}

/// Sign prediction for general real weights from three sufficient
/// clauses, each paired with monotone b. Returns the sign and which
/// clause fired (1-based).
pub fn t23_sign<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    rel: &S,
    literal: bool,
) -> Result<(Sign, Option<u8>)> {
    let b_up = is_monotone(b, Direction::Nondecreasing, rel);
    let b_down = is_monotone(b, Direction::Nonincreasing, rel);
    if !b_up && !b_down {
        return Ok((Sign::Unknown, None));
    }
    let clause = t23_clause(p, a, rel, literal)?;
    Ok(match clause {
        Some(c) if b_up => (Sign::NonNegative, Some(c)),
        Some(c) => (Sign::NonPositive, Some(c)),
        None => (Sign::Unknown, None),
    })
}

fn t23_clause<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    rel: &S,
    literal: bool,
) -> Result<Option<u8>> {
    if det_condition_nonneg(p, a, rel)? {
        return Ok(Some(1));
    }
    let t = prefix_table(p, a, a)?;
    let all_positive = t.p.iter().all(|x| *x > S::zero());
    if all_positive && is_last_max_in_mean(p, a, rel).unwrap_or(false) {
        return Ok(Some(2));
    }
    let pn = t.p_total();
    let interior = (0..p.len() - 1).all(|i| t.p[i] > S::zero() && t.p[i] < pn);
    if interior {
        let dominates = if literal {
            tail_mean_dominates_literal(p, a, rel)
        } else {
            tail_mean_dominates(p, a, rel)
        }
        .unwrap_or(false);
        if dominates {
            return Ok(Some(3));
        }
    }
    Ok(None)
}

/// Membership-side check of the supremum representation: for x in the
/// perturbation class of a synchronous pair, |T(p;x,b)| <= T(p;a,b).
/// The supremum itself is not computed.
pub fn sbar_check<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    x: &RealSeq<S>,
    rel: &S,
) -> Result<BoundReport<S>> {
    require_nonneg_weights(p)?;
    if !is_synchronous(a, b, rel)? {
        return Err(ChebError::HypothesisNotMet(
            "(a, b) must be synchronous".into(),
        ));
    }
    if !in_sbar(x, a, b, rel)? {
        return Err(ChebError::NotAMember);
    }
    let t = cheb_direct(p, a, b)?;
    let member = cheb_direct(p, x, b)?.abs();
    let slack = t.clone() - member.clone();
    let applicable = ge_tol(&t, &member, rel);
    Ok(BoundReport {
        kind: BoundKind::SbarMember,
        functional_value: t,
        bound_value: member,
        slack,
        applicable,
        profile: condition_profile(p, a, b, rel)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{eq_tol, Rat};
    use num_bigint::BigInt;

    const R: f64 = 1e-9;

    fn rs(vals: &[f64]) -> RealSeq<f64> {
        RealSeq::new(vals.to_vec()).unwrap()
    }

    fn ws(vals: &[f64]) -> WeightSeq<f64> {
        WeightSeq::new(vals.to_vec()).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn dp_refinement_hand_case() {
        let p = ws(&[1.0, 1.0]);
        let ab = rs(&[-1.0, 2.0]);
        let t = cheb_direct(&p, &ab, &ab).unwrap();
        assert_eq!(t, 2.25);
        let bound = dp_refinement(&p, &ab, &ab).unwrap();
        assert_eq!(bound, 0.75);
    }

    #[test]
    fn dp_refinement_nonnegative_inputs_collapse() {
        let p = ws(&[1.0, 2.0]);
        let a = rs(&[1.0, 3.0]);
        let b = rs(&[0.0, 2.0]);
        let t = cheb_direct(&p, &a, &b).unwrap().abs();
        assert!(eq_tol(&dp_refinement(&p, &a, &b).unwrap(), &t, &R));
    }

    #[test]
    fn dp_refinement_constant_a() {
        let p = ws(&[1.0, 1.0]);
        let c = RealSeq::constant(4.0, 2).unwrap();
        let bound = dp_refinement(&p, &c, &rs(&[1.0, 5.0])).unwrap();
        assert!(eq_tol(&bound, &0.0, &R));
    }

    #[test]
    fn k_split_reduces_to_pm_split_at_zero() {
        let p = ws(&[1.0, 1.0]);
        let ab = rs(&[-1.0, 2.0]);
        let k0 = k_split_bound(&p, &ab, &ab, &0.0).unwrap();
        let pm = pm_split_bound(&p, &ab, &ab).unwrap();
        assert_eq!(k0, pm);
        assert_eq!(k0, 2.25);
    }

    #[test]
    fn k_split_saturates_for_large_k() {
        let p = ws(&[1.0, 1.0]);
        let a = rs(&[-1.0, 2.0]);
        let b = rs(&[-1.0, 2.0]);
        let t = cheb_direct(&p, &a, &b).unwrap().abs();
        let bound = k_split_bound(&p, &a, &b, &10.0).unwrap();
        assert!(eq_tol(&bound, &t, &R));
    }

    #[test]
    fn chain_hand_case() {
        let p = ws(&[1.0, 1.0]);
        let ab = rs(&[-1.0, 2.0]);
        let (t, mid, low) = refinement_chain(&p, &ab, &ab, &R).unwrap();
        assert_eq!((t, mid, low), (2.25, 2.25, 0.75));
    }

    #[test]
    fn chain_constant_a() {
        let p = ws(&[1.0, 2.0]);
        let c = RealSeq::constant(1.0, 2).unwrap();
        let (t, mid, low) = refinement_chain(&p, &c, &rs(&[0.0, 3.0]), &R).unwrap();
        assert!(eq_tol(&t, &0.0, &R));
        assert!(eq_tol(&mid, &0.0, &R));
        assert!(eq_tol(&low, &0.0, &R));
    }

    #[test]
    fn chain_requires_synchronous() {
        let p = ws(&[1.0, 1.0]);
        assert!(matches!(
            refinement_chain(&p, &rs(&[1.0, 2.0]), &rs(&[2.0, 1.0]), &R),
            Err(ChebError::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn t21_terms_hand_values() {
        let p = ws(&[1.0, 1.0]);
        let a = rs(&[1.0, 2.0]);
        let b = rs(&[1.0, 2.0]);
        assert_eq!(t21_abs_term(&p, &a, &b).unwrap(), -0.25);
        assert_eq!(t21_tail_term(&p, &a, &b).unwrap(), 0.25);
        let c = RealSeq::constant(5.0, 2).unwrap();
        assert_eq!(t21_abs_term(&p, &a, &c).unwrap(), 0.0);
        assert_eq!(t21_tail_term(&p, &a, &c).unwrap(), 0.0);
    }

    #[test]
    fn t21_abs_term_equals_negated_functional_for_nonneg_a() {
        let p = ws(&[1.0, 2.0, 1.0]);
        let a = rs(&[1.0, 0.0, 3.0]);
        let b = rs(&[2.0, -1.0, 5.0]);
        let lhs = t21_abs_term(&p, &a, &b).unwrap();
        let t = cheb_direct(&p, &a, &b).unwrap();
        assert!(eq_tol(&lhs, &(-t), &R));
    }

    #[test]
    fn t21_tail_term_equals_functional_for_nonneg_a() {
        let p = ws(&[1.0, 2.0]);
        let a = rs(&[1.0, 2.0]);
        let b = rs(&[0.0, 1.0]);
        let d = t21_tail_term(&p, &a, &b).unwrap();
        let t = cheb_direct(&p, &a, &b).unwrap();
        assert!(eq_tol(&d, &t, &R));
        // the literal print differs on this case
        let lit = t21_tail_term_literal(&p, &a, &b).unwrap();
        assert!(eq_tol(&lit, &(1.0 / 3.0), &R));
        assert!(eq_tol(&t, &(2.0 / 9.0), &R));
    }

    #[test]
    fn t21_bound_tight_case() {
        let p = ws(&[1.0, 1.0]);
        let a = rs(&[1.0, 2.0]);
        let b = rs(&[1.0, 2.0]);
        let bound = t21_bound(&p, &a, &b, &R).unwrap();
        assert_eq!(bound, 0.25);
        assert_eq!(cheb_direct(&p, &a, &b).unwrap(), 0.25);
    }

    #[test]
    fn t21_bound_non_monotone_accept() {
        let p = ws(&[1.0, 1.0, 1.0]);
        let a = rs(&[1.0, 3.0, 2.0]);
        let b = rs(&[1.0, 2.0, 4.0]);
        let bound = t21_bound(&p, &a, &b, &R).unwrap();
        let t = cheb_direct(&p, &a, &b).unwrap();
        assert!(ge_tol(&t, &bound, &R));
    }

    #[test]
    fn t21_bound_hypothesis_gate() {
        let p = ws(&[1.0, 1.0]);
        // a first-max, b nondecreasing: neither branch
        assert!(matches!(
            t21_bound(&p, &rs(&[2.0, 1.0]), &rs(&[1.0, 2.0]), &R),
            Err(ChebError::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn t31_worked_triple() {
        let p = ws(&[1.0, 1.0, 1.0]);
        let a = rs(&[3.0, 1.0, 1.0]);
        let b = rs(&[1.0, 1.0, 2.0]);
        let bound = t31_bound(&p, &a, &b, &R).unwrap();
        assert!(eq_tol(&bound, &(-1.0 / 3.0), &R));
        let t = cheb_direct(&p, &a, &b).unwrap();
        assert!(eq_tol(&t, &(-2.0 / 9.0), &R));
        assert!(ge_tol(&t, &bound, &R));
    }

    #[test]
    fn t31_constant_a_gives_zero() {
        let p = ws(&[1.0, 2.0, 1.0]);
        let c = RealSeq::constant(2.0, 3).unwrap();
        let b = rs(&[0.0, 1.0, 3.0]);
        let bound = t31_bound(&p, &c, &b, &R).unwrap();
        assert!(eq_tol(&bound, &0.0, &R));
    }

    #[test]
    fn t31_affine_b_applies() {
        let p = ws(&[1.0, 1.0, 1.0]);
        let a = rs(&[3.0, 1.0, 1.0]);
        let b = rs(&[1.0, 2.0, 3.0]);
        let bound = t31_bound(&p, &a, &b, &R).unwrap();
        let t = cheb_direct(&p, &a, &b).unwrap();
        assert!(ge_tol(&t, &bound, &R));
    }

    #[test]
    fn t35_worked_triple() {
        let p = ws(&[1.0, 1.0, 1.0]);
        let a = rs(&[3.0, 1.0, 1.0]);
        let b = rs(&[1.0, 1.0, 2.0]);
        let bound = t35_bound(&p, &a, &b, &R).unwrap();
        assert!(eq_tol(&bound, &(-4.0 / 9.0), &R));
        let t = cheb_direct(&p, &a, &b).unwrap();
        assert!(ge_tol(&t, &bound, &R));
    }

    #[test]
    fn t35_degenerate_cases_vanish() {
        let p = ws(&[1.0, 1.0, 1.0]);
        let c = RealSeq::constant(2.0, 3).unwrap();
        let b = rs(&[1.0, 1.0, 2.0]);
        assert!(eq_tol(&t35_bound(&p, &c, &b, &R).unwrap(), &0.0, &R));
        let a = rs(&[3.0, 1.0, 1.0]);
        let cb = RealSeq::constant(4.0, 3).unwrap();
        assert!(eq_tol(&t35_bound(&p, &a, &cb, &R).unwrap(), &0.0, &R));
    }

    #[test]
    fn mp_sign_cases() {
        let p = ws(&[1.0, -0.5, 1.0]);
        let up = rs(&[1.0, 2.0, 3.0]);
        let down = rs(&[3.0, 2.0, 1.0]);
        assert_eq!(mp_sign(&p, &up, &up, &R), Sign::NonNegative);
        assert_eq!(mp_sign(&p, &up, &down, &R), Sign::NonPositive);
        let t = cheb_direct(&p, &up, &up).unwrap();
        assert!(eq_tol(&t, &(4.0 / 3.0), &R));
        let bad = ws(&[-1.0, 2.0]);
        assert_eq!(mp_sign(&bad, &rs(&[1.0, 2.0]), &rs(&[1.0, 2.0]), &R), Sign::Unknown);
    }

    #[test]
    fn t23_sign_det_clause_with_negative_weight() {
        let p = ws(&[1.0, -0.5, 1.0]);
        let a = rs(&[1.0, 2.0, 3.0]);
        let b = rs(&[0.0, 1.0, 2.0]);
        let (sign, clause) = t23_sign(&p, &a, &b, &R, false).unwrap();
        assert_eq!(sign, Sign::NonNegative);
        assert_eq!(clause, Some(1));
    }

    #[test]
    fn t23_sign_last_max_clause() {
        let p = ws(&[1.0, 1.0, 1.0]);
        let a = rs(&[1.0, 3.0, 2.0]);
        let b = rs(&[1.0, 2.0, 4.0]);
        let (sign, clause) = t23_sign(&p, &a, &b, &R, false).unwrap();
        assert_eq!(sign, Sign::NonNegative);
        assert!(clause.is_some());
    }

    #[test]
    fn t23_sign_unknown_for_non_monotone_b() {
        let p = ws(&[1.0, 1.0, 1.0]);
        let a = rs(&[1.0, 2.0, 3.0]);
        let b = rs(&[1.0, 3.0, 2.0]);
        assert_eq!(t23_sign(&p, &a, &b, &R, false).unwrap().0, Sign::Unknown);
    }

    #[test]
    fn sbar_check_identity_and_zero() {
        let p = ws(&[1.0, 1.0]);
        let ab = rs(&[1.0, 2.0]);
        let report = sbar_check(&p, &ab, &ab, &ab, &R).unwrap();
        assert!(eq_tol(&report.slack, &0.0, &R));
        let zero = RealSeq::constant(0.0, 2).unwrap();
        let report = sbar_check(&p, &ab, &ab, &zero, &R).unwrap();
        assert!(report.applicable);
        assert_eq!(report.bound_value, 0.0);
    }

    #[test]
    fn sbar_check_rejects_non_members() {
        let p = ws(&[1.0, 1.0]);
        let ab = rs(&[1.0, 2.0]);
        let x = rs(&[10.0, -10.0]);
        assert_eq!(sbar_check(&p, &ab, &ab, &x, &R), Err(ChebError::NotAMember));
    }

    #[test]
    fn additivity_split_exact() {
        // T(p; a_+, b) + T(p; a_-, b) = T(p; a, b) exactly in rational mode
        let p = WeightSeq::new(vec![rat(1, 1), rat(2, 1)]).unwrap();
        let a = RealSeq::new(vec![rat(-1, 1), rat(2, 1)]).unwrap();
        let b = RealSeq::new(vec![rat(-3, 1), rat(5, 1)]).unwrap();
        let whole = cheb_direct(&p, &a, &b).unwrap();
        let plus = cheb_direct(&p, &a.plus_part(), &b).unwrap();
        let minus = cheb_direct(&p, &a.minus_part(), &b).unwrap();
        assert_eq!(plus + minus, whole);
    }
}
