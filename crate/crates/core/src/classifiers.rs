//! Hypothesis-class membership predicates.
//!
//! All inequalities are weak; float evaluation accepts a defining
//! inequality that holds up to `rel * scale` so rounding cannot flip a
//! classification. In the exact instantiation `rel = 0` and every test is
//! literal. Predicates whose preconditions fail surface errors; the
//! profile records those as not-applicable instead of false.

use crate::error::{ChebError, Result};
use crate::functional::{prefix_table, weight_floor};
use crate::scalar::{ge_tol, le_tol, Scalar};
use crate::seq::{check_len, RealSeq, Regime, WeightSeq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Direction {
    Nondecreasing,
    Nonincreasing,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Nondecreasing => Direction::Nonincreasing,
            Direction::Nonincreasing => Direction::Nondecreasing,
        }
    }
}

/// Weak monotonicity in the given direction.
pub fn is_monotone<S: Scalar>(s: &RealSeq<S>, dir: Direction, rel: &S) -> bool {
    s.values().windows(2).all(|w| match dir {
        Direction::Nondecreasing => ge_tol(&w[1], &w[0], rel),
        Direction::Nonincreasing => le_tol(&w[1], &w[0], rel),
    })
}

fn pairwise_products_sign<S: Scalar>(
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    nonneg: bool,
    rel: &S,
) -> Result<bool> {
    check_len(a.len(), b.len())?;
    let av = a.values();
    let bv = b.values();
    // Literal O(n^2) pairwise definition; n stays at desk scale.
    for i in 0..av.len() {
        for j in (i + 1)..av.len() {
            let prod = (av[i].clone() - av[j].clone()) * (bv[i].clone() - bv[j].clone());
            let ok = if nonneg {
                ge_tol(&prod, &S::zero(), rel)
            } else {
                le_tol(&prod, &S::zero(), rel)
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// (a_i - a_j)(b_i - b_j) >= 0 for every index pair.
pub fn is_synchronous<S: Scalar>(a: &RealSeq<S>, b: &RealSeq<S>, rel: &S) -> Result<bool> {
    pairwise_products_sign(a, b, true, rel)
}

/// (a_i - a_j)(b_i - b_j) <= 0 for every index pair.
pub fn is_asynchronous<S: Scalar>(a: &RealSeq<S>, b: &RealSeq<S>, rel: &S) -> Result<bool> {
    pairwise_products_sign(a, b, false, rel)
}

/// Prefix weighted means, requiring every P_k nonzero.
fn prefix_means<S: Scalar>(p: &WeightSeq<S>, s: &RealSeq<S>) -> Result<Vec<S>> {
    let t = prefix_table(p, s, s)?;
    let floor = weight_floor(p);
    let mut means = Vec::with_capacity(p.len());
    for k in 0..p.len() {
        if t.p[k].abs() <= floor {
            return Err(ChebError::ZeroPrefixSum(k + 1));
        }
        means.push(t.a[k].clone() / t.p[k].clone());
    }
    Ok(means)
}

/// The prefix weighted means form a monotone sequence in `dir`.
pub fn is_monotone_in_mean<S: Scalar>(
    p: &WeightSeq<S>,
    s: &RealSeq<S>,
    dir: Direction,
    rel: &S,
) -> Result<bool> {
    let means = prefix_means(p, s)?;
    Ok(means.windows(2).all(|w| match dir {
        Direction::Nondecreasing => ge_tol(&w[1], &w[0], rel),
        Direction::Nonincreasing => le_tol(&w[1], &w[0], rel),
    }))
}

/// The full weighted mean dominates every proper prefix mean.
pub fn is_last_max_in_mean<S: Scalar>(
    p: &WeightSeq<S>,
    s: &RealSeq<S>,
    rel: &S,
) -> Result<bool> {
    let means = prefix_means(p, s)?;
    let last = &means[means.len() - 1];
    Ok(means[..means.len() - 1]
        .iter()
        .all(|m| ge_tol(last, m, rel)))
}

/// The full weighted mean is dominated by every proper prefix mean.
pub fn is_first_max_in_mean<S: Scalar>(
    p: &WeightSeq<S>,
    s: &RealSeq<S>,
    rel: &S,
) -> Result<bool> {
    let means = prefix_means(p, s)?;
    let last = &means[means.len() - 1];
    Ok(means[..means.len() - 1]
        .iter()
        .all(|m| le_tol(last, m, rel)))
}

/// Nonnegative second differences; vacuously true for n = 2.
pub fn is_convex<S: Scalar>(s: &RealSeq<S>, rel: &S) -> bool {
    s.values().windows(3).all(|w| {
        let second = w[2].clone() + w[0].clone() - S::from_i64(2) * w[1].clone();
        ge_tol(&second, &S::zero(), rel)
    })
}

/// Nonpositive second differences; vacuously true for n = 2.
pub fn is_concave<S: Scalar>(s: &RealSeq<S>, rel: &S) -> bool {
    s.values().windows(3).all(|w| {
        let second = w[2].clone() + w[0].clone() - S::from_i64(2) * w[1].clone();
        le_tol(&second, &S::zero(), rel)
    })
}

/// 0 <= P_i <= P_n for every i in 1..n-1.
pub fn partial_sums_bounded<S: Scalar>(p: &WeightSeq<S>, rel: &S) -> bool {
    let total = p.total();
    let mut prefix = S::zero();
    for w in &p.values()[..p.len() - 1] {
        prefix = prefix + w.clone();
        if !ge_tol(&prefix, &S::zero(), rel) || !le_tol(&prefix, &total, rel) {
            return false;
        }
    }
    true
}

/// P_i A_n - P_n A_i >= 0 for every i in 1..n-1. Valid for general real
/// weights; no preconditions.
pub fn det_condition_nonneg<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    rel: &S,
) -> Result<bool> {
    let t = prefix_table(p, a, a)?;
    let pn = t.p_total();
    let an = t.a_total();
    Ok((0..p.len() - 1).all(|i| {
        let det = t.p[i].clone() * an.clone() - pn.clone() * t.a[i].clone();
        ge_tol(&det, &S::zero(), rel)
    }))
}

/// Abar_i/Pbar_i >= A_i/P_i for every i in 1..n-1 (tail mean dominates
/// prefix mean).
pub fn tail_mean_dominates<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    rel: &S,
) -> Result<bool> {
    let t = prefix_table(p, a, a)?;
    let floor = weight_floor(p);
    for i in 0..p.len() - 1 {
        if t.p[i].abs() <= floor {
            return Err(ChebError::ZeroPrefixSum(i + 1));
        }
        if t.pbar[i].abs() <= floor {
            return Err(ChebError::ZeroTailSum(i + 1));
        }
        let tail = t.abar[i].clone() / t.pbar[i].clone();
        let head = t.a[i].clone() / t.p[i].clone();
        if !ge_tol(&tail, &head, rel) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strict-literal variant dividing the tail sum by the prefix weight,
/// i.e. Abar_i/P_i >= A_i/P_i. Kept for comparison runs only.
pub fn tail_mean_dominates_literal<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    rel: &S,
) -> Result<bool> {
    let t = prefix_table(p, a, a)?;
    let floor = weight_floor(p);
    for i in 0..p.len() - 1 {
        if t.p[i].abs() <= floor {
            return Err(ChebError::ZeroPrefixSum(i + 1));
        }
        let lhs = t.abar[i].clone() / t.p[i].clone();
        let rhs = t.a[i].clone() / t.p[i].clone();
        if !ge_tol(&lhs, &rhs, rel) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// a_{i+1} <= A_n/P_n for i in 1..n-1, i.e. every entry after the first
/// sits at or below the global weighted mean.
pub fn upper_mean_condition<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    rel: &S,
) -> Result<bool> {
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, a)?;
    let mean = t.a_total() / pn;
    Ok(a.values()[1..].iter().all(|v| le_tol(v, &mean, rel)))
}

/// Mirror of [`upper_mean_condition`] with >=.
pub fn lower_mean_condition<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    rel: &S,
) -> Result<bool> {
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, a)?;
    let mean = t.a_total() / pn;
    Ok(a.values()[1..].iter().all(|v| ge_tol(v, &mean, rel)))
}

/// Prefix weighted means A_i/P_i monotone in `dir` over i = 1..n, under
/// the hypothesis P_i > 0 for all i.
pub fn prefix_means_monotone<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    dir: Direction,
    rel: &S,
) -> Result<bool> {
    let t = prefix_table(p, a, a)?;
    let floor = weight_floor(p);
    for i in 0..p.len() {
        if t.p[i] <= floor {
            return Err(ChebError::NonPositivePrefixSum(i + 1));
        }
    }
    let means: Vec<S> = (0..p.len())
        .map(|i| t.a[i].clone() / t.p[i].clone())
        .collect();
    Ok(means.windows(2).all(|w| match dir {
        Direction::Nondecreasing => ge_tol(&w[1], &w[0], rel),
        Direction::Nonincreasing => le_tol(&w[1], &w[0], rel),
    }))
}

/// Strict-literal variant comparing A_i/P_i against A_{i+1}/Pbar_{i+1}
/// (tail-weight denominator). Indices where the tail weight vanishes are
/// skipped; the final index always has Pbar_n = 0 and is therefore never
/// checked. Kept for comparison runs only.
pub fn prefix_means_monotone_literal<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    dir: Direction,
    rel: &S,
) -> Result<bool> {
    let t = prefix_table(p, a, a)?;
    let floor = weight_floor(p);
    for i in 0..p.len() {
        if t.p[i] <= floor {
            return Err(ChebError::NonPositivePrefixSum(i + 1));
        }
    }
    for i in 0..p.len() - 1 {
        if t.pbar[i + 1].abs() <= floor {
            continue;
        }
        let lhs = t.a[i].clone() / t.p[i].clone();
        let rhs = t.a[i + 1].clone() / t.pbar[i + 1].clone();
        let ok = match dir {
            Direction::Nonincreasing => ge_tol(&lhs, &rhs, rel),
            Direction::Nondecreasing => le_tol(&lhs, &rhs, rel),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in the perturbation class of a synchronous pair: both
/// (a + x, b) and (a - x, b) remain synchronous.
pub fn in_sbar<S: Scalar>(
    x: &RealSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    rel: &S,
) -> Result<bool> {
    check_len(x.len(), a.len())?;
    check_len(a.len(), b.len())?;
    Ok(is_synchronous(&a.add(x)?, b, rel)? && is_synchronous(&a.sub(x)?, b, rel)?)
}

/// Three-valued predicate status: predicates whose preconditions fail are
/// not-applicable, never false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tri {
    True,
    False,
    NotApplicable,
}

impl Tri {
    pub fn is_true(self) -> bool {
        self == Tri::True
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    pub fn from_result(r: Result<bool>) -> Self {
        match r {
            Ok(b) => Tri::from_bool(b),
            Err(_) => Tri::NotApplicable,
        }
    }
}

/// Every hypothesis predicate evaluated on one triple.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ConditionProfile {
    pub regime: Regime,
    pub a_nondecreasing: Tri,
    pub a_nonincreasing: Tri,
    pub b_nondecreasing: Tri,
    pub b_nonincreasing: Tri,
    pub synchronous: Tri,
    pub asynchronous: Tri,
    pub a_incr_in_mean: Tri,
    pub a_decr_in_mean: Tri,
    pub b_incr_in_mean: Tri,
    pub b_decr_in_mean: Tri,
    pub a_last_max_in_mean: Tri,
    pub a_first_max_in_mean: Tri,
    pub b_convex: Tri,
    pub b_concave: Tri,
    pub weights_partial_sum_bounded: Tri,
    pub det_condition_nonneg: Tri,
    pub tail_mean_dominates: Tri,
    pub upper_mean_condition: Tri,
    pub lower_mean_condition: Tri,
    pub prefix_means_nonincreasing: Tri,
    pub prefix_means_nondecreasing: Tri,
}

/// Evaluate every predicate, gating each behind its own preconditions.
pub fn condition_profile<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
    rel: &S,
) -> Result<ConditionProfile> {
    check_len(p.len(), a.len())?;
    check_len(p.len(), b.len())?;
    use Direction::{Nondecreasing, Nonincreasing};
    Ok(ConditionProfile {
        regime: p.regime(),
        a_nondecreasing: Tri::from_bool(is_monotone(a, Nondecreasing, rel)),
        a_nonincreasing: Tri::from_bool(is_monotone(a, Nonincreasing, rel)),
        b_nondecreasing: Tri::from_bool(is_monotone(b, Nondecreasing, rel)),
        b_nonincreasing: Tri::from_bool(is_monotone(b, Nonincreasing, rel)),
        synchronous: Tri::from_result(is_synchronous(a, b, rel)),
        asynchronous: Tri::from_result(is_asynchronous(a, b, rel)),
        a_incr_in_mean: Tri::from_result(is_monotone_in_mean(p, a, Nondecreasing, rel)),
        a_decr_in_mean: Tri::from_result(is_monotone_in_mean(p, a, Nonincreasing, rel)),
        b_incr_in_mean: Tri::from_result(is_monotone_in_mean(p, b, Nondecreasing, rel)),
        b_decr_in_mean: Tri::from_result(is_monotone_in_mean(p, b, Nonincreasing, rel)),
        a_last_max_in_mean: Tri::from_result(is_last_max_in_mean(p, a, rel)),
        a_first_max_in_mean: Tri::from_result(is_first_max_in_mean(p, a, rel)),
        b_convex: Tri::from_bool(is_convex(b, rel)),
        b_concave: Tri::from_bool(is_concave(b, rel)),
        weights_partial_sum_bounded: Tri::from_bool(partial_sums_bounded(p, rel)),
        det_condition_nonneg: Tri::from_result(det_condition_nonneg(p, a, rel)),
        tail_mean_dominates: Tri::from_result(tail_mean_dominates(p, a, rel)),
        upper_mean_condition: Tri::from_result(upper_mean_condition(p, a, rel)),
        lower_mean_condition: Tri::from_result(lower_mean_condition(p, a, rel)),
        prefix_means_nonincreasing: Tri::from_result(prefix_means_monotone(
            p,
            a,
            Nonincreasing,
            rel,
        )),
        prefix_means_nondecreasing: Tri::from_result(prefix_means_monotone(
            p,
            a,
            Nondecreasing,
            rel,
        )),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(vals: &[f64]) -> RealSeq<f64> {
        RealSeq::new(vals.to_vec()).unwrap()
    }

    fn ws(vals: &[f64]) -> WeightSeq<f64> {
        WeightSeq::new(vals.to_vec()).unwrap()
    }

    const R: f64 = 1e-9;

    #[test]
    fn monotone_basic() {
        assert!(is_monotone(&rs(&[1.0, 2.0, 2.0, 3.0]), Direction::Nondecreasing, &R));
        assert!(!is_monotone(&rs(&[1.0, 2.0, 1.0]), Direction::Nondecreasing, &R));
        let c = RealSeq::constant(4.0, 3).unwrap();
        assert!(is_monotone(&c, Direction::Nondecreasing, &R));
        assert!(is_monotone(&c, Direction::Nonincreasing, &R));
    }

    #[test]
    fn synchronous_basic() {
        assert!(is_synchronous(&rs(&[-1.0, 2.0]), &rs(&[-1.0, 2.0]), &R).unwrap());
        assert!(!is_synchronous(&rs(&[1.0, 2.0]), &rs(&[2.0, 1.0]), &R).unwrap());
        let c = RealSeq::constant(5.0, 3).unwrap();
        assert!(is_synchronous(&c, &rs(&[3.0, 1.0, 2.0]), &R).unwrap());
    }

    #[test]
    fn asynchronous_basic() {
        assert!(is_asynchronous(&rs(&[1.0, 2.0]), &rs(&[2.0, 1.0]), &R).unwrap());
        let c = RealSeq::constant(5.0, 2).unwrap();
        assert!(is_asynchronous(&c, &rs(&[3.0, 1.0]), &R).unwrap());
        // fails both signs
        let a = rs(&[1.0, 2.0, 3.0]);
        let b = rs(&[1.0, 3.0, 2.0]);
        assert!(!is_asynchronous(&a, &b, &R).unwrap());
        assert!(!is_synchronous(&a, &b, &R).unwrap());
    }

    #[test]
    fn monotone_in_mean_basic() {
        let p = ws(&[1.0, 1.0, 1.0]);
        assert!(is_monotone_in_mean(&p, &rs(&[1.0, 2.0, 3.0]), Direction::Nondecreasing, &R)
            .unwrap());
        assert!(is_monotone_in_mean(&p, &rs(&[3.0, 1.0, 1.0]), Direction::Nonincreasing, &R)
            .unwrap());
        let c = RealSeq::constant(2.0, 3).unwrap();
        assert!(is_monotone_in_mean(&p, &c, Direction::Nondecreasing, &R).unwrap());
        assert!(is_monotone_in_mean(&p, &c, Direction::Nonincreasing, &R).unwrap());
    }

    #[test]
    fn last_max_in_mean_basic() {
        let p2 = ws(&[1.0, 1.0]);
        assert!(is_last_max_in_mean(&p2, &rs(&[1.0, 2.0]), &R).unwrap());
        assert!(!is_last_max_in_mean(&p2, &rs(&[2.0, 1.0]), &R).unwrap());
        // strictly larger class than monotone: (1,3,2) qualifies
        let p3 = ws(&[1.0, 1.0, 1.0]);
        let a = rs(&[1.0, 3.0, 2.0]);
        assert!(is_last_max_in_mean(&p3, &a, &R).unwrap());
        assert!(!is_monotone(&a, Direction::Nondecreasing, &R));
    }

    #[test]
    fn first_max_in_mean_basic() {
        let p = ws(&[1.0, 1.0]);
        assert!(is_first_max_in_mean(&p, &rs(&[2.0, 1.0]), &R).unwrap());
        assert!(!is_first_max_in_mean(&p, &rs(&[1.0, 2.0]), &R).unwrap());
        let c = RealSeq::constant(3.0, 2).unwrap();
        assert!(is_first_max_in_mean(&p, &c, &R).unwrap());
    }

    #[test]
    fn convex_basic() {
        assert!(is_convex(&rs(&[1.0, 1.0, 2.0]), &R));
        assert!(!is_convex(&rs(&[1.0, 3.0, 4.0]), &R));
        assert!(is_concave(&rs(&[1.0, 3.0, 4.0]), &R));
        // affine: both
        let affine = rs(&[2.0, 5.0, 8.0, 11.0]);
        assert!(is_convex(&affine, &R));
        assert!(is_concave(&affine, &R));
    }

    #[test]
    fn partial_sums_bounded_basic() {
        assert!(partial_sums_bounded(&ws(&[1.0, -0.5, 1.0]), &R));
        assert!(!partial_sums_bounded(&ws(&[-1.0, 2.0]), &R));
        assert!(partial_sums_bounded(&ws(&[0.5, 0.0, 2.0]), &R));
    }

    #[test]
    fn det_condition_basic() {
        assert!(det_condition_nonneg(&ws(&[1.0, 1.0]), &rs(&[1.0, 2.0]), &R).unwrap());
        assert!(!det_condition_nonneg(&ws(&[1.0, 1.0]), &rs(&[2.0, 1.0]), &R).unwrap());
        let c = RealSeq::constant(9.0, 2).unwrap();
        assert!(det_condition_nonneg(&ws(&[1.0, 1.0]), &c, &R).unwrap());
    }

    #[test]
    fn tail_mean_basic() {
        assert!(tail_mean_dominates(&ws(&[1.0, 1.0]), &rs(&[1.0, 2.0]), &R).unwrap());
        assert!(!tail_mean_dominates(&ws(&[1.0, 1.0]), &rs(&[2.0, 1.0]), &R).unwrap());
        let c = RealSeq::constant(3.0, 2).unwrap();
        assert!(tail_mean_dominates(&ws(&[1.0, 1.0]), &c, &R).unwrap());
    }

    #[test]
    fn mean_condition_basic() {
        let p = ws(&[1.0, 1.0, 1.0]);
        assert!(upper_mean_condition(&p, &rs(&[3.0, 1.0, 1.0]), &R).unwrap());
        let p2 = ws(&[1.0, 1.0]);
        assert!(!upper_mean_condition(&p2, &rs(&[1.0, 2.0]), &R).unwrap());
        assert!(lower_mean_condition(&p2, &rs(&[1.0, 2.0]), &R).unwrap());
        let c = RealSeq::constant(2.0, 3).unwrap();
        assert!(upper_mean_condition(&p, &c, &R).unwrap());
        assert!(lower_mean_condition(&p, &c, &R).unwrap());
    }

    #[test]
    fn prefix_means_monotone_basic() {
        let p = ws(&[1.0, 1.0, 1.0]);
        assert!(prefix_means_monotone(&p, &rs(&[3.0, 1.0, 1.0]), Direction::Nonincreasing, &R)
            .unwrap());
        assert!(!prefix_means_monotone(&p, &rs(&[1.0, 2.0, 3.0]), Direction::Nonincreasing, &R)
            .unwrap());
        let c = RealSeq::constant(2.0, 3).unwrap();
        assert!(prefix_means_monotone(&p, &c, Direction::Nonincreasing, &R).unwrap());
        assert!(prefix_means_monotone(&p, &c, Direction::Nondecreasing, &R).unwrap());
    }

    #[test]
    fn prefix_means_monotone_requires_positive_prefixes() {
        let p = ws(&[1.0, -1.0, 1.0]);
        assert_eq!(
            prefix_means_monotone(&p, &rs(&[1.0, 2.0, 3.0]), Direction::Nonincreasing, &R),
            Err(ChebError::NonPositivePrefixSum(2))
        );
    }

    #[test]
    fn sbar_membership_basic() {
        let a = rs(&[1.0, 2.0]);
        let b = rs(&[1.0, 2.0]);
        let zero = RealSeq::constant(0.0, 2).unwrap();
        assert!(in_sbar(&zero, &a, &b, &R).unwrap());
        assert!(in_sbar(&a, &a, &b, &R).unwrap());
        let x = rs(&[10.0, -10.0]);
        assert!(!in_sbar(&x, &a, &b, &R).unwrap());
    }

    #[test]
    fn profile_gates_preconditions() {
        let p = ws(&[1.0, -1.0]);
        let a = rs(&[1.0, 2.0]);
        let profile = condition_profile(&p, &a, &a, &R).unwrap();
        assert_eq!(profile.a_last_max_in_mean, Tri::NotApplicable);
        assert_eq!(profile.a_incr_in_mean, Tri::NotApplicable);
    }

    #[test]
    fn profile_constant_case() {
        let p = ws(&[1.0, 1.0]);
        let c = RealSeq::constant(3.0, 2).unwrap();
        let profile = condition_profile(&p, &c, &c, &R).unwrap();
        assert!(profile.synchronous.is_true());
        assert!(profile.asynchronous.is_true());
        assert!(profile.a_last_max_in_mean.is_true());
        assert!(profile.a_first_max_in_mean.is_true());
        assert!(profile.b_convex.is_true());
        assert!(profile.b_concave.is_true());
    }

    #[test]
    fn profile_example_case() {
        let p = ws(&[1.0, 1.0]);
        let a = rs(&[1.0, 2.0]);
        let profile = condition_profile(&p, &a, &a, &R).unwrap();
        assert!(profile.synchronous.is_true());
        assert!(profile.a_last_max_in_mean.is_true());
        assert!(profile.b_convex.is_true());
    }
}
