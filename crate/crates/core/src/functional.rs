//! The weighted Chebyshev functional, evaluated by the direct definition
//! and by three summation-by-parts identities.
//!
//! With P_i, A_i(p) the prefix sums of weights and weighted values and
//! Pbar_i, Abar_i their tail complements, the functional
//!
//! ```text
//! T_n(p;a,b) = (1/P_n) sum p_i a_i b_i
//!            - (1/P_n) sum p_i a_i * (1/P_n) sum p_i b_i
//! ```
//!
//! also equals, summing over i = 1..n-1 with Db_i = b_{i+1} - b_i:
//!
//! ```text
//! (1/P_n^2) sum (P_i A_n - P_n A_i) Db_i                       (det form)
//! (1/P_n)   sum P_i (A_n/P_n - A_i/P_i) Db_i                   (mean form)
//! (1/P_n^2) sum P_i Pbar_i (Abar_i/Pbar_i - A_i/P_i) Db_i      (tail form)
//! ```
//!
//! Route agreement is the backbone of the crate's verification suite; in
//! the exact instantiation the four values are identical rationals.

use crate::error::{ChebError, Result};
use crate::scalar::{max_s, Scalar};
use crate::seq::{check_len, PrefixTable, RealSeq, WeightSeq};

pub fn check_triple<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<()> {
    check_len(p.len(), a.len())?;
    check_len(p.len(), b.len())?;
    Ok(())
}

/// Near-zero floor for prefix/tail sums of `p`: exact zero in rational
/// mode, 1e-12 * max|p_i| * n in float mode.
pub fn weight_floor<S: Scalar>(p: &WeightSeq<S>) -> S {
    let max_abs = p
        .values()
        .iter()
        .fold(S::zero(), |acc, v| max_s(acc, v.abs()));
    S::zero_floor() * max_abs * S::from_i64(p.len() as i64)
}

/// Build all five aggregate lists for one triple.
pub fn prefix_table<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<PrefixTable<S>> {
    check_triple(p, a, b)?;
    let n = p.len();
    let mut pv = Vec::with_capacity(n);
    let mut av = Vec::with_capacity(n);
    let mut bv = Vec::with_capacity(n);
    let mut ps = S::zero();
    let mut as_ = S::zero();
    let mut bs = S::zero();
    for i in 0..n {
        let w = p.values()[i].clone();
        ps = ps + w.clone();
        as_ = as_ + w.clone() * a.values()[i].clone();
        bs = bs + w * b.values()[i].clone();
        pv.push(ps.clone());
        av.push(as_.clone());
        bv.push(bs.clone());
    }
    let pn = pv[n - 1].clone();
    let an = av[n - 1].clone();
    let pbar = pv.iter().map(|x| pn.clone() - x.clone()).collect();
    let abar = av.iter().map(|x| an.clone() - x.clone()).collect();
    Ok(PrefixTable {
        p: pv,
        pbar,
        a: av,
        abar,
        b: bv,
    })
}

/// Direct evaluation from the definition.
pub fn cheb_direct<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    check_triple(p, a, b)?;
    let pn = p.checked_total()?;
    let mut sab = S::zero();
    let mut sa = S::zero();
    let mut sb = S::zero();
    for ((w, x), y) in p.values().iter().zip(a.values()).zip(b.values()) {
        sab = sab + w.clone() * x.clone() * y.clone();
        sa = sa + w.clone() * x.clone();
        sb = sb + w.clone() * y.clone();
    }
    Ok(sab / pn.clone() - (sa / pn.clone()) * (sb / pn))
}

/// Determinant-form identity: (1/P_n^2) sum (P_i A_n - P_n A_i) Db_i.
pub fn cheb_via_det_identity<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, b)?;
    let an = t.a_total();
    let db = b.deltas();
    let mut sum = S::zero();
    for i in 0..p.len() - 1 {
        let det = t.p[i].clone() * an.clone() - pn.clone() * t.a[i].clone();
        sum = sum + det * db[i].clone();
    }
    Ok(sum / (pn.clone() * pn))
}

/// Mean-form identity: (1/P_n) sum P_i (A_n/P_n - A_i/P_i) Db_i.
/// Requires P_i != 0 for i < n.
pub fn cheb_via_mean_identity<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, b)?;
    let floor = weight_floor(p);
    let an = t.a_total();
    let db = b.deltas();
    let mut sum = S::zero();
    for i in 0..p.len() - 1 {
        if t.p[i].abs() <= floor {
            return Err(ChebError::ZeroPrefixSum(i + 1));
        }
        let bracket = an.clone() / pn.clone() - t.a[i].clone() / t.p[i].clone();
        sum = sum + t.p[i].clone() * bracket * db[i].clone();
    }
    Ok(sum / pn)
}

/// Tail-form identity: (1/P_n^2) sum P_i Pbar_i (Abar_i/Pbar_i - A_i/P_i) Db_i.
/// Requires P_i != 0 and Pbar_i != 0 for i < n.
pub fn cheb_via_tail_identity<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    let pn = p.checked_total()?;
    let t = prefix_table(p, a, b)?;
    let floor = weight_floor(p);
    let db = b.deltas();
    let mut sum = S::zero();
    for i in 0..p.len() - 1 {
        if t.p[i].abs() <= floor {
            return Err(ChebError::ZeroPrefixSum(i + 1));
        }
        if t.pbar[i].abs() <= floor {
            return Err(ChebError::ZeroTailSum(i + 1));
        }
        let bracket =
            t.abar[i].clone() / t.pbar[i].clone() - t.a[i].clone() / t.p[i].clone();
        sum = sum + t.p[i].clone() * t.pbar[i].clone() * bracket * db[i].clone();
    }
    Ok(sum / (pn.clone() * pn))
}

/// Both sides of the summation-by-parts formula over 1-based indices
/// `from..to` (inclusive endpoints, `from < to`):
///
/// ```text
/// sum_{l=from}^{to-1} d_l Dv_l
///   = d_to v_to - d_from v_from - sum_{l=from}^{to-1} v_{l+1} Dd_l
/// ```
pub fn abel_sum<S: Scalar>(
    d: &RealSeq<S>,
    v: &RealSeq<S>,
    from: usize,
    to: usize,
) -> Result<(S, S)> {
    check_len(d.len(), v.len())?;
    let n = d.len();
    if from < 1 || to <= from || to > n {
        return Err(ChebError::BadRange { from, to, len: n });
    }
    let d = d.values();
    let v = v.values();
    let mut lhs = S::zero();
    let mut tail = S::zero();
    for l in (from - 1)..(to - 1) {
        lhs = lhs + d[l].clone() * (v[l + 1].clone() - v[l].clone());
        tail = tail + v[l + 1].clone() * (d[l + 1].clone() - d[l].clone());
    }
    let boundary = d[to - 1].clone() * v[to - 1].clone()
        - d[from - 1].clone() * v[from - 1].clone();
    Ok((lhs, boundary - tail))
}

/// Cancellation scale for route comparisons: max(1, largest absolute
/// partial sum encountered by any route). The identities subtract large
/// near-equal quantities, so relative comparisons must use this scale.
pub fn magnitude_scale<S: Scalar>(
    p: &WeightSeq<S>,
    a: &RealSeq<S>,
    b: &RealSeq<S>,
) -> Result<S> {
    check_triple(p, a, b)?;
    let pn = p.checked_total()?.abs();
    let mut sab = S::zero();
    let mut sa = S::zero();
    let mut sb = S::zero();
    for ((w, x), y) in p.values().iter().zip(a.values()).zip(b.values()) {
        sab = sab + (w.clone() * x.clone() * y.clone()).abs();
        sa = sa + (w.clone() * x.clone()).abs();
        sb = sb + (w.clone() * y.clone()).abs();
    }
    let direct = sab / pn.clone() + (sa / pn.clone()) * (sb / pn.clone());
    let t = prefix_table(p, a, b)?;
    let an = t.a_total();
    let db = b.deltas();
    let mut det = S::zero();
    for i in 0..p.len() - 1 {
        det = det
            + ((t.p[i].clone() * an.clone()).abs()
                + (pn.clone() * t.a[i].clone()).abs())
                * db[i].abs();
    }
    Ok(max_s(S::one(), max_s(direct, det / (pn.clone() * pn))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{eq_tol, Rat};
    use num_bigint::BigInt;

    fn rs(vals: &[i64]) -> RealSeq<f64> {
        RealSeq::new(vals.iter().map(|&v| v as f64).collect()).unwrap()
    }

    fn ws(vals: &[f64]) -> WeightSeq<f64> {
        WeightSeq::new(vals.to_vec()).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn rat_seq(vals: &[i64]) -> RealSeq<Rat> {
        RealSeq::new(vals.iter().map(|&v| rat(v, 1)).collect()).unwrap()
    }

    fn rat_w(vals: &[(i64, i64)]) -> WeightSeq<Rat> {
        WeightSeq::new(vals.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn prefix_table_hand_values() {
        let t = prefix_table(&ws(&[1.0, 1.0, 1.0]), &rs(&[1, 2, 3]), &rs(&[0, 0, 0]))
            .unwrap();
        assert_eq!(t.p, vec![1.0, 2.0, 3.0]);
        assert_eq!(t.a, vec![1.0, 3.0, 6.0]);
        assert_eq!(t.abar, vec![5.0, 3.0, 0.0]);
    }

    #[test]
    fn prefix_table_zero_weights_contribute_nothing() {
        let t = prefix_table(&ws(&[1.0, 0.0, 0.0]), &rs(&[5, 7, 9]), &rs(&[0, 0, 0]))
            .unwrap();
        assert_eq!(t.a, vec![5.0, 5.0, 5.0]);
    }

    #[test]
    fn prefix_partial_sum_regime() {
        let w = ws(&[1.0, -0.5, 1.0]);
        let t = prefix_table(&w, &rs(&[0, 0, 0]), &rs(&[0, 0, 0])).unwrap();
        assert_eq!(t.p, vec![1.0, 0.5, 1.5]);
        assert_eq!(w.regime(), crate::seq::Regime::PartialSumBounded);
    }

    #[test]
    fn direct_hand_values() {
        let t = cheb_direct(&ws(&[1.0, 1.0]), &rs(&[1, 2]), &rs(&[1, 2])).unwrap();
        assert_eq!(t, 0.25);
        let t = cheb_direct(&ws(&[1.0, 1.0, 1.0]), &rs(&[1, 2, 3]), &rs(&[3, 2, 1]))
            .unwrap();
        assert!(eq_tol(&t, &(-2.0 / 3.0), &f64::rel_tol()));
    }

    #[test]
    fn direct_vanishes_on_constants() {
        let t = cheb_direct(
            &ws(&[2.0, 3.0, 1.0]),
            &RealSeq::constant(7.0, 3).unwrap(),
            &rs(&[4, -1, 9]),
        )
        .unwrap();
        assert!(eq_tol(&t, &0.0, &f64::rel_tol()));
    }

    #[test]
    fn direct_zero_total_weight() {
        let err = cheb_direct(&ws(&[1.0, -1.0]), &rs(&[1, 2]), &rs(&[1, 2]));
        assert_eq!(err, Err(ChebError::ZeroTotalWeight));
    }

    #[test]
    fn det_identity_hand_values() {
        let t = cheb_via_det_identity(
            &ws(&[1.0, 1.0, 1.0]),
            &rs(&[1, 2, 3]),
            &rs(&[3, 2, 1]),
        )
        .unwrap();
        assert!(eq_tol(&t, &(-2.0 / 3.0), &f64::rel_tol()));
        let t = cheb_via_det_identity(&ws(&[1.0, 1.0]), &rs(&[1, 2]), &rs(&[1, 2]))
            .unwrap();
        assert_eq!(t, 0.25);
    }

    #[test]
    fn det_identity_constant_b() {
        let t = cheb_via_det_identity(
            &ws(&[1.0, 2.0, 3.0]),
            &rs(&[5, -1, 2]),
            &RealSeq::constant(4.0, 3).unwrap(),
        )
        .unwrap();
        assert_eq!(t, 0.0);
    }

    #[test]
    fn mean_identity_hand_values() {
        let t = cheb_via_mean_identity(&ws(&[1.0, 1.0]), &rs(&[1, 2]), &rs(&[1, 2]))
            .unwrap();
        assert_eq!(t, 0.25);
    }

    #[test]
    fn mean_identity_zero_prefix() {
        let err =
            cheb_via_mean_identity(&ws(&[1.0, -1.0, 1.0]), &rs(&[1, 2, 3]), &rs(&[1, 2, 3]));
        assert_eq!(err, Err(ChebError::ZeroPrefixSum(2)));
    }

    #[test]
    fn tail_identity_hand_values() {
        let t = cheb_via_tail_identity(&ws(&[1.0, 1.0]), &rs(&[1, 2]), &rs(&[1, 2]))
            .unwrap();
        assert_eq!(t, 0.25);
        let t = cheb_via_tail_identity(
            &ws(&[1.0, 1.0, 1.0]),
            &rs(&[1, 2, 3]),
            &rs(&[3, 2, 1]),
        )
        .unwrap();
        assert!(eq_tol(&t, &(-2.0 / 3.0), &f64::rel_tol()));
    }

    #[test]
    fn tail_identity_constant_a() {
        let t = cheb_via_tail_identity(
            &ws(&[1.0, 2.0, 1.0]),
            &RealSeq::constant(3.0, 3).unwrap(),
            &rs(&[1, 5, 2]),
        )
        .unwrap();
        assert!(eq_tol(&t, &0.0, &f64::rel_tol()));
    }

    #[test]
    fn exact_routes_bit_identical() {
        let p = rat_w(&[(1, 1), (-1, 2), (1, 1)]);
        let a = rat_seq(&[1, 2, 3]);
        let b = rat_seq(&[1, 2, 3]);
        let direct = cheb_direct(&p, &a, &b).unwrap();
        assert_eq!(direct, rat(4, 3));
        assert_eq!(cheb_via_det_identity(&p, &a, &b).unwrap(), direct);
        assert_eq!(cheb_via_mean_identity(&p, &a, &b).unwrap(), direct);
        assert_eq!(cheb_via_tail_identity(&p, &a, &b).unwrap(), direct);
    }

    #[test]
    fn abel_hand_values() {
        let d = rs(&[1, 2, 3]);
        let v = rs(&[1, 4, 9]);
        let (lhs, rhs) = abel_sum(&d, &v, 1, 3).unwrap();
        assert_eq!(lhs, 13.0);
        assert_eq!(rhs, 13.0);
    }

    #[test]
    fn abel_constant_d() {
        let d = RealSeq::constant(1.0, 2).unwrap();
        let v = rs(&[0, 5]);
        let (lhs, rhs) = abel_sum(&d, &v, 1, 2).unwrap();
        assert_eq!((lhs, rhs), (5.0, 5.0));
    }

    #[test]
    fn abel_constant_v() {
        let d = rs(&[3, -1, 7]);
        let v = RealSeq::constant(2.0, 3).unwrap();
        let (lhs, rhs) = abel_sum(&d, &v, 1, 3).unwrap();
        assert_eq!(lhs, 0.0);
        assert_eq!(rhs, 0.0);
    }

    #[test]
    fn abel_bad_range() {
        let d = rs(&[1, 2]);
        let v = rs(&[1, 2]);
        assert!(matches!(
            abel_sum(&d, &v, 2, 2),
            Err(ChebError::BadRange { .. })
        ));
        assert!(matches!(
            abel_sum(&d, &v, 1, 3),
            Err(ChebError::BadRange { .. })
        ));
    }
}
