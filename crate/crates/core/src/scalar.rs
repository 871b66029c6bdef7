//! Arithmetic abstraction over the two evaluation modes.
//!
//! Every functional, predicate and bound in this crate is generic over
//! [`Scalar`], instantiated at `f64` (float mode) or [`Rat`] (exact
//! rational mode). Tolerances collapse to zero in the exact instantiation,
//! so tolerance-banded comparisons become exact comparisons there.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational. Always in lowest terms with a positive
/// denominator (maintained by `num-rational`).
pub type Rat = Ratio<BigInt>;

pub trait Scalar:
    Clone
    + PartialOrd
    + PartialEq
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn abs(&self) -> Self;
    fn is_finite_val(&self) -> bool;
    /// Relative tolerance used in comparisons; zero in exact mode.
    fn rel_tol() -> Self;
    /// Absolute floor used for near-zero total-weight detection; zero in
    /// exact mode, where the test degenerates to an exact zero test.
    fn zero_floor() -> Self;
    fn is_exact() -> bool;
    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rat(r: &Rat) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn is_finite_val(&self) -> bool {
        self.is_finite()
    }
    fn rel_tol() -> Self {
        1e-9
    }
    fn zero_floor() -> Self {
        1e-12
    }
    fn is_exact() -> bool {
        false
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as num_traits::One>::one()
    }
    fn from_i64(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn is_finite_val(&self) -> bool {
        true
    }
    fn rel_tol() -> Self {
        <Rat as Zero>::zero()
    }
    fn zero_floor() -> Self {
        <Rat as Zero>::zero()
    }
    fn is_exact() -> bool {
        true
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

pub fn max_s<S: Scalar>(x: S, y: S) -> S {
    if x >= y {
        x
    } else {
        y
    }
}

pub fn min_s<S: Scalar>(x: S, y: S) -> S {
    if x <= y {
        x
    } else {
        y
    }
}

/// Comparison scale: max(1, |x|, |y|). Keeps relative tolerances from
/// vanishing near zero.
pub fn cmp_scale<S: Scalar>(x: &S, y: &S) -> S {
    max_s(S::one(), max_s(x.abs(), y.abs()))
}

/// `x >= y` up to `rel * max(1, |x|, |y|)` of slack. Exact when `rel = 0`.
pub fn ge_tol<S: Scalar>(x: &S, y: &S, rel: &S) -> bool {
    let slack = rel.clone() * cmp_scale(x, y);
    x.clone() + slack >= y.clone()
}

/// `x <= y` up to the same banded slack.
pub fn le_tol<S: Scalar>(x: &S, y: &S, rel: &S) -> bool {
    ge_tol(y, x, rel)
}

/// `|x - y| <= rel * scale` with `scale = max(1, |x|, |y|, extra_scale)`.
/// The caller supplies `extra_scale` when the quantities were produced by
/// cancellation-prone sums whose intermediate magnitude exceeds the result.
pub fn eq_tol_scaled<S: Scalar>(x: &S, y: &S, rel: &S, extra_scale: &S) -> bool {
    let scale = max_s(cmp_scale(x, y), extra_scale.clone());
    (x.clone() - y.clone()).abs() <= rel.clone() * scale
}

pub fn eq_tol<S: Scalar>(x: &S, y: &S, rel: &S) -> bool {
    eq_tol_scaled(x, y, rel, &S::one())
}
