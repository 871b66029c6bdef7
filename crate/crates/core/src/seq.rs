//! Sequence and weight types plus the prefix/tail aggregate table.

use crate::error::{ChebError, Result};
use crate::scalar::{max_s, min_s, Scalar};

/// A finite ordered sequence of real numbers, length >= 2, all entries
/// finite.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSeq<S: Scalar> {
    values: Vec<S>,
}

impl<S: Scalar> RealSeq<S> {
    pub fn new(values: Vec<S>) -> Result<Self> {
        if values.len() < 2 {
            return Err(ChebError::TooShort(values.len()));
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite_val() {
                return Err(ChebError::NonFiniteInput(i + 1));
            }
        }
        Ok(Self { values })
    }

    /// Constant sequence (c, ..., c) of length n.
    pub fn constant(c: S, n: usize) -> Result<Self> {
        Self::new(vec![c; n])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    /// Forward differences (v_2 - v_1, ..., v_n - v_{n-1}), length n - 1.
    pub fn deltas(&self) -> Vec<S> {
        self.values
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect()
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self {
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Entrywise absolute value.
    pub fn abs(&self) -> Self {
        self.map(|v| v.abs())
    }

    /// Entrywise max with the constant k.
    pub fn truncate_above(&self, k: &S) -> Self {
        self.map(|v| max_s(v.clone(), k.clone()))
    }

    /// Entrywise min with the constant k.
    pub fn truncate_below(&self, k: &S) -> Self {
        self.map(|v| min_s(v.clone(), k.clone()))
    }

    /// Positive part: entrywise max with 0.
    pub fn plus_part(&self) -> Self {
        self.truncate_above(&S::zero())
    }

    /// Negative part: entrywise min with 0.
    pub fn minus_part(&self) -> Self {
        self.truncate_below(&S::zero())
    }

    pub fn negate(&self) -> Self {
        self.map(|v| -v.clone())
    }

    pub fn add_const(&self, c: &S) -> Self {
        self.map(|v| v.clone() + c.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_len(self.len(), other.len())?;
        Ok(Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|v| v.clone() * c.clone())
    }
}

pub fn check_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(ChebError::LengthMismatch(a, b));
    }
    Ok(())
}

/// Weight regime, checked in priority order; the first match is stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Regime {
    AllPositive,
    NonnegativePositiveTotal,
    PartialSumBounded,
    GeneralReal,
}

/// A weight sequence with its cached sign / partial-sum regime.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSeq<S: Scalar> {
    values: Vec<S>,
    regime: Regime,
}

impl<S: Scalar> WeightSeq<S> {
    pub fn new(values: Vec<S>) -> Result<Self> {
        if values.len() < 2 {
            return Err(ChebError::TooShort(values.len()));
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite_val() {
                return Err(ChebError::NonFiniteInput(i + 1));
            }
        }
        let regime = classify_regime(&values);
        Ok(Self { values, regime })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// Total weight P_n.
    pub fn total(&self) -> S {
        self.values
            .iter()
            .fold(S::zero(), |acc, v| acc + v.clone())
    }

    /// Errors with ZeroTotalWeight when |P_n| is at or below the float
    /// floor 1e-12 * max|p_i| * n (exact zero test in rational mode).
    pub fn checked_total(&self) -> Result<S> {
        let total = self.total();
        let max_abs = self
            .values
            .iter()
            .fold(S::zero(), |acc, v| max_s(acc, v.abs()));
        let floor = S::zero_floor() * max_abs * S::from_i64(self.len() as i64);
        if total.abs() <= floor {
            return Err(ChebError::ZeroTotalWeight);
        }
        Ok(total)
    }
}

fn classify_regime<S: Scalar>(values: &[S]) -> Regime {
    let zero = S::zero();
    if values.iter().all(|v| *v > zero) {
        return Regime::AllPositive;
    }
    let total = values.iter().fold(S::zero(), |acc, v| acc + v.clone());
    if values.iter().all(|v| *v >= zero) && total > zero {
        return Regime::NonnegativePositiveTotal;
    }
    let mut prefix = S::zero();
    let mut bounded = true;
    for v in &values[..values.len() - 1] {
        prefix = prefix + v.clone();
        if prefix < zero || prefix > total {
            bounded = false;
            break;
        }
    }
    if bounded {
        Regime::PartialSumBounded
    } else {
        Regime::GeneralReal
    }
}

/// All prefix/tail aggregates for one (p, a, b) triple:
/// P_i, Pbar_i = P_n - P_i, A_i = sum of p_k a_k over k <= i,
/// Abar_i = A_n - A_i, and B_i = sum of p_k b_k over k <= i.
#[derive(Debug, Clone, PartialEq)]
pub struct PrefixTable<S: Scalar> {
    pub p: Vec<S>,
    pub pbar: Vec<S>,
    pub a: Vec<S>,
    pub abar: Vec<S>,
    pub b: Vec<S>,
}

impl<S: Scalar> PrefixTable<S> {
    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn p_total(&self) -> S {
        self.p[self.p.len() - 1].clone()
    }

    pub fn a_total(&self) -> S {
        self.a[self.a.len() - 1].clone()
    }

    pub fn b_total(&self) -> S {
        self.b[self.b.len() - 1].clone()
    }
}
