use thiserror::Error;

/// Errors surfaced by the engine. Indices are 1-based, matching how cases
/// are reported to users.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChebError {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("sequence too short: length {0}, need at least 2")]
    TooShort(usize),
    #[error("non-finite input at position {0}")]
    NonFiniteInput(usize),
    #[error("total weight is zero (or below the float zero floor)")]
    ZeroTotalWeight,
    #[error("prefix weight sum P_{0} is zero")]
    ZeroPrefixSum(usize),
    #[error("tail weight sum Pbar_{0} is zero")]
    ZeroTailSum(usize),
    #[error("prefix weight sum P_{0} is not positive")]
    NonPositivePrefixSum(usize),
    #[error("bad summation range {from}..{to} for length {len}")]
    BadRange { from: usize, to: usize, len: usize },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("x is not a member of the perturbation class of (a, b)")]
    NotAMember,
    #[error("rejection budget exhausted after {0} attempts")]
    RejectionBudgetExhausted(u64),
    #[error("enumeration size {size} exceeds cap {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("unknown property id: {0}")]
    UnknownProperty(String),
    #[error("invalid decimal literal: {0:?}")]
    BadDecimal(String),
}

pub type Result<T> = std::result::Result<T, ChebError>;
