//! Weighted Chebyshev functional: evaluation, hypothesis classification,
//! refinements and lower bounds, with an exact rational oracle and a
//! seeded verification campaign runner.
//!
//! The crate has two arithmetic instantiations of one generic engine:
//! `f64` (float mode, tolerance-banded comparisons) and arbitrary-
//! precision rationals (exact mode, where every comparison is exact).
//! The [`oracle`] module is an independent hand-written exact path used
//! to cross-check both.

pub mod bounds;
pub mod campaign;
pub mod case;
pub mod classifiers;
pub mod decimal;
pub mod error;
pub mod exec;
pub mod functional;
pub mod generators;
pub mod oracle;
pub mod property;
pub mod scalar;
pub mod seq;

pub use bounds::{BoundKind, BoundReport, Sign};
pub use case::{Case, CaseFile};
pub use classifiers::{ConditionProfile, Direction, Tri};
pub use error::{ChebError, Result};
pub use exec::Exec;
pub use property::PropertyId;
pub use scalar::{Rat, Scalar};
pub use seq::{RealSeq, Regime, WeightSeq};
