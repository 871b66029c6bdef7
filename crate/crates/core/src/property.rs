//! Stable property identifiers shared by the CLI, the campaign runner and
//! the exhaustive enumerator.

use crate::error::{ChebError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum PropertyId {
    /// Sign of T for monotone pairs with nonnegative weights.
    A2,
    /// Sign of T for pairs monotone in mean.
    Biernacki,
    /// Absolute-value refinement max{|T(|a|,b)|, |T(a,|b|)|, |T(|a|,|b|)|}.
    A6,
    /// Truncation split at an arbitrary level k.
    A8,
    /// Positive/negative-part split (k = 0).
    A9,
    /// Chain T >= |T(a+,b)| + |T(a-,b)| >= |T(|a|,b)| >= 0.
    A10,
    /// Sign of T under bounded partial weight sums.
    A11,
    /// Five-element lower bound for last/first-max-in-mean a.
    T21,
    /// Sign of T under the three general-weight clauses.
    T23,
    /// Convex-b lower bound under the mean conditions.
    T31,
    /// Convex-b lower bound under monotone prefix means.
    T35,
    /// One-sided supremum-representation check for class members.
    Sbar,
    /// Agreement of the four evaluation routes.
    IdentityEquiv,
}

impl PropertyId {
    pub const ALL: [PropertyId; 13] = [
        PropertyId::A2,
        PropertyId::Biernacki,
        PropertyId::A6,
        PropertyId::A8,
        PropertyId::A9,
        PropertyId::A10,
        PropertyId::A11,
        PropertyId::T21,
        PropertyId::T23,
        PropertyId::T31,
        PropertyId::T35,
        PropertyId::Sbar,
        PropertyId::IdentityEquiv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::A2 => "a2",
            PropertyId::Biernacki => "biernacki",
            PropertyId::A6 => "a6",
            PropertyId::A8 => "a8",
            PropertyId::A9 => "a9",
            PropertyId::A10 => "a10",
            PropertyId::A11 => "a11",
            PropertyId::T21 => "t21",
            PropertyId::T23 => "t23",
            PropertyId::T31 => "t31",
            PropertyId::T35 => "t35",
            PropertyId::Sbar => "sbar",
            PropertyId::IdentityEquiv => "identity-equiv",
        }
    }
}

impl std::str::FromStr for PropertyId {
    type Err = ChebError;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .iter()
            .copied()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| ChebError::UnknownProperty(s.into()))
    }
}

impl std::fmt::Display for PropertyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}
