//! Canonical case representation and its on-disk JSON form.
//!
//! A case carries exact rational values; the file form serializes every
//! number as a string (decimal, or exact fraction when the value is not
//! a finite decimal) so that a persisted case re-enters the exact oracle
//! without loss.

use crate::decimal::{format_list, format_number, parse_list, parse_number};
use crate::error::{ChebError, Result};
use crate::scalar::{Rat, Scalar};
use crate::seq::{RealSeq, WeightSeq};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub p: Vec<Rat>,
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
    pub k: Option<Rat>,
    pub x: Option<Vec<Rat>>,
    pub label: Option<String>,
}

impl Case {
    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.p.len() < 2 {
            return Err(ChebError::TooShort(self.p.len()));
        }
        if self.a.len() != self.p.len() {
            return Err(ChebError::LengthMismatch(self.p.len(), self.a.len()));
        }
        if self.b.len() != self.p.len() {
            return Err(ChebError::LengthMismatch(self.p.len(), self.b.len()));
        }
        if let Some(x) = &self.x {
            if x.len() != self.p.len() {
                return Err(ChebError::LengthMismatch(self.p.len(), x.len()));
            }
        }
        Ok(())
    }

    pub fn weights<S: Scalar>(&self) -> Result<WeightSeq<S>> {
        WeightSeq::new(self.p.iter().map(S::from_rat).collect())
    }

    pub fn seq_a<S: Scalar>(&self) -> Result<RealSeq<S>> {
        RealSeq::new(self.a.iter().map(S::from_rat).collect())
    }

    pub fn seq_b<S: Scalar>(&self) -> Result<RealSeq<S>> {
        RealSeq::new(self.b.iter().map(S::from_rat).collect())
    }

    pub fn seq_x<S: Scalar>(&self) -> Option<Result<RealSeq<S>>> {
        self.x
            .as_ref()
            .map(|x| RealSeq::new(x.iter().map(S::from_rat).collect()))
    }

    pub fn scalar_k<S: Scalar>(&self) -> Option<S> {
        self.k.as_ref().map(|k| S::from_rat(k))
    }

    pub fn to_file(&self) -> CaseFile {
        CaseFile {
            p: format_list(&self.p),
            a: format_list(&self.a),
            b: format_list(&self.b),
            k: self.k.as_ref().map(format_number),
            x: self.x.as_ref().map(|x| format_list(x)),
            label: self.label.clone(),
        }
    }
}

/// On-disk form: numbers as exact strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFile {
    pub p: Vec<String>,
    pub a: Vec<String>,
    pub b: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl CaseFile {
    pub fn parse(&self) -> Result<Case> {
        let case = Case {
            p: parse_list(&self.p)?,
            a: parse_list(&self.a)?,
            b: parse_list(&self.b)?,
            k: self.k.as_deref().map(parse_number).transpose()?,
            x: self.x.as_deref().map(parse_list).transpose()?,
            label: self.label.clone(),
        };
        case.validate()?;
        Ok(case)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| ChebError::BadDecimal(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("case files always serialize")
    }
}
