//! Serializable output records. Field order is fixed by the struct
//! definitions, so parsing an emitted JSON line and re-serializing it
//! reproduces the same bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use umbra_core::identities::{IdentityReport, Param};
use umbra_core::{MultiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberRecord {
    pub kind: String,
    pub method: String,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    /// Symbolic results are multiplied by `a1...an`.
    pub cleared: bool,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialRecord {
    pub kind: String,
    pub j: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub norlund: Option<usize>,
    pub cleared: bool,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub kind: String,
    pub table: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    List(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotCheckRecord {
    pub a: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: String,
    pub params: BTreeMap<String, ParamValue>,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub spot_checks: Vec<SpotCheckRecord>,
}

pub fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl From<&IdentityReport> for ReportRecord {
    fn from(r: &IdentityReport) -> Self {
        let params = r
            .params
            .iter()
            .map(|(k, v)| {
                let v = match v {
                    Param::Int(i) => ParamValue::Int(*i),
                    Param::Rationals(list) => ParamValue::List(rationals(list)),
                };
                (k.clone(), v)
            })
            .collect();
        ReportRecord {
            identity: r.id.clone(),
            params,
            passed: r.passed,
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            witness: r.witness.as_ref().map(|w| WitnessRecord {
                monomial: format!("{:?}", w.monomial),
                lhs: w.lhs.to_string(),
                rhs: w.rhs.to_string(),
            }),
            value: r.value.as_ref().map(MultiPoly::to_string),
            spot_checks: r
                .spot_checks
                .iter()
                .map(|s| SpotCheckRecord {
                    a: rationals(&s.a),
                    passed: s.passed,
                })
                .collect(),
        }
    }
}

impl ReportRecord {
    pub fn all_passed(&self) -> bool {
        self.passed && self.spot_checks.iter().all(|s| s.passed)
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                ParamValue::Int(i) => format!("{k}={i}"),
                ParamValue::List(l) => format!("{k}=[{}]", l.join(" ")),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}
