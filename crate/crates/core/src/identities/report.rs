use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Monomial, MultiPoly, Rational};

/// A named parameter of a checked identity instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Param {
    Int(i64),
    Rationals(Vec<Rational>),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Rationals(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

pub type Params = BTreeMap<String, Param>;

/// The largest monomial on which the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub monomial: Monomial,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// One numeric re-check at concrete parameter values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpotCheck {
    pub a: Vec<Rational>,
    pub passed: bool,
}

/// Outcome of checking one identity instance.
///
/// `lhs` and `rhs` are canonical polynomials in `x, a1, ..., an` with
/// denominators cleared. `passed` holds iff they are equal, and `witness`
/// is present iff they are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub passed: bool,
    pub witness: Option<Witness>,
    /// The uncleared value of a side, when the identity asserts one.
    pub value: Option<MultiPoly>,
    pub spot_checks: Vec<SpotCheck>,
}

impl IdentityReport {
    pub fn new(id: &str, params: Params, lhs: MultiPoly, rhs: MultiPoly) -> Self {
        let witness = lhs.first_difference(&rhs).map(|(monomial, l, r)| Witness {
            monomial,
            lhs: l,
            rhs: r,
        });
        IdentityReport {
            id: id.to_string(),
            params,
            passed: witness.is_none(),
            lhs,
            rhs,
            witness,
            value: None,
            spot_checks: Vec::new(),
        }
    }

    /// Symbolic verdict and every numeric spot check agree on success.
    pub fn all_passed(&self) -> bool {
        self.passed && self.spot_checks.iter().all(|s| s.passed)
    }

    pub fn param(&self, key: &str) -> Option<&Param> {
        self.params.get(key)
    }

    /// `id(k=v, ...)`, used in summaries.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{}({})", self.id, parts.join(", "))
    }
}
