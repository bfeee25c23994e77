use thiserror::Error;

use crate::umbral::SymbolKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("multinomial parts sum to {sum}, expected {k}")]
    MultinomialMismatch { k: u64, sum: u64 },
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term is not an invertible scalar")]
    NotInvertible,
    #[error("no moments available for {0:?} symbols")]
    UnsupportedSymbol(SymbolKind),
    #[error("cannot differentiate with respect to an umbral symbol")]
    DifferentiateSymbol,
    #[error("parameter a{index} is zero")]
    ZeroParameter { index: usize },
    #[error("A = a1 + ... + an is zero")]
    ZeroParameterSum,
    #[error("weights are not palindromic (alpha_{j} != alpha_{mirror})")]
    NotPalindromic { j: usize, mirror: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error: {0}")]
    Parse(String),
}
