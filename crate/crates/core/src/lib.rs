//! Exact symbolic computation with umbral symbols: Bernoulli,
//! Bernoulli-Barnes and Nörlund numbers and polynomials, and checkers for
//! identities relating them.

pub mod algebra;
pub mod barnes;
mod error;
pub mod identities;
pub mod umbral;

pub use algebra::{Monomial, MultiPoly, Rational, TruncatedSeries, Var};
pub use barnes::{BarnesContext, DualSequence};
pub use error::{Error, Result};
pub use umbral::{SymbolKind, UmbralPoly, UmbralSymbol};
