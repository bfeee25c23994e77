//! Umbral symbols, umbral polynomials and the evaluation map.
//!
//! Sign convention: `B_1 = -1/2`, the value forced by the generating
//! function `z/(e^z - 1)`. Some references use `+1/2` instead.

mod moments;
mod ops;
mod symbol;

pub use moments::{
    bernoulli_number, uniform_moment, BernoulliMoments, MomentProvider, PerturbedMoments,
    StandardMoments,
};
pub use ops::{
    eval, eval_linear_power, expand_linear_power, umbral_derivative, umbral_derivative_n,
};
pub use symbol::{Letter, SymbolKind, UmbralMonomial, UmbralPoly, UmbralSymbol};
