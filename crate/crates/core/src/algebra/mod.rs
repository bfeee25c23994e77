//! Exact scalars, sparse multivariate polynomials and truncated series.

mod monomial;
mod poly;
mod rational;
mod series;

pub(crate) use monomial::write_latex_power;
pub use monomial::{Monomial, MonomialLike, Var};
pub use poly::{poly_substitute, DivMonomial, MultiPoly, Poly};
pub use rational::{
    binomial, binomial_signed, factorial, factorial_rat, int, inv_factorial, multinomial,
    parse_rational, rat, rat_arith, rational_latex, sign, RatOp, Rational,
};
pub use series::{series_exp_linear, series_inv, series_mul, TruncatedSeries};
