use std::collections::HashMap;

use super::moments::MomentProvider;
use super::symbol::{Letter, UmbralMonomial, UmbralPoly, UmbralSymbol};
use crate::algebra::{Monomial, MonomialLike, MultiPoly, Rational};
use crate::error::{Error, Result};

/// Expands `(constant + sum_i c_i S_i)^k` into canonical form.
///
/// The symbols need not be distinct; a symbol listed twice has its
/// coefficients combined, since it is one formal letter.
pub fn expand_linear_power(
    constant: &MultiPoly,
    weighted_symbols: &[(MultiPoly, UmbralSymbol)],
    k: u32,
) -> UmbralPoly {
    let mut linear = UmbralPoly::from_multi(constant);
    for (c, s) in weighted_symbols {
        let sym = UmbralMonomial::symbol(*s, 1);
        for (m, v) in c.terms() {
            linear.add_term(sym.mul(&UmbralMonomial::ordinary(m.clone())), v.clone());
        }
    }
    let mut acc = UmbralPoly::one();
    for _ in 0..k {
        acc = &acc * &linear;
    }
    acc
}

/// The evaluation map: every symbol power `S^j` becomes the provider's
/// moment `m_j`, moments of distinct symbols multiply, and ordinary
/// factors pass through.
pub fn eval(p: &UmbralPoly, provider: &dyn MomentProvider) -> Result<MultiPoly> {
    let mut cache: HashMap<(UmbralSymbol, u32), Rational> = HashMap::new();
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let mut weight = c.clone();
        for &(s, e) in m.symbols() {
            let moment = match cache.get(&(s, e)) {
                Some(v) => v.clone(),
                None => {
                    let v = provider
                        .moment(s.kind, e)
                        .ok_or(Error::UnsupportedSymbol(s.kind))?;
                    cache.insert((s, e), v.clone());
                    v
                }
            };
            weight *= moment;
        }
        out.add_term(m.ordinary_part().clone(), weight);
    }
    Ok(out)
}

/// Formal partial derivative in an ordinary indeterminate; umbral symbols
/// are constants. Differentiating by a symbol is an error.
pub fn umbral_derivative(p: &UmbralPoly, var: impl Into<Letter>) -> Result<UmbralPoly> {
    let v = match var.into() {
        Letter::Var(v) => v,
        Letter::Symbol(_) => return Err(Error::DifferentiateSymbol),
    };
    let mut out = UmbralPoly::zero();
    for (m, c) in p.terms() {
        let (rest, e) = m.ordinary_part().split_off(v);
        if e > 0 {
            let ord = rest.mul(&Monomial::power(v, e - 1));
            out.add_term(m.with_ordinary(ord), c * Rational::from_integer(e.into()));
        }
    }
    Ok(out)
}

/// `j`-fold derivative.
pub fn umbral_derivative_n(p: &UmbralPoly, var: impl Into<Letter>, j: u32) -> Result<UmbralPoly> {
    let var = var.into();
    let mut out = p.clone();
    for _ in 0..j {
        if out.is_zero() {
            break;
        }
        out = umbral_derivative(&out, var)?;
    }
    Ok(out)
}

/// `eval((constant + sum c_i S_i)^k)`, the common composite.
pub fn eval_linear_power(
    constant: &MultiPoly,
    weighted_symbols: &[(MultiPoly, UmbralSymbol)],
    k: u32,
    provider: &dyn MomentProvider,
) -> Result<MultiPoly> {
    if k == 0 {
        return Ok(MultiPoly::one());
    }
    eval(
        &expand_linear_power(constant, weighted_symbols, k),
        provider,
    )
}
