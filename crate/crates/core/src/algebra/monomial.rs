//! Indeterminates and exponent vectors.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// An ordinary commuting indeterminate: `x` or one of the parameters `a_i`
/// (`i >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    A(u32),
}

impl Var {
    /// Position in a dense exponent vector: `x` is slot 0, `a_i` slot `i`.
    pub fn slot(self) -> usize {
        match self {
            Var::X => 0,
            Var::A(i) => i as usize,
        }
    }

    fn from_slot(slot: usize) -> Var {
        if slot == 0 {
            Var::X
        } else {
            Var::A(slot as u32)
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => f.write_str("x"),
            Var::A(i) => write!(f, "a{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        match s {
            "x" => Ok(Var::X),
            _ => s
                .strip_prefix('a')
                .and_then(|d| d.parse::<u32>().ok())
                .filter(|&i| i >= 1)
                .map(Var::A)
                .ok_or_else(|| Error::Parse(format!("unknown indeterminate {s:?}"))),
        }
    }
}

/// Behaviour shared by the monomials of [`MultiPoly`](super::MultiPoly) and
/// [`UmbralPoly`](crate::umbral::UmbralPoly).
///
/// `Ord` must be a total order; polynomials store terms sorted by it and
/// print them in descending order.
pub trait MonomialLike: Clone + Ord + fmt::Debug + Send + Sync {
    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_one(&self) -> bool;
    fn degree(&self) -> u32;
    /// Writes the factors joined by `*`, e.g. `a1^2*x`. Not called on the
    /// unit monomial.
    fn write_factors(&self, out: &mut String);
    fn write_latex(&self, out: &mut String);
}

/// Exponent vector over `x, a1, a2, ...` stored densely by slot with
/// trailing zeros trimmed, so equal monomials have equal representations.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared in the order `x, a1, a2, ...`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 6]>);

impl Monomial {
    pub fn var(v: Var) -> Monomial {
        Monomial::power(v, 1)
    }

    pub fn power(v: Var, e: u32) -> Monomial {
        let mut exps: SmallVec<[u32; 6]> = SmallVec::new();
        if e > 0 {
            exps.resize(v.slot() + 1, 0);
            exps[v.slot()] = e;
        }
        Monomial(exps)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut m = Monomial::default();
        for (v, e) in pairs {
            m = MonomialLike::mul(&m, &Monomial::power(v, e));
        }
        m
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.get(v.slot()).copied().unwrap_or(0)
    }

    /// Nonzero `(variable, exponent)` pairs in slot order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(s, &e)| (Var::from_slot(s), e))
    }

    /// The monomial with `v` removed, and the exponent it had.
    pub fn split_off(&self, v: Var) -> (Monomial, u32) {
        let e = self.exponent(v);
        if e == 0 {
            return (self.clone(), 0);
        }
        let mut rest = self.0.clone();
        rest[v.slot()] = 0;
        trim(&mut rest);
        (Monomial(rest), e)
    }

    /// `self / other` when every exponent of `other` fits.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (i, &e) in other.0.iter().enumerate() {
            out[i] = out[i].checked_sub(e)?;
        }
        trim(&mut out);
        Some(Monomial(out))
    }

    /// Factors in printing order: `a1, a2, ..., x`.
    fn print_order(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        let params = self.factors().filter(|(v, _)| *v != Var::X);
        let x = self.factors().filter(|(v, _)| *v == Var::X);
        params.chain(x)
    }
}

fn trim(exps: &mut SmallVec<[u32; 6]>) {
    while exps.last() == Some(&0) {
        exps.pop();
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut s = String::new();
        self.write_factors(&mut s);
        f.write_str(&s)
    }
}

pub(crate) fn write_latex_power(out: &mut String, base: &str, e: u32) {
    out.push_str(base);
    if e > 1 {
        out.push_str(&format!("^{{{e}}}"));
    }
}

impl MonomialLike for Monomial {
    fn one() -> Self {
        Monomial::default()
    }

    fn mul(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (i, &e) in short.0.iter().enumerate() {
            out[i] += e;
        }
        Monomial(out)
    }

    fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn write_factors(&self, out: &mut String) {
        let start = out.len();
        for (v, e) in self.print_order() {
            if out.len() > start {
                out.push('*');
            }
            out.push_str(&v.to_string());
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }

    fn write_latex(&self, out: &mut String) {
        for (v, e) in self.print_order() {
            let base = match v {
                Var::X => "x".to_string(),
                Var::A(i) => format!("a_{{{i}}}"),
            };
            write_latex_power(out, &base, e);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(Var, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn graded_lex_order() {
        let x2 = m(&[(Var::X, 2)]);
        let xa1 = m(&[(Var::X, 1), (Var::A(1), 1)]);
        let a1sq = m(&[(Var::A(1), 2)]);
        let a1a2 = m(&[(Var::A(1), 1), (Var::A(2), 1)]);
        let x = m(&[(Var::X, 1)]);
        assert!(x2 > xa1 && xa1 > a1sq && a1sq > a1a2);
        assert!(a1a2 > x);
        assert!(x > Monomial::one());
        assert!(m(&[(Var::A(1), 1)]) > m(&[(Var::A(2), 1)]));
    }

    #[test]
    fn trimmed_representation_is_canonical() {
        let p = m(&[(Var::A(3), 1)]);
        let (rest, e) = p.split_off(Var::A(3));
        assert_eq!(e, 1);
        assert_eq!(rest, Monomial::one());
        assert!(rest.is_one());
    }

    #[test]
    fn factor_text() {
        let mut s = String::new();
        m(&[(Var::X, 3), (Var::A(1), 2)]).write_factors(&mut s);
        assert_eq!(s, "a1^2*x^3");
        assert_eq!("a12".parse::<Var>().unwrap(), Var::A(12));
        assert!("a0".parse::<Var>().is_err());
    }

    #[test]
    fn division() {
        let big = m(&[(Var::A(1), 2), (Var::A(2), 1)]);
        let small = m(&[(Var::A(1), 1), (Var::A(2), 1)]);
        assert_eq!(big.checked_div(&small), Some(m(&[(Var::A(1), 1)])));
        assert_eq!(small.checked_div(&big), None);
    }
}
