//! Exact rationals and the integer combinatorics built on them.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds `p/q` from machine integers.
///
/// # Panics
/// If `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Unary; the second operand is ignored.
    Neg,
}

/// Applies `op` to `p` and `q`. Division by zero is reported, never panics.
pub fn rat_arith(op: RatOp, p: &Rational, q: &Rational) -> Result<Rational> {
    Ok(match op {
        RatOp::Add => p + q,
        RatOp::Sub => p - q,
        RatOp::Mul => p * q,
        RatOp::Div => {
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            p / q
        }
        RatOp::Neg => -p,
    })
}

/// `(-1)^e` as a rational.
pub fn sign(e: u64) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn factorial_table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

/// `n!`, memoized up to the largest index requested so far.
pub fn factorial(n: usize) -> BigInt {
    {
        let table = factorial_table().read().expect("factorial table poisoned");
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().expect("factorial table poisoned");
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

pub fn factorial_rat(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `1/n!`, extended by zero to negative `n` (the reciprocal gamma function
/// vanishes at non-positive integers).
pub fn inv_factorial(n: i64) -> Rational {
    if n < 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::one(), factorial(n as usize))
    }
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Rational {
    if k < 0 || k as u64 > n {
        return Rational::zero();
    }
    Rational::from_integer(binomial_int(n, k as u64))
}

/// Binomial with a possibly negative top index; zero unless `0 <= k <= n`.
pub fn binomial_signed(n: i64, k: i64) -> Rational {
    if n < 0 {
        Rational::zero()
    } else {
        binomial(n as u64, k)
    }
}

fn binomial_int(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `k! / (m_1! ... m_r!)`; the parts must sum to `k`.
pub fn multinomial(k: u64, parts: &[u64]) -> Result<Rational> {
    let sum: u64 = parts.iter().sum();
    if sum != k {
        return Err(Error::MultinomialMismatch { k, sum });
    }
    let mut den = BigInt::one();
    for &m in parts {
        den *= factorial(m as usize);
    }
    Ok(Rational::new(factorial(k as usize), den))
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// LaTeX for a rational: `\frac{p}{q}` or a bare integer.
pub fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arith_examples() {
        assert_eq!(
            rat_arith(RatOp::Add, &rat(1, 2), &rat(1, 3)).unwrap(),
            rat(5, 6)
        );
        assert_eq!(rat_arith(RatOp::Mul, &int(0), &rat(7, 3)).unwrap(), int(0));
        assert_eq!(
            rat_arith(RatOp::Div, &rat(1, 6), &rat(1, 6)).unwrap(),
            int(1)
        );
        assert_eq!(
            rat_arith(RatOp::Neg, &rat(2, 5), &int(0)).unwrap(),
            rat(-2, 5)
        );
        assert_eq!(
            rat_arith(RatOp::Div, &int(1), &int(0)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn lowest_terms() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(3, 4), int(0));
        assert_eq!(binomial_signed(-1, 0), int(0));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=30u64 {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(3, &[1, 1, 1]).unwrap(), int(6));
        assert_eq!(multinomial(2, &[2, 0]).unwrap(), int(1));
        // 4!/(2!2!) evaluated directly.
        assert_eq!(multinomial(4, &[2, 2]).unwrap(), int(24 / (2 * 2)));
        assert!(matches!(
            multinomial(4, &[1, 1]),
            Err(Error::MultinomialMismatch { k: 4, sum: 2 })
        ));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(20), BigInt::from(2_432_902_008_176_640_000u64));
        assert_eq!(inv_factorial(-1), int(0));
        assert_eq!(inv_factorial(3), rat(1, 6));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_latex(&rat(-5, 6)), "-\\frac{5}{6}");
    }
}
