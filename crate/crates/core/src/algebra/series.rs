//! Truncated power series in `z` with polynomial coefficients.

use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::rational::{inv_factorial, Rational};
use crate::error::{Error, Result};

/// `sum_{k=0}^{N} c_k z^k`, exact through order `N`. Anything past `N` is
/// dropped, never approximated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// Builds a series from the given leading coefficients, padding with
    /// zeros or truncating to `order`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = MultiPoly>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_rationals(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Self::from_coeffs(order, coeffs.into_iter().map(MultiPoly::constant))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse through order `N`. The constant term must be
    /// a nonzero rational; polynomial constant terms are rejected.
    pub fn inv(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NotInvertible)?;
        let inv_c0 = Rational::one() / c0;
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = MultiPoly::constant(inv_c0.clone());
        // b_k = -(1/c0) * sum_{i=1}^{k} a_i b_{k-i}
        for k in 1..=n {
            let mut acc = MultiPoly::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !out.coeffs[k - i].is_zero() {
                    acc += &(&self.coeffs[i] * &out.coeffs[k - i]);
                }
            }
            out.coeffs[k] = acc.scale(&-inv_c0.clone());
        }
        Ok(out)
    }

    /// `e^{cz} = sum c^k z^k / k!`.
    pub fn exp_linear(c: &MultiPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = MultiPoly::one();
        for k in 0..=order {
            coeffs.push(power.scale(&inv_factorial(k as i64)));
            power = &power * c;
        }
        TruncatedSeries { coeffs }
    }

    /// `(e^{cz} - 1) / (cz) = sum c^k z^k / (k+1)!`, the unit-normalized
    /// form of `(e^{cz} - 1)/z`. Its constant term is 1, so it is always
    /// invertible even when `c` is symbolic.
    pub fn exp_difference_unit(c: &MultiPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = MultiPoly::one();
        for k in 0..=order {
            coeffs.push(power.scale(&inv_factorial(k as i64 + 1)));
            power = &power * c;
        }
        TruncatedSeries { coeffs }
    }
}

/// Cauchy product; see [`TruncatedSeries::mul`].
pub fn series_mul(s: &TruncatedSeries, t: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.mul(t)
}

/// Reciprocal series; see [`TruncatedSeries::inv`].
pub fn series_inv(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.inv()
}

pub fn series_exp_linear(c: &MultiPoly, order: usize) -> TruncatedSeries {
    TruncatedSeries::exp_linear(c, order)
}
