//! Bernoulli-Barnes numbers and polynomials, Nörlund polynomials, and the
//! dual-sequence transform.
//!
//! With `a = (a_1, ..., a_n)`, `|a| = a_1 ... a_n` and `A = a_1 + ... + a_n`,
//! the numbers `B_k(a)` have generating function `prod_j z/(e^{a_j z} - 1)`.
//! Because `B_k(a)` carries a factor `1/|a|`, symbolic results are always
//! returned *cleared*:
//!
//! * `P_k(a) = |a| B_k(a) = eval((a.B)^k)`
//! * `Q_j(x, a) = |a| B_j(x; a) = eval((x + a.B)^j)`
//!
//! which are honest polynomials in `x, a1, ..., an`. Numeric contexts
//! perform the division by `|a|` exactly and return the true values.

use num_traits::{One, Zero};

use crate::algebra::{
    binomial, factorial_rat, multinomial, sign, MultiPoly, Rational, TruncatedSeries,
};
use crate::error::{Error, Result};
use crate::umbral::{bernoulli_number, eval_linear_power, StandardMoments, UmbralSymbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Params {
    /// Indeterminates `a_i` for the listed indices.
    Symbolic(Vec<u32>),
    /// Concrete nonzero values.
    Numeric(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarnesContext {
    params: Params,
}

impl BarnesContext {
    /// Parameters `a1, ..., an` as indeterminates.
    pub fn symbolic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters(
                "need at least one parameter".into(),
            ));
        }
        Ok(BarnesContext {
            params: Params::Symbolic((1..=n as u32).collect()),
        })
    }

    pub fn numeric(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameters(
                "need at least one parameter".into(),
            ));
        }
        if let Some(i) = values.iter().position(Zero::is_zero) {
            return Err(Error::ZeroParameter { index: i + 1 });
        }
        Ok(BarnesContext {
            params: Params::Numeric(values),
        })
    }

    /// `a = (1, ..., 1)` of length `n >= 1`, the Nörlund specialization.
    pub fn ones(n: usize) -> Result<Self> {
        Self::numeric(vec![Rational::one(); n])
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn len(&self) -> usize {
        match &self.params {
            Params::Symbolic(v) => v.len(),
            Params::Numeric(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self.params, Params::Numeric(_))
    }

    /// The parameters as polynomials (indeterminates or constants).
    pub fn weights(&self) -> Vec<MultiPoly> {
        match &self.params {
            Params::Symbolic(v) => v.iter().map(|&i| MultiPoly::a(i)).collect(),
            Params::Numeric(v) => v.iter().cloned().map(MultiPoly::constant).collect(),
        }
    }

    /// `|a| = a_1 ... a_n`.
    pub fn product(&self) -> MultiPoly {
        self.weights()
            .iter()
            .fold(MultiPoly::one(), |acc, w| &acc * w)
    }

    /// `A = a_1 + ... + a_n`.
    pub fn sum(&self) -> MultiPoly {
        self.weights().into_iter().sum()
    }

    /// The weighted symbols `a_i B_i`; symbol indices follow the variable
    /// indices in symbolic mode and positions in numeric mode.
    pub fn weighted_symbols(&self) -> Vec<(MultiPoly, UmbralSymbol)> {
        let indices: Vec<u32> = match &self.params {
            Params::Symbolic(v) => v.clone(),
            Params::Numeric(v) => (1..=v.len() as u32).collect(),
        };
        self.weights()
            .into_iter()
            .zip(indices)
            .map(|(w, i)| (w, UmbralSymbol::bernoulli(i)))
            .collect()
    }

    /// Turns a cleared result into this context's normal form: unchanged in
    /// symbolic mode, divided by `|a|` in numeric mode.
    fn finish(&self, cleared: MultiPoly) -> MultiPoly {
        match &self.params {
            Params::Symbolic(_) => cleared,
            Params::Numeric(v) => {
                let prod: Rational = v.iter().fold(Rational::one(), |acc, a| acc * a);
                cleared.scale(&(Rational::one() / prod))
            }
        }
    }
}

/// Stars-and-bars enumeration of `(m_1, ..., m_parts)` with sum `total`.
pub struct Compositions {
    current: Vec<u32>,
    total: u32,
    done: bool,
}

impl Compositions {
    pub fn new(total: u32, parts: usize) -> Self {
        let mut current = vec![0; parts];
        let done = if parts == 0 {
            total != 0
        } else {
            current[parts - 1] = total;
            false
        };
        Compositions {
            current,
            total,
            done,
        }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        // Advance: find the rightmost position before the last that can take
        // one more unit from the tail.
        self.done = true;
        if n >= 2 {
            for i in (0..n - 1).rev() {
                let used: u32 = self.current[..=i].iter().sum();
                if used < self.total {
                    self.current[i] += 1;
                    for c in &mut self.current[i + 1..] {
                        *c = 0;
                    }
                    let used = used + 1;
                    self.current[n - 1] = self.total - used;
                    self.done = false;
                    break;
                }
            }
        }
        Some(out)
    }
}

/// `B_k(a)` through the umbral representation `(1/|a|) eval((a.B)^k)`.
pub fn bb_number_umbral(k: u32, ctx: &BarnesContext) -> MultiPoly {
    let cleared = eval_linear_power(
        &MultiPoly::zero(),
        &ctx.weighted_symbols(),
        k,
        &StandardMoments,
    )
    .expect("standard moments cover Bernoulli symbols");
    ctx.finish(cleared)
}

/// `B_k(a)` through the multinomial sum over compositions
/// `m_1 + ... + m_n = k` of `k!/(m_1!...m_n!) prod a_i^{m_i - 1} B_{m_i}`,
/// multiplied through by `|a|` so no negative powers appear.
pub fn bb_number_multinomial(k: u32, ctx: &BarnesContext) -> MultiPoly {
    let weights = ctx.weights();
    let mut out = MultiPoly::zero();
    for parts in Compositions::new(k, weights.len()) {
        let bern: Rational = parts
            .iter()
            .map(|&m| bernoulli_number(m as usize))
            .fold(Rational::one(), |acc, b| acc * b);
        if bern.is_zero() {
            continue;
        }
        let parts64: Vec<u64> = parts.iter().map(|&m| m as u64).collect();
        let coeff = multinomial(k as u64, &parts64).expect("composition sums to k") * bern;
        let mut term = MultiPoly::constant(coeff);
        for (w, &m) in weights.iter().zip(&parts) {
            if m > 0 {
                term = &term * &w.pow(m);
            }
        }
        out += &term;
    }
    ctx.finish(out)
}

/// Truncated generating function `prod_j z/(e^{a_j z} - 1)` through `z^N`.
///
/// Each factor is inverted in the unit form `(e^{a z} - 1)/(a z)`, whose
/// constant term is 1; the product of the inverses is `|a|` times the
/// generating function. Symbolic contexts return that cleared series
/// (`[z^k] = P_k(a)/k!`); numeric contexts divide by `|a|`.
pub fn bb_series(ctx: &BarnesContext, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for w in ctx.weights() {
        let inv = TruncatedSeries::exp_difference_unit(&w, order)
            .inv()
            .expect("unit-normalized factor has constant term 1");
        acc = acc.mul(&inv).expect("same order");
    }
    match &ctx.params {
        Params::Symbolic(_) => acc,
        Params::Numeric(_) => {
            let coeffs: Vec<MultiPoly> =
                acc.coeffs().iter().map(|c| ctx.finish(c.clone())).collect();
            TruncatedSeries::from_coeffs(order, coeffs)
        }
    }
}

/// `B_k(a)` (cleared in symbolic mode) read off the series: `k! [z^k]`.
pub fn bb_number_series(k: u32, ctx: &BarnesContext) -> MultiPoly {
    bb_series(ctx, k as usize)
        .coeff(k as usize)
        .scale(&factorial_rat(k as usize))
}

/// `B_j(x; a) = (1/|a|) eval((x + a.B)^j)`; cleared `Q_j(x, a)` in symbolic
/// mode.
pub fn bb_polynomial(j: u32, ctx: &BarnesContext) -> MultiPoly {
    let cleared = eval_linear_power(
        &MultiPoly::x(),
        &ctx.weighted_symbols(),
        j,
        &StandardMoments,
    )
    .expect("standard moments cover Bernoulli symbols");
    ctx.finish(cleared)
}

/// `B_j(x; a) = sum_l C(j, l) B_{j-l}(a) x^l`, the binomial convolution of
/// the multinomial-route numbers. Same normalization as [`bb_polynomial`].
pub fn bb_polynomial_convolution(j: u32, ctx: &BarnesContext) -> MultiPoly {
    (0..=j)
        .map(|l| {
            let number = bb_number_multinomial(j - l, ctx);
            (&number * &MultiPoly::x().pow(l)).scale(&binomial(j as u64, l as i64))
        })
        .sum()
}

/// Nörlund polynomial `B_j^{(n)}(x)`: generating function
/// `e^{xz} z^n/(e^z - 1)^n`. Order `n = 0` gives `x^j`.
pub fn norlund_polynomial(j: u32, n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::x().pow(j);
    }
    bb_polynomial(j, &BarnesContext::ones(n).expect("n >= 1"))
}

/// A sequence indexed from 0 with polynomial (or constant) entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSequence {
    pub entries: Vec<MultiPoly>,
}

impl DualSequence {
    pub fn new(entries: Vec<MultiPoly>) -> Self {
        DualSequence { entries }
    }

    pub fn from_rationals(values: impl IntoIterator<Item = Rational>) -> Self {
        DualSequence {
            entries: values.into_iter().map(MultiPoly::constant).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The dual of this sequence; see [`dual_transform`].
    pub fn dual(&self) -> DualSequence {
        dual_transform(self)
    }

    pub fn is_self_dual(&self) -> bool {
        &self.dual() == self
    }
}

/// `s*_n = sum_{k=0}^{n} C(n, k) (-1)^k s_k`. An involution.
pub fn dual_transform(s: &DualSequence) -> DualSequence {
    let entries = (0..s.len())
        .map(|n| {
            (0..=n)
                .map(|k| s.entries[k].scale(&(binomial(n as u64, k as i64) * sign(k as u64))))
                .sum()
        })
        .collect();
    DualSequence { entries }
}

/// `p_n = (-1)^n A^{-n} B_n(a)` for `n = 0..=N`.
///
/// Numeric contexts require `A != 0` and return exact values. Symbolic
/// contexts return every entry multiplied by the common factor `A^N |a|`,
/// i.e. `(-1)^n A^{N-n} P_n(a)`; scaling by a common factor commutes with
/// the (linear) dual transform, so self-duality is unaffected.
pub fn p_sequence(ctx: &BarnesContext, len: usize) -> Result<DualSequence> {
    let a_sum = ctx.sum();
    let entries = match &ctx.params {
        Params::Numeric(_) => {
            let a = a_sum.as_constant().expect("numeric context");
            if a.is_zero() {
                return Err(Error::ZeroParameterSum);
            }
            (0..=len)
                .map(|n| {
                    let factor = sign(n as u64) / num_traits::pow(a.clone(), n);
                    bb_number_umbral(n as u32, ctx).scale(&factor)
                })
                .collect()
        }
        Params::Symbolic(_) => (0..=len)
            .map(|n| {
                (&a_sum.pow((len - n) as u32) * &bb_number_umbral(n as u32, ctx))
                    .scale(&sign(n as u64))
            })
            .collect(),
    };
    Ok(DualSequence { entries })
}
