//! Evaluation frame shared by the checkers.
//!
//! A frame fixes how the parameters `a` are represented. In cleared mode
//! they are indeterminates and every Bernoulli-Barnes value carries the
//! global factor `|a|`; in numeric mode they are rationals and values are
//! exact, with all divisions performed.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{MultiPoly, Rational};
use crate::error::{Error, Result};
use crate::umbral::{eval_linear_power, MomentProvider, UmbralSymbol};

#[derive(Debug, Clone)]
pub(crate) enum Mode {
    Cleared(usize),
    Numeric(Vec<Rational>),
}

pub(crate) struct Frame<'p> {
    mode: Mode,
    provider: &'p dyn MomentProvider,
    cache: RefCell<BTreeMap<(u32, u32, MultiPoly), MultiPoly>>,
}

impl<'p> Frame<'p> {
    pub fn cleared(n: usize, provider: &'p dyn MomentProvider) -> Self {
        Frame {
            mode: Mode::Cleared(n),
            provider,
            cache: RefCell::default(),
        }
    }

    pub fn numeric(a: Vec<Rational>, provider: &'p dyn MomentProvider) -> Self {
        Frame {
            mode: Mode::Numeric(a),
            provider,
            cache: RefCell::default(),
        }
    }

    pub fn is_cleared(&self) -> bool {
        matches!(self.mode, Mode::Cleared(_))
    }

    pub fn provider(&self) -> &dyn MomentProvider {
        self.provider
    }

    pub fn n(&self) -> usize {
        match &self.mode {
            Mode::Cleared(n) => *n,
            Mode::Numeric(a) => a.len(),
        }
    }

    pub fn full(&self) -> u32 {
        (1u32 << self.n()) - 1
    }

    /// `a_{i+1}` for zero-based `i`.
    pub fn a(&self, i: usize) -> MultiPoly {
        match &self.mode {
            Mode::Cleared(_) => MultiPoly::a(i as u32 + 1),
            Mode::Numeric(a) => MultiPoly::constant(a[i].clone()),
        }
    }

    pub fn a_sum(&self) -> MultiPoly {
        (0..self.n()).map(|i| self.a(i)).sum()
    }

    /// `prod_{i in set} a_i`.
    pub fn product(&self, set: u32) -> MultiPoly {
        members(set).fold(MultiPoly::one(), |acc, i| &acc * &self.a(i))
    }

    /// The global clearing factor: `|a|` in cleared mode, 1 otherwise.
    pub fn unit(&self) -> MultiPoly {
        match self.mode {
            Mode::Cleared(_) => self.product(self.full()),
            Mode::Numeric(_) => MultiPoly::one(),
        }
    }

    /// `A^{e + clear}` in cleared mode, `A^e` in numeric mode. The caller
    /// guarantees `e + clear >= 0`; numeric negative powers need `A != 0`.
    pub fn a_pow(&self, e: i64, clear: u32) -> Result<MultiPoly> {
        let a = self.a_sum();
        match self.mode {
            Mode::Cleared(_) => a.try_pow(e + clear as i64),
            Mode::Numeric(_) if e >= 0 => Ok(a.pow(e as u32)),
            Mode::Numeric(_) => {
                let v = a.as_constant().expect("numeric frame");
                if v.is_zero() {
                    return Err(Error::ZeroParameterSum);
                }
                let inv = Rational::one() / v;
                Ok(MultiPoly::constant(num_traits::pow(inv, (-e) as usize)))
            }
        }
    }

    /// `(a.B)_S` as weighted symbols, optionally negated.
    pub fn symbols(&self, set: u32, negate: bool) -> Vec<(MultiPoly, UmbralSymbol)> {
        members(set)
            .map(|i| {
                let w = self.a(i);
                let w = if negate { -w } else { w };
                (w, UmbralSymbol::bernoulli(i as u32 + 1))
            })
            .collect()
    }

    /// `eval((arg + sum_i w_i S_i)^k)` under this frame's moments.
    pub fn eval_power(
        &self,
        arg: &MultiPoly,
        symbols: &[(MultiPoly, UmbralSymbol)],
        k: u32,
    ) -> MultiPoly {
        eval_linear_power(arg, symbols, k, self.provider)
            .expect("checkers only use symbols the provider covers")
    }

    /// `B_j(arg; a_S)` in this frame's normalization: multiplied by `|a|` in
    /// cleared mode. Negative orders give 0; the empty subset gives `arg^j`.
    pub fn bb(&self, j: i64, set: u32, arg: &MultiPoly) -> MultiPoly {
        if j < 0 {
            return MultiPoly::zero();
        }
        let j = j as u32;
        let key = (j, set, arg.clone());
        if let Some(v) = self.cache.borrow().get(&key) {
            return v.clone();
        }
        let raw = if set == 0 {
            arg.pow(j)
        } else {
            self.eval_power(arg, &self.symbols(set, false), j)
        };
        let value = match self.mode {
            // |a| B_j(arg; a_S) = |a|_{S*} eval((arg + (a.B)_S)^j)
            Mode::Cleared(_) => &raw * &self.product(self.full() & !set),
            Mode::Numeric(_) => {
                let p = self.product(set).as_constant().expect("numeric frame");
                raw.scale(&(Rational::one() / p))
            }
        };
        self.cache.borrow_mut().insert(key, value.clone());
        value
    }
}

/// Zero-based members of a bitmask, ascending.
pub(crate) fn members(set: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| set & (1 << i) != 0)
}

/// All subsets of `{0, ..., n-1}` by increasing bitmask.
pub(crate) fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}
