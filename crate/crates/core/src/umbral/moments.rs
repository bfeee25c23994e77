//! Moment sequences attached to umbral symbols at evaluation time.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::symbol::SymbolKind;
use crate::algebra::{binomial, rat, Rational};

fn bernoulli_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// The Bernoulli number `B_k` with `B_1 = -1/2`, i.e. the coefficients of
/// `z/(e^z - 1) = sum B_k z^k / k!`.
///
/// Computed from `sum_{j=0}^{k} C(k+1, j) B_j = 0` and memoized in a
/// process-wide table.
pub fn bernoulli_number(k: usize) -> Rational {
    {
        let table = bernoulli_table().read().expect("bernoulli table poisoned");
        if let Some(b) = table.get(k) {
            return b.clone();
        }
    }
    let mut table = bernoulli_table().write().expect("bernoulli table poisoned");
    while table.len() <= k {
        let n = table.len();
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += binomial(n as u64 + 1, j as i64) * b;
            }
        }
        table.push(-acc / Rational::from_integer((n + 1).into()));
    }
    table[k].clone()
}

/// `1/(k+1) = integral_0^1 u^k du`.
pub fn uniform_moment(k: usize) -> Rational {
    rat(1, k as i64 + 1)
}

/// Assigns a moment to each `(symbol kind, power)` pair. `None` means the
/// provider does not cover that kind.
pub trait MomentProvider: Send + Sync {
    fn moment(&self, kind: SymbolKind, k: u32) -> Option<Rational>;
}

/// Bernoulli and uniform moments.
#[derive(Debug, Clone, Copy, Default)]
pub struct StandardMoments;

impl MomentProvider for StandardMoments {
    fn moment(&self, kind: SymbolKind, k: u32) -> Option<Rational> {
        Some(match kind {
            SymbolKind::Bernoulli => bernoulli_number(k as usize),
            SymbolKind::Uniform => uniform_moment(k as usize),
        })
    }
}

/// Bernoulli moments only; uniform symbols are rejected.
#[derive(Debug, Clone, Copy, Default)]
pub struct BernoulliMoments;

impl MomentProvider for BernoulliMoments {
    fn moment(&self, kind: SymbolKind, k: u32) -> Option<Rational> {
        (kind == SymbolKind::Bernoulli).then(|| bernoulli_number(k as usize))
    }
}

/// Wraps another provider and shifts a single moment, for mutation testing
/// of identity checkers.
#[derive(Debug, Clone)]
pub struct PerturbedMoments<P> {
    pub base: P,
    pub kind: SymbolKind,
    pub power: u32,
    pub delta: Rational,
}

impl<P: MomentProvider> MomentProvider for PerturbedMoments<P> {
    fn moment(&self, kind: SymbolKind, k: u32) -> Option<Rational> {
        let m = self.base.moment(kind, k)?;
        if kind == self.kind && k == self.power {
            Some(m + &self.delta)
        } else {
            Some(m)
        }
    }
}
