use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::frame::{subsets, Frame};
use super::report::{IdentityReport, Param, Params, SpotCheck};
use crate::algebra::{
    binomial, binomial_signed, factorial_rat, int, inv_factorial, poly_substitute, rat, sign,
    Monomial, MultiPoly, Rational, Var,
};
use crate::error::{Error, Result};
use crate::umbral::{
    eval, expand_linear_power, umbral_derivative_n, MomentProvider, StandardMoments, UmbralSymbol,
};

/// Weights `alpha_0, ..., alpha_n` with `alpha_{n-j} = alpha_j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PalindromicWeights {
    alpha: Vec<Rational>,
}

impl PalindromicWeights {
    pub fn new(alpha: Vec<Rational>) -> Result<Self> {
        if alpha.len() < 2 {
            return Err(Error::InvalidParameters(
                "need weights alpha_0..alpha_n with n >= 1".into(),
            ));
        }
        let n = alpha.len() - 1;
        for j in 0..=n / 2 {
            if alpha[j] != alpha[n - j] {
                return Err(Error::NotPalindromic { j, mirror: n - j });
            }
        }
        Ok(PalindromicWeights { alpha })
    }

    pub fn ones(n: usize) -> Self {
        PalindromicWeights {
            alpha: vec![Rational::one(); n + 1],
        }
    }

    /// `alpha_j = C(n, j)`.
    pub fn binomial(n: usize) -> Self {
        PalindromicWeights {
            alpha: (0..=n).map(|j| binomial(n as u64, j as i64)).collect(),
        }
    }

    /// `alpha_j = C(n-4, j-2)` for `2 <= j <= n-2`, zero otherwise; `n >= 4`.
    /// With odd `f = x^m/m!` this family collapses to the subset sum of
    /// [`Case::Main`] multiplied by `|a|`.
    pub fn main_family(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidParameters(
                "main weight family needs n >= 4".into(),
            ));
        }
        let alpha = (0..=n as i64)
            .map(|j| {
                if (2..=n as i64 - 2).contains(&j) {
                    binomial(n as u64 - 4, j - 2)
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Ok(PalindromicWeights { alpha })
    }

    pub fn n(&self) -> usize {
        self.alpha.len() - 1
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }
}

/// One identity instance. Field `n` is always the number of parameters
/// `a1..an`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    Difference { m: u32, n: usize },
    Reflection { m: u32, n: usize },
    GeneralExpansion { m: u32, n: usize },
    ShiftNegation { m: u32, n: usize },
    UniformFtc { m: u32 },
    MultiUniform { m: u32, n: usize },
    SelfDual { len: u32, n: usize },
    Symmetry1 { l: u32, m: u32, n: usize },
    Symmetry2 { l: u32, m: u32, n: usize },
    OddRecurrence { m: u32, n: usize },
    EvenRecurrence { m: u32, n: usize },
    Main { m: u32, n: usize },
    Palindromic { weights: PalindromicWeights, m: u32 },
    Norlund { r: u32, p: u32 },
    NorlundShifted { r: u32, p: u32 },
}

/// Every registered identity id, in report order.
pub const IDENTITY_IDS: &[&str] = &[
    "difference_formula",
    "even_recurrence",
    "general_expansion",
    "main_identity",
    "multi_uniform_difference",
    "norlund_recurrence",
    "norlund_recurrence_shifted",
    "odd_recurrence",
    "palindromic_general",
    "reflection",
    "self_dual",
    "shift_negation",
    "symmetry_1",
    "symmetry_2",
    "uniform_ftc",
];

impl Case {
    pub fn id(&self) -> &'static str {
        match self {
            Case::Difference { .. } => "difference_formula",
            Case::Reflection { .. } => "reflection",
            Case::GeneralExpansion { .. } => "general_expansion",
            Case::ShiftNegation { .. } => "shift_negation",
            Case::UniformFtc { .. } => "uniform_ftc",
            Case::MultiUniform { .. } => "multi_uniform_difference",
            Case::SelfDual { .. } => "self_dual",
            Case::Symmetry1 { .. } => "symmetry_1",
            Case::Symmetry2 { .. } => "symmetry_2",
            Case::OddRecurrence { .. } => "odd_recurrence",
            Case::EvenRecurrence { .. } => "even_recurrence",
            Case::Main { .. } => "main_identity",
            Case::Palindromic { .. } => "palindromic_general",
            Case::Norlund { .. } => "norlund_recurrence",
            Case::NorlundShifted { .. } => "norlund_recurrence_shifted",
        }
    }

    pub fn params(&self) -> Params {
        let int = |v: u32| Param::Int(v as i64);
        let size = |v: usize| Param::Int(v as i64);
        let pairs: Vec<(&str, Param)> = match self {
            Case::Difference { m, n }
            | Case::Reflection { m, n }
            | Case::GeneralExpansion { m, n }
            | Case::ShiftNegation { m, n }
            | Case::MultiUniform { m, n }
            | Case::OddRecurrence { m, n }
            | Case::EvenRecurrence { m, n }
            | Case::Main { m, n } => vec![("m", int(*m)), ("n", size(*n))],
            Case::UniformFtc { m } => vec![("m", int(*m))],
            Case::SelfDual { len, n } => vec![("len", int(*len)), ("n", size(*n))],
            Case::Symmetry1 { l, m, n } | Case::Symmetry2 { l, m, n } => {
                vec![("l", int(*l)), ("m", int(*m)), ("n", size(*n))]
            }
            Case::Palindromic { weights, m } => vec![
                ("m", int(*m)),
                ("n", size(weights.n())),
                ("weights", Param::Rationals(weights.alpha.clone())),
            ],
            Case::Norlund { r, p } | Case::NorlundShifted { r, p } => {
                vec![("p", int(*p)), ("r", int(*r))]
            }
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    /// Number of parameters `a_i` the identity quantifies over.
    pub fn arity(&self) -> usize {
        match self {
            Case::Difference { n, .. }
            | Case::Reflection { n, .. }
            | Case::GeneralExpansion { n, .. }
            | Case::ShiftNegation { n, .. }
            | Case::MultiUniform { n, .. }
            | Case::SelfDual { n, .. }
            | Case::Symmetry1 { n, .. }
            | Case::Symmetry2 { n, .. }
            | Case::OddRecurrence { n, .. }
            | Case::EvenRecurrence { n, .. }
            | Case::Main { n, .. } => *n,
            Case::UniformFtc { .. } => 1,
            Case::Palindromic { weights, .. } => weights.n(),
            Case::Norlund { .. } | Case::NorlundShifted { .. } => 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameters(format!("{}: {msg}", self.id())));
        let n = self.arity();
        let needs_params = !matches!(self, Case::Norlund { .. } | Case::NorlundShifted { .. });
        if needs_params && n == 0 {
            return bad("n must be at least 1");
        }
        if n > 16 {
            return bad("n must be at most 16");
        }
        match self {
            Case::EvenRecurrence { m: 0, .. } => bad("m must be at least 1"),
            Case::Main { m, n } if m % 2 == 0 || *n < 3 => bad("m must be odd and n at least 3"),
            Case::Palindromic { m, .. } if m % 2 == 0 => bad("m must be odd"),
            Case::Norlund { r, p } | Case::NorlundShifted { r, p } if *p == 0 || r >= p => {
                bad("need 0 <= r <= p-1")
            }
            _ => Ok(()),
        }
    }
}

/// Both sides of one instance in the given frame.
fn sides(case: &Case, f: &Frame) -> Result<(MultiPoly, MultiPoly)> {
    let x = MultiPoly::x();
    let neg_x = -&x;
    let zero = MultiPoly::zero();
    let full = f.full();
    let n = f.n() as i64;
    let out = match *case {
        Case::Difference { m, .. } => {
            let m_i = m as i64;
            let lhs = f.bb(m_i, full, &neg_x).scale(&sign(m as u64)) - f.bb(m_i, full, &x);
            let mut rhs = MultiPoly::zero();
            for set in subsets(f.n()).filter(|&s| s != full) {
                let order = m_i - n + set.count_ones() as i64;
                rhs += &f.bb(order, set, &x).scale(&inv_factorial(order));
            }
            (lhs, rhs.scale(&factorial_rat(m as usize)))
        }
        Case::Reflection { m, .. } => {
            let shifted = &x + &f.a_sum();
            let lhs = f.bb(m as i64, full, &shifted);
            let rhs = f.bb(m as i64, full, &neg_x).scale(&sign(m as u64));
            (lhs, rhs)
        }
        Case::GeneralExpansion { m, .. } => {
            // f(y) = y^m/m!, derivatives taken on the umbral expansion.
            let lhs = f.eval_power(&x, &f.symbols(full, true), m);
            let mut rhs = MultiPoly::zero();
            for set in subsets(f.n()) {
                let order = (n - set.count_ones() as i64) as u32;
                let expanded = expand_linear_power(&x, &f.symbols(set, false), m);
                let derived = umbral_derivative_n(&expanded, Var::X, order)?;
                let value = eval(&derived, f.provider())?;
                rhs += &(&value * &f.product(full & !set));
            }
            let inv = inv_factorial(m as i64);
            (lhs.scale(&inv), rhs.scale(&inv))
        }
        Case::ShiftNegation { m, .. } => {
            let shifted = &x + &f.a_sum();
            (
                f.eval_power(&shifted, &f.symbols(full, false), m),
                f.eval_power(&x, &f.symbols(full, true), m),
            )
        }
        Case::UniformFtc { m } => {
            let a = f.a(0);
            let lhs = (&x + &a).pow(m) - x.pow(m);
            let expanded = expand_linear_power(&x, &[(a.clone(), UmbralSymbol::uniform(1))], m);
            let rhs = &a * &eval(&umbral_derivative_n(&expanded, Var::X, 1)?, f.provider())?;
            (lhs, rhs)
        }
        Case::MultiUniform { m, .. } => {
            let mut lhs = x.pow(m);
            for i in 0..f.n() {
                let shift = BTreeMap::from([(Var::X, &x + &f.a(i))]);
                lhs = poly_substitute(&lhs, &shift) - lhs;
            }
            let uniforms: Vec<_> = (0..f.n())
                .map(|i| (f.a(i), UmbralSymbol::uniform(i as u32 + 1)))
                .collect();
            let expanded = expand_linear_power(&x, &uniforms, m);
            let derived = umbral_derivative_n(&expanded, Var::X, f.n() as u32)?;
            let rhs = &f.product(full) * &eval(&derived, f.provider())?;
            (lhs, rhs)
        }
        Case::SelfDual { len, .. } => {
            // Entry j is tagged with x^j so one report carries every j.
            // Cleared: sum_k C(j,k) A^{j-k} P_k = (-1)^j P_j.
            // Numeric: p*_j = p_j with p_k = (-1)^k A^{-k} B_k(a).
            let mut lhs = MultiPoly::zero();
            let mut rhs = MultiPoly::zero();
            for j in 0..=len {
                let clear = if f.is_cleared() { j } else { 0 };
                let mut dual = MultiPoly::zero();
                for k in 0..=j {
                    let p_k = &f.a_pow(-(k as i64), clear)? * &f.bb(k as i64, full, &zero);
                    let p_k = p_k.scale(&sign(k as u64));
                    dual += &p_k.scale(&(binomial(j as u64, k as i64) * sign(k as u64)));
                }
                let p_j = (&f.a_pow(-(j as i64), clear)? * &f.bb(j as i64, full, &zero))
                    .scale(&sign(j as u64));
                let tag = x.pow(j);
                lhs += &(&dual * &tag);
                rhs += &(&p_j * &tag);
            }
            (lhs, rhs)
        }
        Case::Symmetry1 { l, m, .. } => {
            let mut lhs = MultiPoly::zero();
            for k in 0..=m {
                let w = &f.a_sum().pow(m - k) * &f.bb((l + k) as i64, full, &x);
                lhs += &w.scale(&binomial(m as u64, k as i64));
            }
            let mut rhs = MultiPoly::zero();
            for k in 0..=l {
                let w = &f.a_sum().pow(l - k) * &f.bb((m + k) as i64, full, &neg_x);
                rhs += &w.scale(&binomial(l as u64, k as i64));
            }
            (lhs.scale(&sign(m as u64)), rhs.scale(&sign(l as u64)))
        }
        Case::Symmetry2 { l, m, .. } => {
            // Multiplied through by m + l + 2. The second sum is evaluated
            // at -x; this is the x-derivative of the first symmetry.
            let mut first = MultiPoly::zero();
            for k in 0..=m {
                let c = binomial(m as u64 + 1, k as i64) * int((l + k + 1) as i64);
                let w = &f.a_sum().pow(m + 1 - k) * &f.bb((l + k) as i64, full, &x);
                first += &w.scale(&c);
            }
            let mut second = MultiPoly::zero();
            for k in 0..=l {
                let c = binomial(l as u64 + 1, k as i64) * int((m + k + 1) as i64);
                let w = &f.a_sum().pow(l + 1 - k) * &f.bb((m + k) as i64, full, &neg_x);
                second += &w.scale(&c);
            }
            let lhs = first.scale(&sign(m as u64)) + second.scale(&sign(l as u64));
            let top = (l + m + 1) as i64;
            let rhs = (f.bb(top, full, &x).scale(&sign(m as u64 + 1))
                + f.bb(top, full, &neg_x).scale(&sign(l as u64 + 1)))
            .scale(&int((l + m + 2) as i64));
            (lhs, rhs)
        }
        Case::OddRecurrence { m, .. } => {
            let lhs = f
                .bb(2 * m as i64 + 1, full, &zero)
                .scale(&int(2 * (m as i64 + 1)));
            let mut rhs = MultiPoly::zero();
            for k in 0..=m {
                let c = binomial(m as u64 + 1, k as i64) * int((m + k + 1) as i64);
                let w = &f.a_sum().pow(m + 1 - k) * &f.bb((m + k) as i64, full, &zero);
                rhs -= &w.scale(&c);
            }
            (lhs, rhs)
        }
        Case::EvenRecurrence { m, .. } => {
            // Cleared by A on top of the global |a|.
            let m_i = m as i64;
            let lhs = &f.a_pow(0, 1)? * &f.bb(2 * m_i, full, &zero);
            let mut first = MultiPoly::zero();
            for k in 0..m {
                let c = binomial(m as u64 + 1, k as i64) * int((m + k + 1) as i64);
                let w = &f.a_pow((m - k) as i64, 1)? * &f.bb((m + k) as i64, full, &zero);
                first += &w.scale(&c);
            }
            let first = first.scale(&-rat(1, (m_i + 1) * (2 * m_i + 1)));
            let mut second = MultiPoly::zero();
            for set in subsets(f.n()).filter(|&s| s != full) {
                let order = 2 * m_i + 1 - n + set.count_ones() as i64;
                second += &f.bb(order, set, &zero).scale(&inv_factorial(order));
            }
            let second = &f.a_pow(-1, 1)? * &second.scale(&factorial_rat(2 * m as usize));
            (lhs, first + second)
        }
        Case::Main { m, .. } => {
            let m_i = m as i64;
            let mut lhs = MultiPoly::zero();
            for set in subsets(f.n()) {
                let j = set.count_ones() as i64;
                let order = m_i - n + j;
                let c = binomial_signed(n + j - 4, j - 2) * inv_factorial(order);
                if !c.is_zero() {
                    lhs += &f.bb(order, set, &zero).scale(&c);
                }
            }
            let target = if m == 3 && n == 3 {
                rat(1, 2)
            } else {
                Rational::zero()
            };
            (lhs, f.unit().scale(&target))
        }
        Case::Palindromic { ref weights, m } => {
            let mut lhs = MultiPoly::zero();
            for set in subsets(f.n()) {
                let alpha = &weights.alpha[set.count_ones() as usize];
                if alpha.is_zero() {
                    continue;
                }
                let mut symbols = f.symbols(set, false);
                symbols.extend(f.symbols(full & !set, true));
                lhs += &f.eval_power(&zero, &symbols, m).scale(alpha);
            }
            (lhs.scale(&inv_factorial(m as i64)), MultiPoly::zero())
        }
        Case::Norlund { r, p } => {
            let lhs = norlund(f, r, p + 1, p as i64).scale(&inv_factorial(r as i64));
            let mut rhs = MultiPoly::zero();
            for k in 1..=r + 1 {
                let term = norlund(f, r + 1 - k, p + 1 - k, p as i64 - k as i64)
                    .scale(&(rat(1, k as i64) * inv_factorial((r + 1 - k) as i64)));
                rhs += &term;
            }
            (lhs, rhs)
        }
        Case::NorlundShifted { r, p } => {
            let lhs = (norlund(f, r, p + 1, p as i64) - norlund(f, r, p, p as i64 - 1))
                .scale(&inv_factorial(r as i64));
            let mut rhs = MultiPoly::zero();
            for k in 1..=r {
                let term = norlund(f, r - k, p - k, p as i64 - 1 - k as i64)
                    .scale(&(rat(1, k as i64 + 1) * inv_factorial((r - k) as i64)));
                rhs += &term;
            }
            (lhs, rhs)
        }
    };
    Ok(out)
}

/// `B_j^{(order)}(at)` through `eval((at + B_1 + ... + B_order)^j)`.
fn norlund(f: &Frame, j: u32, order: u32, at: i64) -> MultiPoly {
    let symbols: Vec<_> = (1..=order)
        .map(|i| (MultiPoly::one(), UmbralSymbol::bernoulli(i)))
        .collect();
    f.eval_power(&MultiPoly::constant(int(at)), &symbols, j)
}

/// Runs checkers against a moment provider, with optional seeded numeric
/// spot checks.
pub struct Verifier<'p> {
    provider: &'p dyn MomentProvider,
    seed: u64,
    spot_checks: usize,
}

impl<'p> Verifier<'p> {
    pub fn new(provider: &'p dyn MomentProvider) -> Self {
        Verifier {
            provider,
            seed: 0,
            spot_checks: 3,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn spot_checks(mut self, count: usize) -> Self {
        self.spot_checks = count;
        self
    }

    pub fn check(&self, case: &Case) -> Result<IdentityReport> {
        self.check_stream(case, 0)
    }

    /// Like [`check`](Self::check), drawing spot-check values from RNG
    /// stream `stream` so parallel runs stay reproducible.
    pub fn check_stream(&self, case: &Case, stream: u64) -> Result<IdentityReport> {
        case.validate()?;
        let frame = Frame::cleared(case.arity(), self.provider);
        let (lhs, rhs) = sides(case, &frame)?;
        let mut report = IdentityReport::new(case.id(), case.params(), lhs, rhs);
        if let Case::Main { n, .. } = case {
            report.value = report.lhs.div_term(&full_monomial(*n), &Rational::one());
        }
        if case.arity() > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
            rng.set_stream(stream);
            for _ in 0..self.spot_checks {
                let a = random_parameters(&mut rng, case.arity());
                let frame = Frame::numeric(a.clone(), self.provider);
                let (l, r) = sides(case, &frame)?;
                report.spot_checks.push(SpotCheck { a, passed: l == r });
            }
        }
        Ok(report)
    }
}

/// `a1 a2 ... an`.
fn full_monomial(n: usize) -> Monomial {
    Monomial::from_pairs((1..=n as u32).map(|i| (Var::A(i), 1)))
}

/// Nonzero `p/q` with `1 <= |p|, q <= 9`, redrawn until `A != 0`.
fn random_parameters(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    loop {
        let a: Vec<Rational> = (0..n)
            .map(|_| {
                let p: i64 = rng.random_range(1..=9);
                let p = if rng.random_bool(0.5) { -p } else { p };
                rat(p, rng.random_range(1..=9))
            })
            .collect();
        if !a.iter().sum::<Rational>().is_zero() {
            return a;
        }
    }
}

fn check_standard(case: Case) -> Result<IdentityReport> {
    Verifier::new(&StandardMoments).check(&case)
}

pub fn check_difference_formula(m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::Difference { m, n })
}

pub fn check_reflection(m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::Reflection { m, n })
}

/// With `f(x) = x^m/m!`.
pub fn check_general_expansion(m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::GeneralExpansion { m, n })
}

pub fn check_shift_equals_negation(m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::ShiftNegation { m, n })
}

pub fn check_uniform_ftc(m: u32) -> Result<IdentityReport> {
    check_standard(Case::UniformFtc { m })
}

pub fn check_multi_uniform_difference(m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::MultiUniform { m, n })
}

/// Self-duality of `p_j = (-1)^j A^{-j} B_j(a)` for `j <= len`.
pub fn check_self_dual(len: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::SelfDual { len, n })
}

pub fn check_symmetry_1(l: u32, m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::Symmetry1 { l, m, n })
}

pub fn check_symmetry_2(l: u32, m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::Symmetry2 { l, m, n })
}

pub fn check_odd_recurrence(m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::OddRecurrence { m, n })
}

pub fn check_even_recurrence(m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::EvenRecurrence { m, n })
}

/// The report's `value` is the uncleared subset sum: 1/2 at `m = n = 3`.
pub fn check_main_identity(m: u32, n: usize) -> Result<IdentityReport> {
    check_standard(Case::Main { m, n })
}

pub fn check_palindromic_general(weights: PalindromicWeights, m: u32) -> Result<IdentityReport> {
    check_standard(Case::Palindromic { weights, m })
}

pub fn check_norlund_recurrence(r: u32, p: u32) -> Result<IdentityReport> {
    check_standard(Case::Norlund { r, p })
}

pub fn check_norlund_recurrence_shifted(r: u32, p: u32) -> Result<IdentityReport> {
    check_standard(Case::NorlundShifted { r, p })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn weights_validation() {
        assert!(PalindromicWeights::new(vec![int(1), int(2), int(1)]).is_ok());
        assert_eq!(
            PalindromicWeights::new(vec![int(1), int(2), int(3)]),
            Err(Error::NotPalindromic { j: 0, mirror: 2 })
        );
        assert_eq!(
            PalindromicWeights::main_family(5).unwrap().alpha(),
            &[int(0), int(0), int(1), int(1), int(0), int(0)]
        );
    }

    #[test]
    fn parameter_errors() {
        assert!(check_main_identity(2, 3).is_err());
        assert!(check_main_identity(3, 2).is_err());
        assert!(check_norlund_recurrence(3, 3).is_err());
        assert!(check_even_recurrence(0, 2).is_err());
        assert!(check_palindromic_general(PalindromicWeights::ones(2), 2).is_err());
        assert!(check_reflection(1, 0).is_err());
    }

    #[test]
    fn difference_small_cases() {
        let r = check_difference_formula(0, 1).unwrap();
        assert!(r.passed && r.lhs.is_zero());
        // |a| (B_2(-x) - B_2(x)) = 2 a1 x.
        let r = check_difference_formula(2, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, poly("2*a1*x"));
    }

    #[test]
    fn reflection_and_shift_small_cases() {
        let r = check_reflection(1, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, poly("x + 1/2*a1"));
        let s = check_shift_equals_negation(1, 2).unwrap();
        assert!(s.passed);
        assert_eq!(s.lhs, poly("x + 1/2*a1 + 1/2*a2"));
    }

    #[test]
    fn general_expansion_linear_case() {
        let r = check_general_expansion(1, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, poly("x + 1/2*a1"));
    }

    #[test]
    fn uniform_cases() {
        let r = check_uniform_ftc(2).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, poly("a1^2 + 2*a1*x"));
        assert!(check_uniform_ftc(0).unwrap().lhs.is_zero());
        let r = check_multi_uniform_difference(2, 2).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, poly("2*a1*a2"));
    }

    #[test]
    fn main_identity_values() {
        let r = check_main_identity(3, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.value, Some(MultiPoly::constant(rat(1, 2))));
        let r = check_main_identity(1, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.value, Some(MultiPoly::zero()));
    }

    #[test]
    fn norlund_small_cases() {
        let r = check_norlund_recurrence(1, 2).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, MultiPoly::constant(rat(1, 2)));
        assert!(check_norlund_recurrence(0, 5).unwrap().passed);
        assert!(check_norlund_recurrence_shifted(2, 3).unwrap().passed);
        assert!(r.spot_checks.is_empty());
    }

    #[test]
    fn spot_checks_are_recorded() {
        let r = check_odd_recurrence(2, 3).unwrap();
        assert_eq!(r.spot_checks.len(), 3);
        assert!(r.all_passed());
        let again = check_odd_recurrence(2, 3).unwrap();
        assert_eq!(r, again);
    }
}
