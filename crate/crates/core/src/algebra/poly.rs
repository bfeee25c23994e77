//! Sparse polynomials over exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by monomial, with zero coefficients
//! never stored. Two polynomials are equal exactly when their term maps are,
//! which makes identity checking a structural comparison.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialLike, Var};
use super::rational::{parse_rational, rational_latex, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<M: MonomialLike> {
    terms: BTreeMap<M, Rational>,
}

/// Polynomial over `Q` in `x, a1, a2, ...`.
pub type MultiPoly = Poly<Monomial>;

impl<M: MonomialLike> Default for Poly<M> {
    fn default() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: MonomialLike> Poly<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, M::one())
    }

    pub fn term(c: Rational, m: M) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (M, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: M, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &Rational)> {
        self.terms.iter()
    }

    /// Terms in canonical (descending) order, the order used for printing.
    pub fn canonical_terms(&self) -> impl Iterator<Item = (&M, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn into_terms(self) -> BTreeMap<M, Rational> {
        self.terms
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(MonomialLike::degree).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &M, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Power with a signed exponent; negative exponents are rejected.
    pub fn try_pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
        let e = u32::try_from(e)
            .map_err(|_| Error::InvalidParameters(format!("exponent {e} too large")))?;
        Ok(self.pow(e))
    }

    /// Exact division by a single term; `None` if some monomial is not
    /// divisible or the term is zero.
    pub fn div_term(&self, m: &M, c: &Rational) -> Option<Self>
    where
        M: DivMonomial,
    {
        if c.is_zero() {
            return None;
        }
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.checked_div_by(m)?, v / c);
        }
        Some(out)
    }

    /// The largest monomial (in canonical order) on which `self` and `other`
    /// differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(M, Rational, Rational)> {
        let diff = self - other;
        diff.terms.keys().next_back().map(|m| {
            let m = m.clone();
            let (l, r) = (self.coeff(&m), other.coeff(&m));
            (m, l, r)
        })
    }

    /// Canonical LaTeX form with `\frac` coefficients.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.canonical_terms().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            if m.is_one() || !abs.is_one() {
                out.push_str(&rational_latex(&abs));
            }
            if !m.is_one() {
                m.write_latex(&mut out);
            }
        }
        out
    }
}

/// Monomials supporting exact division.
pub trait DivMonomial: Sized {
    fn checked_div_by(&self, other: &Self) -> Option<Self>;
}

impl DivMonomial for Monomial {
    fn checked_div_by(&self, other: &Self) -> Option<Self> {
        self.checked_div(other)
    }
}

impl MultiPoly {
    pub fn var(v: Var) -> MultiPoly {
        Poly::term(Rational::one(), Monomial::var(v))
    }

    pub fn x() -> MultiPoly {
        Self::var(Var::X)
    }

    pub fn a(i: u32) -> MultiPoly {
        Self::var(Var::A(i))
    }

    /// Formal partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let (rest, e) = m.split_off(v);
            if e > 0 {
                let m2 = rest.mul(&Monomial::power(v, e - 1));
                out.add_term(m2, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Value at a point where every indeterminate is bound to a rational.
    pub fn eval_rational(&self, point: &BTreeMap<Var, Rational>) -> Option<Rational> {
        let bindings: BTreeMap<Var, MultiPoly> = point
            .iter()
            .map(|(v, r)| (*v, MultiPoly::constant(r.clone())))
            .collect();
        poly_substitute(self, &bindings).as_constant()
    }
}

/// Substitutes polynomials for indeterminates. Unbound indeterminates stay
/// symbolic; all bindings are applied simultaneously.
pub fn poly_substitute(p: &MultiPoly, bindings: &BTreeMap<Var, MultiPoly>) -> MultiPoly {
    let mut powers: BTreeMap<(Var, u32), MultiPoly> = BTreeMap::new();
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let mut rest = m.clone();
        let mut factor = MultiPoly::one();
        for (v, value) in bindings {
            let (r, e) = rest.split_off(*v);
            rest = r;
            if e > 0 {
                let pw = powers.entry((*v, e)).or_insert_with(|| value.pow(e));
                factor = &factor * &*pw;
            }
        }
        for (fm, fc) in factor.terms() {
            out.add_term(fm.mul(&rest), fc * c);
        }
    }
    out
}

impl<M: MonomialLike> fmt::Display for Poly<M> {
    /// Canonical text: terms in descending graded-lex order joined by
    /// ` + ` / ` - `, each written `coeff*factor*factor` with unit
    /// coefficients omitted, e.g. `5/6*a1^2*x^3 - x + 1/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.canonical_terms().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                m.write_factors(&mut out);
            }
        }
        f.write_str(&out)
    }
}

impl<M: MonomialLike> fmt::Debug for Poly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses the canonical text form (any term order is accepted).
    fn from_str(s: &str) -> Result<MultiPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = MultiPoly::zero();
        // Split into signed terms on top-level " + " / " - " and a leading '-'.
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let next = [" + ", " - "]
                .iter()
                .filter_map(|sep| rest.find(sep).map(|i| (i, *sep)))
                .min();
            let (term, tail) = match next {
                Some((i, sep)) => (&rest[..i], Some((&rest[i + 3..], sep == " - "))),
                None => (rest, None),
            };
            let (m, mut c) = parse_term(term)?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
            match tail {
                Some((t, neg)) => {
                    rest = t;
                    negative = neg;
                }
                None => break,
            }
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<(Monomial, Rational)> {
    let mut coeff = Rational::one();
    let mut mono = Monomial::one();
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            coeff *= parse_rational(factor)?;
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        mono = mono.mul(&Monomial::power(name.parse()?, e));
    }
    Ok((mono, coeff))
}

impl<M: MonomialLike> AddAssign<&Poly<M>> for Poly<M> {
    fn add_assign(&mut self, rhs: &Poly<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<M: MonomialLike> SubAssign<&Poly<M>> for Poly<M> {
    fn sub_assign(&mut self, rhs: &Poly<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<M: MonomialLike> Add for &Poly<M> {
    type Output = Poly<M>;
    fn add(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<M: MonomialLike> Add for Poly<M> {
    type Output = Poly<M>;
    fn add(mut self, rhs: Poly<M>) -> Poly<M> {
        self += &rhs;
        self
    }
}

impl<M: MonomialLike> Sub for &Poly<M> {
    type Output = Poly<M>;
    fn sub(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<M: MonomialLike> Sub for Poly<M> {
    type Output = Poly<M>;
    fn sub(mut self, rhs: Poly<M>) -> Poly<M> {
        self -= &rhs;
        self
    }
}

impl<M: MonomialLike> Neg for &Poly<M> {
    type Output = Poly<M>;
    fn neg(self) -> Poly<M> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<M: MonomialLike> Neg for Poly<M> {
    type Output = Poly<M>;
    fn neg(self) -> Poly<M> {
        -&self
    }
}

impl<M: MonomialLike> Mul for &Poly<M> {
    type Output = Poly<M>;
    fn mul(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl<M: MonomialLike> Mul for Poly<M> {
    type Output = Poly<M>;
    fn mul(self, rhs: Poly<M>) -> Poly<M> {
        &self * &rhs
    }
}

impl<M: MonomialLike> Mul<&Rational> for &Poly<M> {
    type Output = Poly<M>;
    fn mul(self, rhs: &Rational) -> Poly<M> {
        self.scale(rhs)
    }
}

impl<M: MonomialLike> Mul<Rational> for Poly<M> {
    type Output = Poly<M>;
    fn mul(self, rhs: Rational) -> Poly<M> {
        self.scale(&rhs)
    }
}

impl<M: MonomialLike> std::iter::Sum for Poly<M> {
    fn sum<I: Iterator<Item = Poly<M>>>(iter: I) -> Poly<M> {
        let mut acc = Poly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> MultiPoly {
        MultiPoly::constant(c)
    }
}
