use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::algebra::{write_latex_power, Monomial, MonomialLike, MultiPoly, Poly, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolKind {
    /// `eval(B^k) = B_k`, the Bernoulli numbers.
    Bernoulli,
    /// `eval(U^k) = 1/(k+1)`, the moments of the uniform law on `[0, 1]`.
    Uniform,
}

/// A formal umbral letter. Distinct `(kind, index)` pairs are independent:
/// moments of a product over distinct symbols multiply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UmbralSymbol {
    pub kind: SymbolKind,
    pub index: u32,
}

impl UmbralSymbol {
    pub fn bernoulli(index: u32) -> Self {
        UmbralSymbol {
            kind: SymbolKind::Bernoulli,
            index,
        }
    }

    pub fn uniform(index: u32) -> Self {
        UmbralSymbol {
            kind: SymbolKind::Uniform,
            index,
        }
    }
}

impl fmt::Display for UmbralSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            SymbolKind::Bernoulli => 'B',
            SymbolKind::Uniform => 'U',
        };
        write!(f, "{letter}{}", self.index)
    }
}

/// Anything a polynomial can be differentiated by: an ordinary
/// indeterminate or (illegally) an umbral symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Var(Var),
    Symbol(UmbralSymbol),
}

impl From<Var> for Letter {
    fn from(v: Var) -> Letter {
        Letter::Var(v)
    }
}

impl From<UmbralSymbol> for Letter {
    fn from(s: UmbralSymbol) -> Letter {
        Letter::Symbol(s)
    }
}

/// An ordinary monomial times a product of umbral symbol powers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UmbralMonomial {
    /// Sorted by symbol, exponents nonzero.
    symbols: SmallVec<[(UmbralSymbol, u32); 4]>,
    ordinary: Monomial,
}

impl UmbralMonomial {
    pub fn symbol(s: UmbralSymbol, e: u32) -> Self {
        let mut symbols = SmallVec::new();
        if e > 0 {
            symbols.push((s, e));
        }
        UmbralMonomial {
            symbols,
            ordinary: Monomial::one(),
        }
    }

    pub fn ordinary(m: Monomial) -> Self {
        UmbralMonomial {
            symbols: SmallVec::new(),
            ordinary: m,
        }
    }

    pub fn symbols(&self) -> &[(UmbralSymbol, u32)] {
        &self.symbols
    }

    pub fn ordinary_part(&self) -> &Monomial {
        &self.ordinary
    }

    pub fn has_symbols(&self) -> bool {
        !self.symbols.is_empty()
    }

    pub(crate) fn with_ordinary(&self, ordinary: Monomial) -> Self {
        UmbralMonomial {
            symbols: self.symbols.clone(),
            ordinary,
        }
    }
}

impl Ord for UmbralMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.symbols.as_slice().cmp(other.symbols.as_slice()))
            .then_with(|| self.ordinary.cmp(&other.ordinary))
    }
}

impl PartialOrd for UmbralMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for UmbralMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut s = String::new();
        self.write_factors(&mut s);
        f.write_str(&s)
    }
}

impl MonomialLike for UmbralMonomial {
    fn one() -> Self {
        Self::default()
    }

    fn mul(&self, other: &Self) -> Self {
        // Merge two sorted symbol lists; repeated symbols add exponents.
        let mut symbols: SmallVec<[(UmbralSymbol, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.symbols, &other.symbols);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                symbols.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                symbols.push(b[j]);
                j += 1;
            } else {
                symbols.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        UmbralMonomial {
            symbols,
            ordinary: self.ordinary.mul(&other.ordinary),
        }
    }

    fn is_one(&self) -> bool {
        self.symbols.is_empty() && self.ordinary.is_one()
    }

    fn degree(&self) -> u32 {
        self.symbols.iter().map(|(_, e)| e).sum::<u32>() + self.ordinary.degree()
    }

    fn write_factors(&self, out: &mut String) {
        let start = out.len();
        for (s, e) in &self.symbols {
            if out.len() > start {
                out.push('*');
            }
            out.push_str(&s.to_string());
            if *e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        if !self.ordinary.is_one() {
            if out.len() > start {
                out.push('*');
            }
            self.ordinary.write_factors(out);
        }
    }

    fn write_latex(&self, out: &mut String) {
        for (s, e) in &self.symbols {
            let letter = match s.kind {
                SymbolKind::Bernoulli => "B",
                SymbolKind::Uniform => "U",
            };
            write_latex_power(out, &format!("\\mathcal{{{letter}}}_{{{}}}", s.index), *e);
        }
        self.ordinary.write_latex(out);
    }
}

/// Polynomial whose monomials may also carry umbral symbol powers.
pub type UmbralPoly = Poly<UmbralMonomial>;

impl UmbralPoly {
    pub fn from_multi(p: &MultiPoly) -> UmbralPoly {
        Poly::from_terms(
            p.terms()
                .map(|(m, c)| (UmbralMonomial::ordinary(m.clone()), c.clone())),
        )
    }

    /// Lossless conversion back to an ordinary polynomial; `None` if any
    /// term still carries a symbol.
    pub fn to_multi(&self) -> Option<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            if m.has_symbols() {
                return None;
            }
            out.add_term(m.ordinary.clone(), c.clone());
        }
        Some(out)
    }

    pub fn symbol_power(s: UmbralSymbol, e: u32) -> UmbralPoly {
        Poly::term(crate::algebra::int(1), UmbralMonomial::symbol(s, e))
    }
}
