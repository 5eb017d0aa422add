//! Noncommutative polynomials with real coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::word::Word;

/// Coefficients below this magnitude are dropped after arithmetic.
pub const COEF_EPS: f64 = 1e-14;

/// How words are identified when indexing moments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Canon {
    /// `w ~ star(w)` (eigenvalue problems).
    Symmetric,
    /// `w ~` any rotation of `w` or of `star(w)` (trace problems).
    Cyclic,
}

impl Canon {
    pub fn apply(self, w: &Word) -> Word {
        match self {
            Canon::Symmetric => w.symmetric_canonical(),
            Canon::Cyclic => w.cyclic_canonical(true),
        }
    }
}

/// A polynomial `sum a_w w` over words in `n` variables.
#[derive(Clone, PartialEq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, f64>,
    n: usize,
}

impl NcPoly {
    pub fn zero(n: usize) -> Self {
        NcPoly { terms: BTreeMap::new(), n }
    }

    pub fn constant(n: usize, c: f64) -> Self {
        NcPoly::monomial(n, Word::one(), c)
    }

    pub fn monomial(n: usize, w: Word, c: f64) -> Self {
        let mut p = NcPoly::zero(n.max(w.max_letter() as usize));
        p.add_term(w, c);
        p
    }

    /// The letter `X_i` as a polynomial.
    pub fn var(n: usize, i: u16) -> Self {
        NcPoly::monomial(n, Word::letter(i), 1.0)
    }

    /// Collects like terms; the ambient size grows to cover every letter used.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Word, f64)>) -> Self {
        let mut p = NcPoly::zero(n);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: f64) {
        self.n = self.n.max(w.max_letter() as usize);
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().abs() < COEF_EPS {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                if c.abs() >= COEF_EPS {
                    e.insert(c);
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Returns a copy with ambient size at least `n`.
    pub fn with_n(mut self, n: usize) -> Self {
        self.n = self.n.max(n);
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, f64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn coef(&self, w: &Word) -> f64 {
        self.terms.get(w).copied().unwrap_or(0.0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    /// Minimum degree over the support; 0 for the zero polynomial.
    pub fn min_degree(&self) -> usize {
        self.terms.keys().map(Word::degree).min().unwrap_or(0)
    }

    /// Degree after merging cyclically equivalent words.
    pub fn cyclic_degree(&self) -> usize {
        self.canonicalize(Canon::Cyclic).degree()
    }

    /// Variables appearing in the support, sorted.
    pub fn variables(&self) -> Vec<u16> {
        let set: BTreeSet<u16> = self.terms.keys().flat_map(|w| w.letters().iter().copied()).collect();
        set.into_iter().collect()
    }

    pub fn star(&self) -> NcPoly {
        NcPoly::from_terms(self.n, self.terms.iter().map(|(w, c)| (w.star(), *c)))
    }

    /// `(f + star(f)) / 2`.
    pub fn symmetrize(&self) -> NcPoly {
        (self + &self.star()).scale(0.5)
    }

    /// `star(f) == f` up to `tol` per coefficient.
    pub fn is_symmetric_tol(&self, tol: f64) -> bool {
        self.terms
            .iter()
            .all(|(w, c)| (self.coef(&w.star()) - c).abs() <= tol)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_tol(1e-12)
    }

    pub fn scale(&self, s: f64) -> NcPoly {
        NcPoly::from_terms(self.n, self.terms.iter().map(|(w, c)| (w.clone(), c * s)))
    }

    /// Maps each word to its class representative and merges coefficients.
    pub fn canonicalize(&self, canon: Canon) -> NcPoly {
        NcPoly::from_terms(self.n, self.terms.iter().map(|(w, c)| (canon.apply(w), *c)))
    }

    /// Evaluates at commuting scalar values `x[i-1]` for `X_i`.
    pub fn eval_scalar(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(w, c)| c * w.letters().iter().map(|&l| x[l as usize - 1]).product::<f64>())
            .sum()
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coef(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly[n={}]({self})", self.n)
    }
}

/// Prints in the text grammar accepted by [`super::parse_poly`].
impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, &c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c < 0.0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if w.is_one() {
                write!(f, "{mag:?}")?;
            } else if mag == 1.0 {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag:?}*{w}")?;
            }
        }
        Ok(())
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone().with_n(rhs.n);
        for (w, c) in rhs.terms.iter() {
            out.add_term(w.clone(), *c);
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone().with_n(rhs.n);
        for (w, c) in rhs.terms.iter() {
            out.add_term(w.clone(), -*c);
        }
        out
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero(self.n.max(rhs.n));
        for (u, a) in self.terms.iter() {
            for (v, b) in rhs.terms.iter() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(-1.0)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: NcPoly) -> NcPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: &NcPoly) -> NcPoly {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(-1.0)
    }
}
