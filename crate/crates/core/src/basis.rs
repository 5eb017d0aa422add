//! Monomial bases: standard bases `W_d` and the Newton chip reduction.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::ncalg::{NcPoly, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("polynomial has odd degree {0}")]
    OddDegree(usize),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
}

/// An ordered set of distinct words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    words: Vec<Word>,
    pub n: usize,
    /// Degree bound for standard bases.
    pub d: Option<usize>,
}

impl MonomialBasis {
    /// Sorts and deduplicates.
    pub fn from_words(n: usize, words: impl IntoIterator<Item = Word>) -> Self {
        let set: BTreeSet<Word> = words.into_iter().collect();
        MonomialBasis { words: set.into_iter().collect(), n, d: None }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.index_of(w).is_some()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }
}

/// All words of degree at most `d` in `n` letters.
pub fn standard_basis(n: usize, d: usize) -> MonomialBasis {
    let vars: Vec<u16> = (1..=n as u16).collect();
    subset_basis(&vars, d)
}

/// All words of degree at most `d` in the letters `vars` (sorted ascending).
pub fn subset_basis(vars: &[u16], d: usize) -> MonomialBasis {
    let mut words = vec![Word::one()];
    let mut layer = vec![Vec::<u16>::new()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(layer.len() * vars.len());
        for w in &layer {
            for &v in vars {
                let mut x = w.clone();
                x.push(v);
                next.push(x);
            }
        }
        words.extend(next.iter().cloned().map(Word::new));
        layer = next;
    }
    let n = vars.iter().copied().max().unwrap_or(0) as usize;
    MonomialBasis { words, n, d: Some(d) }
}

/// Newton chip basis for a symmetric polynomial of even degree.
///
/// Keeps `1` together with every nonempty suffix of `v` for each hermitian
/// square `star(v) v` in the support of degree at least `mindeg(f)`.
pub fn newton_chip(f: &NcPoly) -> Result<MonomialBasis, BasisError> {
    let deg = f.degree();
    if deg % 2 == 1 {
        return Err(BasisError::OddDegree(deg));
    }
    if !f.is_symmetric() {
        return Err(BasisError::NotSymmetric);
    }
    let lo = f.min_degree().div_ceil(2);
    let mut set = BTreeSet::new();
    set.insert(Word::one());
    for w in f.support() {
        if let Some(v) = w.hermitian_root() {
            for len in lo.max(1)..=v.degree() {
                set.insert(v.suffix(len));
            }
        }
    }
    Ok(MonomialBasis { words: set.into_iter().collect(), n: f.n(), d: None })
}
