//! Words in the free monoid over symmetric letters `X1, ..., Xn`.

use std::cmp::Ordering;
use std::fmt;

/// A finite sequence of letter indices (1-based). The empty word is the unit `1`.
///
/// Words are ordered by degree first and lexicographically on the letter
/// indices within a degree, so `1 < X1 < X2 < X1X1 < X1X2 < ...`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from 1-based letter indices.
    ///
    /// # Panics
    /// Panics if an index is zero.
    pub fn new(letters: impl Into<Vec<u16>>) -> Self {
        let letters = letters.into();
        assert!(letters.iter().all(|&l| l > 0), "letter indices are 1-based");
        Word(letters)
    }

    pub fn letter(i: u16) -> Self {
        Word::new(vec![i])
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter index, 0 for the empty word.
    pub fn max_letter(&self) -> u16 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// The involution: reverses the word (letters are symmetric).
    pub fn star(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `star(self) * middle * right` without intermediate allocations.
    pub fn sandwich(&self, middle: &Word, right: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + middle.0.len() + right.0.len());
        v.extend(self.0.iter().rev());
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    /// Suffix of length `len`.
    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.0.len() - len..].to_vec())
    }

    /// If the word has the form `star(v) * v`, returns `v`.
    pub fn hermitian_root(&self) -> Option<Word> {
        let n = self.0.len();
        if n % 2 == 1 || !self.is_palindrome() {
            return None;
        }
        Some(self.suffix(n / 2))
    }

    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        let n = self.0.len().max(1);
        (0..n).map(move |r| {
            if self.0.is_empty() {
                return Word::one();
            }
            let mut v = Vec::with_capacity(self.0.len());
            v.extend_from_slice(&self.0[r..]);
            v.extend_from_slice(&self.0[..r]);
            Word(v)
        })
    }

    /// Minimal word among all cyclic rotations; with `with_star`, rotations of
    /// the reversed word are included as well.
    pub fn cyclic_canonical(&self, with_star: bool) -> Word {
        let mut best = min_rotation(&self.0);
        if with_star {
            let mut rev = self.0.clone();
            rev.reverse();
            let other = min_rotation(&rev);
            if other < best {
                best = other;
            }
        }
        best
    }

    /// Representative of `{w, star(w)}`.
    pub fn symmetric_canonical(&self) -> Word {
        let n = self.0.len();
        for i in 0..n / 2 {
            match self.0[i].cmp(&self.0[n - 1 - i]) {
                Ordering::Less => return self.clone(),
                Ordering::Greater => return self.star(),
                Ordering::Equal => {}
            }
        }
        self.clone()
    }

    /// Set of letters occurring in the word, sorted.
    pub fn variables(&self) -> Vec<u16> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

fn min_rotation(letters: &[u16]) -> Word {
    let n = letters.len();
    if n == 0 {
        return Word::one();
    }
    let mut best = 0;
    for r in 1..n {
        let better = (0..n)
            .map(|i| letters[(r + i) % n].cmp(&letters[(best + i) % n]))
            .find(|o| *o != Ordering::Equal)
            == Some(Ordering::Less);
        if better {
            best = r;
        }
    }
    let mut v = Vec::with_capacity(n);
    v.extend_from_slice(&letters[best..]);
    v.extend_from_slice(&letters[..best]);
    Word(v)
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<&[u16]> for Word {
    fn from(v: &[u16]) -> Self {
        Word::new(v.to_vec())
    }
}

/// Prints in the polynomial text grammar: `1`, `x1`, `x1*x2^2`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{l}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
