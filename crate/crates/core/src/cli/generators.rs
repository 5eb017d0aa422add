//! Benchmark polynomials and constraint sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ncalg::{NcPoly, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("size {n} is invalid for {name}: {why}")]
    BadSize { name: &'static str, n: usize, why: &'static str },
    #[error("unknown benchmark '{0}'")]
    Unknown(String),
}

fn x(n: usize, i: usize) -> NcPoly {
    NcPoly::var(n, i as u16)
}

fn sq(n: usize, i: usize) -> NcPoly {
    NcPoly::monomial(n, Word::new(vec![i as u16, i as u16]), 1.0)
}

fn c(n: usize, v: f64) -> NcPoly {
    NcPoly::constant(n, v)
}

/// `star(g) * g`.
fn herm(g: &NcPoly) -> NcPoly {
    &g.star() * g
}

fn check(name: &'static str, n: usize, ok: bool, why: &'static str) -> Result<(), GenError> {
    if ok {
        Ok(())
    } else {
        Err(GenError::BadSize { name, n, why })
    }
}

pub fn broyden_banded(n: usize) -> Result<NcPoly, GenError> {
    check("broyden-banded", n, n >= 1, "need n >= 1")?;
    let mut f = NcPoly::zero(n);
    for i in 1..=n {
        let mut g = x(n, i).scale(2.0) + NcPoly::monomial(n, Word::new(vec![i as u16; 3]), 5.0) + c(n, 1.0);
        let lo = i.saturating_sub(5).max(1);
        for j in lo..=(i + 1).min(n) {
            if j != i {
                g = g - x(n, j) - sq(n, j);
            }
        }
        f = f + herm(&g);
    }
    Ok(f)
}

pub fn chained_singular(n: usize) -> Result<NcPoly, GenError> {
    check("chained-singular", n, n >= 4 && n % 2 == 0, "need even n >= 4")?;
    let mut f = NcPoly::zero(n);
    let mono = |i: usize, j: usize, a: f64| NcPoly::monomial(n, Word::new(vec![i as u16, j as u16]), a);
    for i in (1..=n - 3).step_by(2) {
        f = f + herm(&(x(n, i) + x(n, i + 1).scale(10.0)));
        f = f + herm(&(x(n, i + 2) - x(n, i + 3))).scale(5.0);
        let g = sq(n, i + 1) - mono(i + 1, i + 2, 4.0) + sq(n, i + 2).scale(4.0);
        f = f + herm(&g);
        let h = sq(n, i) - mono(i, i + 3, 20.0) + sq(n, i + 3).scale(100.0);
        f = f + herm(&h).scale(10.0);
    }
    Ok(f)
}

/// The sum starts at `i = 2` since the summand couples `X_i` with `X_{i-1}`.
pub fn generalized_rosenbrock(n: usize) -> Result<NcPoly, GenError> {
    check("generalized-rosenbrock", n, n >= 2, "need n >= 2")?;
    let mut f = c(n, 1.0);
    for i in 2..=n {
        f = f + herm(&(x(n, i) - sq(n, i - 1))).scale(100.0);
        f = f + herm(&(c(n, 1.0) - x(n, i)));
    }
    Ok(f)
}

pub fn chained_wood(n: usize) -> Result<NcPoly, GenError> {
    check("chained-wood", n, n >= 4 && n % 4 == 0, "need n divisible by 4")?;
    let mut f = c(n, 1.0);
    for i in (1..=n - 3).step_by(2) {
        f = f + herm(&(x(n, i + 1) - sq(n, i))).scale(100.0);
        f = f + herm(&(c(n, 1.0) - x(n, i)));
        f = f + herm(&(x(n, i + 3) - sq(n, i + 2))).scale(90.0);
        f = f + herm(&(c(n, 1.0) - x(n, i + 2)));
        f = f + herm(&(x(n, i + 1) + x(n, i + 3) - c(n, 2.0))).scale(10.0);
        f = f + herm(&(x(n, i + 1) - x(n, i + 3))).scale(0.1);
    }
    Ok(f)
}

pub fn broyden_tridiagonal(n: usize) -> Result<NcPoly, GenError> {
    check("broyden-tridiagonal", n, n >= 2, "need n >= 2")?;
    let mut f = NcPoly::zero(n);
    for i in 1..=n {
        let mut g = x(n, i).scale(3.0) - sq(n, i).scale(2.0) + c(n, 1.0);
        if i > 1 {
            g = g - x(n, i - 1);
        }
        if i < n {
            g = g - x(n, i + 1).scale(2.0);
        }
        f = f + herm(&g);
    }
    Ok(f)
}

/// Benchmark names accepted by [`benchmark`].
pub const BENCHMARKS: &[&str] = &[
    "broyden-banded",
    "chained-singular",
    "generalized-rosenbrock",
    "chained-wood",
    "broyden-tridiagonal",
];

pub fn benchmark(name: &str, n: usize) -> Result<NcPoly, GenError> {
    match name {
        "broyden-banded" => broyden_banded(n),
        "chained-singular" => chained_singular(n),
        "generalized-rosenbrock" => generalized_rosenbrock(n),
        "chained-wood" => chained_wood(n),
        "broyden-tridiagonal" => broyden_tridiagonal(n),
        _ => Err(GenError::Unknown(name.to_string())),
    }
}

/// `{1 - X_i^2 : i} ∪ {X_i - 1/3 : i}`.
pub fn box_constraints(n: usize) -> Vec<NcPoly> {
    let mut out: Vec<NcPoly> = (1..=n).map(|i| c(n, 1.0) - sq(n, i)).collect();
    out.extend((1..=n).map(|i| x(n, i) - c(n, 1.0 / 3.0)));
    out
}

/// Variables `10l-9 ..= 10l+5` of clique `l` (1-based).
pub fn clique_vars(l: usize) -> Vec<u16> {
    ((10 * l - 9) as u16..=(10 * l + 5) as u16).collect()
}

/// One unit ball per clique: `1 - sum X_i^2` over [`clique_vars`].
pub fn multiball(p: usize) -> Vec<NcPoly> {
    let n = 10 * p + 5;
    (1..=p)
        .map(|l| clique_vars(l).into_iter().fold(c(n, 1.0), |g, i| g - sq(n, i as usize)))
        .collect()
}

/// Random quartic over `p` overlapping cliques of 15 variables with unit-ball
/// constraints. Each clique contributes 15 distinct words; a word is drawn by
/// picking a degree in `0..=4` and then letters from the clique uniformly.
pub fn random_clique_instance(p: usize, seed: u64) -> (NcPoly, Vec<NcPoly>) {
    let n = 10 * p + 5;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = NcPoly::zero(n);
    for l in 1..=p {
        let vars = clique_vars(l);
        let mut words: Vec<Word> = Vec::with_capacity(15);
        while words.len() < 15 {
            let deg = rng.random_range(0..=4);
            let w = Word::new((0..deg).map(|_| vars[rng.random_range(0..vars.len())]).collect::<Vec<_>>());
            if !words.contains(&w) {
                words.push(w);
            }
        }
        let h = NcPoly::from_terms(n, words.into_iter().map(|w| (w, rng.random_range(-1.0..=1.0))));
        f = f + h.symmetrize();
    }
    (f, multiball(p))
}
