//! Alternating-direction augmented Lagrangian solver.
//!
//! The block LMI `min c'y, F0 + sum y_i F_i >= 0` is the dual of the standard
//! form `min <F0, X>, <F_i, X> = c_i, X >= 0`. Writing `z = -y`, each iteration
//! solves the normal equations for `z`, projects
//! `V = F0 - A*(z) - mu X` onto the PSD cone blockwise and moves the
//! multiplier `X` towards `proj(-V) / mu` with over-relaxation.

use std::collections::HashMap;

use faer::dyn_stack::{MemBuffer, MemStack};
use faer::linalg::evd::{self_adjoint_evd, self_adjoint_evd_scratch, ComputeEigenvectors};
use faer::linalg::matmul::matmul;
use faer::linalg::solvers::Solve;
use faer::sparse::linalg::solvers::Llt;
use faer::sparse::{SparseColMat, Triplet};
use faer::diag::Diag;
use faer::{Accum, Mat, Par, Side};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::model::{merge_entries, BlockSdp};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Settings {
    /// Bound on the relative primal, dual and gap residuals.
    pub tol: f64,
    pub max_iter: usize,
    /// Step factor on the multiplier update, in `(0, 1.618)`.
    pub over_relaxation: f64,
    /// Normalize constraint rows and rescale the data before iterating.
    pub scale: bool,
    /// Initial penalty parameter.
    pub mu: f64,
    /// Print residuals to stderr every this many iterations (0 = quiet).
    pub log_every: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { tol: 1e-6, max_iter: 200_000, over_relaxation: 1.6, scale: true, mu: 1.0, log_every: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    Optimal,
    MaxIterations,
    UnboundedSuspected,
    InfeasibleSuspected,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::MaxIterations => "max-iterations",
            SolveStatus::UnboundedSuspected => "unbounded-suspected",
            SolveStatus::InfeasibleSuspected => "infeasible-suspected",
        }
    }
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Relative residuals of the returned point.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Residuals {
    /// PSD violation of `F0 + sum y_i F_i`.
    pub primal: f64,
    /// Violation of `<F_i, Q> = c_i` by the dual blocks.
    pub dual: f64,
    /// Relative gap between the two objective values.
    pub gap: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.primal.max(self.dual).max(self.gap)
    }
}

#[derive(Clone, Debug)]
pub struct SdpSolution {
    pub status: SolveStatus,
    pub y: Vec<f64>,
    /// PSD multipliers, one per block; the Gram matrices of the certificate.
    pub dual_blocks: Vec<Mat<f64>>,
    /// `offset + c'y`.
    pub primal_objective: f64,
    /// `offset - <F0, Q>`.
    pub dual_objective: f64,
    pub residuals: Residuals,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("problem has no blocks")]
    NoBlocks,
    #[error("problem data is not finite")]
    NonFinite,
    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),
}

/// Iterates beyond this norm (in scaled units) count as diverging.
const DIVERGE: f64 = 1e6;

/// Scaled standard-form data. Row `i` of `A` is `F_i / d_i`; `b` and `C` are
/// further divided by `sigma_b` and `sigma_c`.
struct Scaled {
    sizes: Vec<usize>,
    /// Per block: `(row, col, var, val)` with `row <= col`.
    entries: Vec<Vec<(usize, usize, usize, f64)>>,
    c: Vec<Mat<f64>>,
    b: Vec<f64>,
    d: Vec<f64>,
    sigma_b: f64,
    sigma_c: f64,
    /// Original index of each kept variable.
    keep: Vec<usize>,
}

fn off_weight(r: usize, c: usize) -> f64 {
    if r == c {
        1.0
    } else {
        2.0
    }
}

impl Scaled {
    fn m(&self) -> usize {
        self.keep.len()
    }

    /// `A(X)`.
    fn apply_a(&self, x: &[Mat<f64>], out: &mut [f64]) {
        out.iter_mut().for_each(|v| *v = 0.0);
        for (k, ents) in self.entries.iter().enumerate() {
            for &(r, c, var, val) in ents {
                out[var] += off_weight(r, c) * val * x[k][(r, c)];
            }
        }
    }

    /// `out[k] -= A*(z)` for every block.
    fn sub_adjoint(&self, z: &[f64], out: &mut [Mat<f64>]) {
        for (k, ents) in self.entries.iter().enumerate() {
            for &(r, c, var, val) in ents {
                let v = z[var] * val;
                out[k][(r, c)] -= v;
                if r != c {
                    out[k][(c, r)] -= v;
                }
            }
        }
    }

    /// `A A*` as a sparse matrix with a small diagonal shift.
    fn normal_matrix(&self) -> Result<Option<Llt<usize, f64>>, SolveError> {
        let m = self.m();
        if m == 0 {
            return Ok(None);
        }
        let mut acc: HashMap<(usize, usize), f64> = HashMap::new();
        for ents in &self.entries {
            let mut i = 0;
            while i < ents.len() {
                let mut j = i;
                while j < ents.len() && (ents[j].0, ents[j].1) == (ents[i].0, ents[i].1) {
                    j += 1;
                }
                let w = off_weight(ents[i].0, ents[i].1);
                for p in &ents[i..j] {
                    for q in &ents[i..j] {
                        *acc.entry((p.2, q.2)).or_insert(0.0) += w * p.3 * q.3;
                    }
                }
                i = j;
            }
        }
        let shift = 1e-10 * acc.iter().filter(|((i, j), _)| i == j).fold(1.0f64, |a, (_, v)| a.max(*v));
        let mut trip: Vec<Triplet<usize, usize, f64>> =
            acc.into_iter().map(|((i, j), v)| Triplet::new(i, j, v)).collect();
        trip.extend((0..m).map(|i| Triplet::new(i, i, shift)));
        let k = SparseColMat::<usize, f64>::try_new_from_triplets(m, m, &trip)
            .map_err(|e| SolveError::NumericalBreakdown(format!("normal matrix: {e:?}")))?;
        k.sp_cholesky(Side::Lower)
            .map(Some)
            .map_err(|e| SolveError::NumericalBreakdown(format!("normal equations: {e:?}")))
    }
}

fn finite(v: f64) -> Result<(), SolveError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(SolveError::NonFinite)
    }
}

fn prepare(sdp: &BlockSdp, settings: &Settings) -> Result<Scaled, SolveError> {
    let nb = sdp.num_blocks();
    let mut keep = Vec::new();
    let mut cols = Vec::new();
    for (i, col) in sdp.columns.iter().enumerate() {
        let col = merge_entries(col);
        for e in &col {
            finite(e.val)?;
        }
        if !col.is_empty() {
            keep.push(i);
            cols.push(col);
        }
    }
    let mut d: Vec<f64> = cols
        .iter()
        .map(|col| col.iter().map(|e| off_weight(e.row as usize, e.col as usize) * e.val * e.val).sum::<f64>().sqrt())
        .collect();
    if !settings.scale {
        d.iter_mut().for_each(|v| *v = 1.0);
    }
    let bt: Vec<f64> = keep.iter().zip(&d).map(|(&i, di)| sdp.objective[i] / di).collect();
    let mut c: Vec<Mat<f64>> = sdp.block_sizes.iter().map(|&n| Mat::zeros(n, n)).collect();
    for e in merge_entries(&sdp.constant) {
        finite(e.val)?;
        let (k, r, col) = (e.block as usize, e.row as usize, e.col as usize);
        c[k][(r, col)] = e.val;
        c[k][(col, r)] = e.val;
    }
    let (sigma_b, sigma_c) = if settings.scale {
        (norm(&bt).max(1.0), frob(&c).max(1.0))
    } else {
        (1.0, 1.0)
    };
    let b = bt.iter().map(|v| v / sigma_b).collect();
    c.iter_mut().for_each(|m| *m *= faer::Scale(1.0 / sigma_c));
    let mut entries = vec![Vec::new(); nb];
    for (var, col) in cols.iter().enumerate() {
        for e in col {
            entries[e.block as usize].push((e.row as usize, e.col as usize, var, e.val / d[var]));
        }
    }
    for ents in &mut entries {
        ents.sort_by_key(|&(r, c, var, _)| (r, c, var));
    }
    Ok(Scaled { sizes: sdp.block_sizes.clone(), entries, c, b, d, sigma_b, sigma_c, keep })
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn frob(ms: &[Mat<f64>]) -> f64 {
    ms.iter().map(|m| m.squared_norm_l2()).sum::<f64>().sqrt()
}

fn inner(a: &[Mat<f64>], b: &[Mat<f64>]) -> f64 {
    let mut s = 0.0;
    for (x, y) in a.iter().zip(b) {
        for j in 0..x.ncols() {
            for i in 0..x.nrows() {
                s += x[(i, j)] * y[(i, j)];
            }
        }
    }
    s
}

/// Eigendecomposition workspace for one block size.
struct EigWork {
    s: Diag<f64>,
    u: Mat<f64>,
    w: Mat<f64>,
    buf: MemBuffer,
}

impl EigWork {
    fn new(n: usize) -> Self {
        let req = self_adjoint_evd_scratch::<f64>(n, ComputeEigenvectors::Yes, Par::Seq, Default::default());
        EigWork { s: Diag::zeros(n), u: Mat::zeros(n, n), w: Mat::zeros(n, n), buf: MemBuffer::new(req) }
    }
}

/// Splits symmetric `v` as `pos - neg` with both parts PSD and writes
/// `pos` and `neg`.
fn split_psd(v: &Mat<f64>, pos: &mut Mat<f64>, neg: &mut Mat<f64>, ws: &mut EigWork) -> Result<(), SolveError> {
    let n = v.nrows();
    if n == 1 {
        let x = v[(0, 0)];
        pos[(0, 0)] = x.max(0.0);
        neg[(0, 0)] = (-x).max(0.0);
        return Ok(());
    }
    self_adjoint_evd(
        v.as_ref(),
        ws.s.as_mut(),
        Some(ws.u.as_mut()),
        Par::Seq,
        MemStack::new(&mut ws.buf),
        Default::default(),
    )
    .map_err(|e| SolveError::NumericalBreakdown(format!("eigendecomposition: {e:?}")))?;
    let lam = ws.s.column_vector();
    let npos = (0..n).filter(|&i| lam[i] > 0.0).count();
    // build the smaller of the two parts, get the other by difference
    let positive = npos <= n - npos;
    let mut p = 0;
    for i in 0..n {
        let l = if positive { lam[i] } else { -lam[i] };
        if l > 0.0 {
            let s = l.sqrt();
            for r in 0..n {
                ws.w[(r, p)] = ws.u[(r, i)] * s;
            }
            p += 1;
        }
    }
    let w = ws.w.as_ref().subcols(0, p);
    let (small, big) = if positive { (pos, neg) } else { (neg, pos) };
    matmul(small.as_mut(), Accum::Replace, w, w.transpose(), 1.0, Par::Seq);
    // big = small - v for the negative part, small + v for the positive part
    let sign = if positive { -1.0 } else { 1.0 };
    for j in 0..n {
        for i in 0..n {
            big[(i, j)] = small[(i, j)] + sign * v[(i, j)];
        }
    }
    // exact symmetry and PSD diagonal for the difference
    for j in 0..n {
        for i in 0..j {
            let a = 0.5 * (big[(i, j)] + big[(j, i)]);
            big[(i, j)] = a;
            big[(j, i)] = a;
        }
    }
    Ok(())
}

/// Projection onto the PSD cone.
pub fn project_psd(v: &Mat<f64>) -> Result<Mat<f64>, SolveError> {
    let n = v.nrows();
    let mut pos = Mat::zeros(n, n);
    let mut neg = Mat::zeros(n, n);
    split_psd(v, &mut pos, &mut neg, &mut EigWork::new(n))?;
    Ok(pos)
}

/// Solves the block LMI.
pub fn solve(sdp: &BlockSdp, settings: &Settings) -> Result<SdpSolution, SolveError> {
    if sdp.block_sizes.is_empty() {
        return Err(SolveError::NoBlocks);
    }
    finite(sdp.offset)?;
    for &c in &sdp.objective {
        finite(c)?;
    }
    // a variable missing from every block is free
    if let Some(i) = (0..sdp.num_vars()).find(|&i| sdp.objective[i] != 0.0 && sdp.columns[i].iter().all(|e| e.val == 0.0)) {
        let mut y = vec![0.0; sdp.num_vars()];
        y[i] = -sdp.objective[i].signum() * DIVERGE;
        return Ok(SdpSolution {
            status: SolveStatus::UnboundedSuspected,
            primal_objective: sdp.objective_value(&y),
            y,
            dual_blocks: sdp.block_sizes.iter().map(|&n| Mat::zeros(n, n)).collect(),
            dual_objective: f64::NAN,
            residuals: Residuals { primal: 0.0, dual: f64::INFINITY, gap: f64::INFINITY },
            iterations: 0,
        });
    }
    let sc = prepare(sdp, settings)?;
    let llt = sc.normal_matrix()?;
    let m = sc.m();
    let zeros = || -> Vec<Mat<f64>> { sc.sizes.iter().map(|&n| Mat::zeros(n, n)).collect() };
    let mut work: HashMap<usize, EigWork> = HashMap::new();
    for &n in &sc.sizes {
        work.entry(n).or_insert_with(|| EigWork::new(n));
    }

    let mut x = zeros();
    let mut xt = zeros();
    let mut s = zeros();
    let mut v = zeros();
    let mut z = vec![0.0; m];
    let mut ax = vec![0.0; m];
    let mut axt = vec![0.0; m];
    let mut as_ = vec![0.0; m];
    let mut ac = vec![0.0; m];
    sc.apply_a(&sc.c, &mut ac);
    let mut rhs = Mat::<f64>::zeros(m, 1);

    // unscaled norms for the reported residuals
    let b_orig: f64 = sc.b.iter().zip(&sc.d).map(|(b, d)| (b * d * sc.sigma_b).powi(2)).sum::<f64>().sqrt();
    let c_orig = frob(&sc.c) * sc.sigma_c;
    let b_norm = norm(&sc.b);
    let c_norm = frob(&sc.c);
    let obj_scale = sc.sigma_b * sc.sigma_c;

    let rho = settings.over_relaxation;
    let mut mu = settings.mu;
    let mut status = SolveStatus::MaxIterations;
    let mut res = Residuals::default();
    let mut iterations = 0;
    let mut ratio_log = 0.0;
    for it in 1..=settings.max_iter {
        iterations = it;
        // z = -(A A*)^{-1} (mu (A(X) - b) + A(S - C))
        if let Some(llt) = &llt {
            sc.apply_a(&s, &mut as_);
            for i in 0..m {
                rhs[(i, 0)] = -(mu * (ax[i] - sc.b[i]) + as_[i] - ac[i]);
            }
            llt.solve_in_place(rhs.as_mut());
            for i in 0..m {
                z[i] = rhs[(i, 0)];
            }
        }
        // V = C - A*(z) - mu X
        for k in 0..v.len() {
            v[k].copy_from(&sc.c[k]);
            v[k] -= faer::Scale(mu) * &x[k];
        }
        sc.sub_adjoint(&z, &mut v);
        for k in 0..v.len() {
            let ws = work.get_mut(&sc.sizes[k]).expect("workspace");
            split_psd(&v[k], &mut s[k], &mut xt[k], ws)?;
            xt[k] *= faer::Scale(1.0 / mu);
        }
        // C - A*(z) - S = mu (X - Xt)
        let mut dres = 0.0;
        for k in 0..x.len() {
            dres += (&x[k] - &xt[k]).squared_norm_l2();
        }
        let dres = mu * dres.sqrt();
        sc.apply_a(&xt, &mut axt);
        let pres = axt.iter().zip(&sc.b).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
        for k in 0..x.len() {
            let upd = faer::Scale(1.0 - rho) * &x[k] + faer::Scale(rho) * &xt[k];
            x[k] = upd;
        }
        for i in 0..m {
            ax[i] = (1.0 - rho) * ax[i] + rho * axt[i];
        }

        let bz: f64 = sc.b.iter().zip(&z).map(|(b, z)| b * z).sum();
        let cx = inner(&sc.c, &xt);
        if !(bz.is_finite() && cx.is_finite()) {
            return Err(SolveError::NumericalBreakdown("iterates are not finite".into()));
        }
        let pobj = sdp.offset - obj_scale * bz;
        let dobj = sdp.offset - obj_scale * cx;
        let pres_orig: f64 = axt
            .iter()
            .zip(&sc.b)
            .zip(&sc.d)
            .map(|((a, b), d)| ((a - b) * d * sc.sigma_b).powi(2))
            .sum::<f64>()
            .sqrt();
        res = Residuals {
            primal: dres * sc.sigma_c / (1.0 + c_orig),
            dual: pres_orig / (1.0 + b_orig),
            gap: (pobj - dobj).abs() / (1.0 + pobj.abs() + dobj.abs()),
        };
        if settings.log_every > 0 && it % settings.log_every == 0 {
            eprintln!(
                "iter {it:>7} mu {mu:.2e} pobj {pobj:+.8e} dobj {dobj:+.8e} pres {:.2e} dres {:.2e} gap {:.2e}",
                res.dual, res.primal, res.gap
            );
        }
        if res.max() <= settings.tol {
            status = SolveStatus::Optimal;
            break;
        }
        if norm(&z) > DIVERGE && -bz < -DIVERGE {
            status = SolveStatus::UnboundedSuspected;
            break;
        }
        if frob(&xt) > DIVERGE && cx < -DIVERGE {
            status = SolveStatus::InfeasibleSuspected;
            break;
        }
        // keep the scaled residuals balanced
        let rp = pres / (1.0 + b_norm);
        let rd = dres / (1.0 + c_norm);
        ratio_log += (rp.max(1e-300) / rd.max(1e-300)).ln();
        if it % 20 == 0 {
            let avg = ratio_log / 20.0;
            ratio_log = 0.0;
            if avg > 2.3 {
                mu = (mu * 2.0).min(1e6);
            } else if avg < -2.3 {
                mu = (mu * 0.5).max(1e-6);
            }
        }
    }

    let mut y = vec![0.0; sdp.num_vars()];
    for (i, &orig) in sc.keep.iter().enumerate() {
        y[orig] = -z[i] * sc.sigma_c / sc.d[i];
    }
    let bz: f64 = sc.b.iter().zip(&z).map(|(b, z)| b * z).sum();
    let cx = inner(&sc.c, &xt);
    let dual_blocks = xt.into_iter().map(|q| q * faer::Scale(sc.sigma_b)).collect();
    Ok(SdpSolution {
        status,
        y,
        dual_blocks,
        primal_objective: sdp.offset - obj_scale * bz,
        dual_objective: sdp.offset - obj_scale * cx,
        residuals: res,
        iterations,
    })
}
