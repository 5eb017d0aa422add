//! Acceptance suite. Runs every criterion in order and prints one
//! `PASS`/`FAIL` line each; exits nonzero when any criterion fails.
//!
//! Pass a substring as the first free argument to run a subset, e.g.
//! `cargo test --test acceptance -- quadratic`.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ncsos::basis::{newton_chip, standard_basis};
use ncsos::cli::generators::{benchmark, box_constraints, broyden_banded};
use ncsos::ncalg::{parse_poly, Canon, NcPoly, Word};
use ncsos::relax::{
    assemble_blocks, plans_from_state, relax, report_structure, BlockPlan, Mode, MomentSdp, Problem, RelaxationSpec,
    Sparsity, TsOrder,
};
use ncsos::sdpcore::{sdpa_string, solve, to_block_sdp, verify_sohs, BlockSdp, SdpEntry, SdpSolution, Settings, SolveStatus};
use ncsos::sparsity::{maximal_cliques, tsp_graph_unconstrained, ExtensionKind, Graph, IterState, TsBlock};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn p(s: &str) -> NcPoly {
    parse_poly(s).unwrap()
}

fn tight() -> Settings {
    Settings { tol: 1e-7, ..Settings::default() }
}

struct Bound {
    opt: f64,
    sol: SdpSolution,
    sdp: MomentSdp,
    mb: usize,
}

fn solve_moment(sdp: MomentSdp, settings: &Settings) -> Bound {
    let sol = solve(&to_block_sdp(&sdp), settings).unwrap();
    assert_eq!(sol.status, SolveStatus::Optimal, "solver status {:?}", sol.status);
    let mb = report_structure(&sdp).mb;
    Bound { opt: sol.primal_objective, sol, sdp, mb }
}

fn bound(pr: &Problem, spec: &RelaxationSpec, settings: &Settings) -> Bound {
    solve_moment(relax(pr, spec).unwrap().sdp, settings)
}

fn spec(mode: Mode, sparsity: Sparsity, order: Option<usize>) -> RelaxationSpec {
    RelaxationSpec { mode, sparsity, order, ..Default::default() }
}

fn constrained_example() -> Problem {
    Problem::new(p("2 - x1^2 + x1x2^2x1 - x2^2"), vec![p("4 - x1^2 - x2^2"), p("x1x2 + x2x1 - 2")])
}

fn unconstrained_poly() -> NcPoly {
    p("x1^2 - x1x2 - x2x1 + 3x2^2 - 2x1x2x1 + 2x1x2^2x1 - x2x3 - x3x2 + 6x3^2 \
       + 9x2^2x3 + 9x3x2^2 - 54x3x2x3 + 142x3x2^2x3")
}

fn ball(n: usize) -> NcPoly {
    let mut g = NcPoly::constant(n, 1.0);
    for i in 1..=n as u16 {
        g.add_term(Word::new(vec![i, i]), -1.0);
    }
    g
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, deg: usize) -> Word {
    Word::new((0..deg).map(|_| rng.random_range(1..=n as u16)).collect::<Vec<_>>())
}

/// A sparse random symmetric polynomial of degree at most 4.
fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, terms: usize) -> NcPoly {
    let mut f = NcPoly::zero(n);
    for _ in 0..terms {
        let deg = rng.random_range(0..=4);
        f.add_term(random_word(rng, n, deg), rng.random_range(-1.0..1.0));
    }
    f.symmetrize()
}

// ---------------------------------------------------------------------------

fn worked_eigen() -> Outcome {
    let pr = constrained_example();
    let ts = bound(&pr, &spec(Mode::Eigen, Sparsity::Ts, Some(2)), &Settings::default());
    let dense = bound(&pr, &spec(Mode::Eigen, Sparsity::Dense, Some(2)), &Settings::default());
    ensure((ts.opt + 1.0).abs() <= 1e-4, format!("ts bound {}", ts.opt))?;
    ensure((dense.opt + 1.0).abs() <= 1e-4, format!("dense bound {}", dense.opt))?;
    Ok(format!("ts {:.6}, dense {:.6}", ts.opt, dense.opt))
}

fn worked_trace() -> Outcome {
    let pr = constrained_example();
    let ts = bound(&pr, &spec(Mode::Trace, Sparsity::Ts, Some(2)), &Settings::default());
    let dense = bound(&pr, &spec(Mode::Trace, Sparsity::Dense, Some(2)), &Settings::default());
    ensure((ts.opt + 1.0).abs() <= 1e-4, format!("ts bound {}", ts.opt))?;
    ensure((dense.opt + 1.0).abs() <= 1e-4, format!("dense bound {}", dense.opt))?;
    Ok(format!("ts {:.6}, dense {:.6}", ts.opt, dense.opt))
}

fn unconstrained_example() -> Outcome {
    let f = unconstrained_poly();
    let chip = newton_chip(&f).unwrap();
    let got: BTreeSet<Word> = chip.words().iter().cloned().collect();
    let want: BTreeSet<Word> =
        [vec![], vec![1], vec![2], vec![3], vec![2, 1], vec![2, 3]].into_iter().map(Word::new).collect();
    ensure(got == want, format!("chip {got:?}"))?;

    let pair = |a: &[u16], b: &[u16]| {
        let (u, v) = (Word::new(a.to_vec()), Word::new(b.to_vec()));
        if u < v { (u, v) } else { (v, u) }
    };
    let edges: BTreeSet<(Word, Word)> =
        tsp_graph_unconstrained(&f, &chip).word_edges().into_iter().map(|(u, v)| pair(u.letters(), v.letters())).collect();
    let want: BTreeSet<(Word, Word)> = [
        pair(&[], &[2, 1]),
        pair(&[], &[2, 3]),
        pair(&[1], &[2, 1]),
        pair(&[1], &[2]),
        pair(&[2], &[3]),
        pair(&[2], &[2, 3]),
        pair(&[3], &[2, 3]),
    ]
    .into_iter()
    .collect();
    ensure(edges == want, format!("initial edges {edges:?}"))?;

    // Extension pinned to the one drawn in the worked example: {1,X}, {1,Y} added.
    let pr = Problem::unconstrained(f.clone());
    let s0 = IterState::unconstrained(&f, chip, Canon::Symmetric);
    let pin = |blk: &TsBlock, g: &Graph| {
        let mut h = g.clone();
        let nodes = &blk.graph.nodes;
        let one = nodes.index_of(&Word::one()).unwrap();
        h.add_edge(one, nodes.index_of(&Word::letter(1)).unwrap());
        h.add_edge(one, nodes.index_of(&Word::letter(2)).unwrap());
        let c = maximal_cliques(&h).unwrap();
        (h, c)
    };
    let s1 = s0.step_with(pin);
    let pinned = solve_moment(assemble_blocks(&pr, Canon::Symmetric, &plans_from_state(&s1)), &Settings::default());
    ensure((pinned.opt + 0.00355).abs() <= 1e-3, format!("pinned ts bound {}", pinned.opt))?;
    let dense = bound(&pr, &RelaxationSpec::default(), &Settings::default());
    ensure(dense.opt.abs() <= 1e-4, format!("dense bound {}", dense.opt))?;
    Ok(format!("chip and 7 edges match, pinned ts {:.6}, dense {:.6}", pinned.opt, dense.opt))
}

fn banded_over_box() -> Outcome {
    let pr = Problem::new(broyden_banded(5).unwrap(), box_constraints(5));
    let mut parts = Vec::new();
    for (mode, want_mb) in [(Mode::Eigen, 11), (Mode::Trace, 19)] {
        let s = RelaxationSpec { extension: ExtensionKind::MinDegree, ..spec(mode, Sparsity::CsTs, Some(3)) };
        let cs = bound(&pr, &s, &Settings::default());
        let dense = bound(&pr, &spec(mode, Sparsity::Dense, Some(3)), &Settings::default());
        ensure((cs.opt - 3.113).abs() <= 1e-2, format!("{mode:?} cs-ts bound {}", cs.opt))?;
        ensure((dense.opt - cs.opt).abs() <= 1e-2, format!("{mode:?} dense {} vs cs-ts {}", dense.opt, cs.opt))?;
        ensure(cs.mb == want_mb, format!("{mode:?} mb {} (expected {want_mb})", cs.mb))?;
        parts.push(format!("{} {:.4}/mb {} dense {:.4}", mode.as_str(), cs.opt, cs.mb, dense.opt));
    }
    Ok(parts.join(", "))
}

fn benchmark_rows() -> Outcome {
    let t = Instant::now();
    let rows: [(&str, f64, f64, usize); 5] = [
        ("broyden-banded", 0.0, 1e-3, 15),
        ("chained-singular", 0.0, 1e-2, 3),
        ("generalized-rosenbrock", 1.0, 1e-3, 3),
        ("chained-wood", 1.0, 1e-3, 3),
        ("broyden-tridiagonal", 0.0, 1e-3, 5),
    ];
    let mut parts = Vec::new();
    for (name, want, tol, want_mb) in rows {
        let pr = Problem::unconstrained(benchmark(name, 20).unwrap());
        let b = bound(&pr, &spec(Mode::Eigen, Sparsity::Ts, None), &Settings::default());
        ensure((b.opt - want).abs() <= tol, format!("{name}: bound {}", b.opt))?;
        ensure(b.mb == want_mb, format!("{name}: mb {} (expected {want_mb})", b.mb))?;
        parts.push(format!("{name} {:.4}/{}", b.opt, b.mb));
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(secs < 120.0, format!("took {secs:.1} s"))?;
    Ok(format!("{} in {secs:.1} s", parts.join(", ")))
}

fn monotonicity() -> Outcome {
    let mut worst: f64 = f64::NEG_INFINITY;
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..=4);
        let pr = Problem::new(random_symmetric(&mut rng, n, 6), vec![ball(n)]);
        for mode in [Mode::Eigen, Mode::Trace] {
            let dense = bound(&pr, &spec(mode, Sparsity::Dense, Some(2)), &tight()).opt;
            let mut prev = f64::NEG_INFINITY;
            for k in 1..=3 {
                let s = RelaxationSpec { ts_order: TsOrder::Fixed(k), ..spec(mode, Sparsity::Ts, Some(2)) };
                let v = bound(&pr, &s, &tight()).opt;
                ensure(v >= prev - 1e-6, format!("seed {seed} {mode:?}: k={k} bound {v} below {prev}"))?;
                ensure(v <= dense + 1e-6, format!("seed {seed} {mode:?}: k={k} bound {v} above dense {dense}"))?;
                worst = worst.max(prev - v).max(v - dense);
                prev = v;
            }
        }
    }
    Ok(format!("40 hierarchies, worst violation {worst:.1e}"))
}

fn maximal_extension() -> Outcome {
    let mut worst: f64 = 0.0;
    for seed in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
        let n = rng.random_range(2..=3);
        let pr = Problem::new(random_symmetric(&mut rng, n, 6), vec![ball(n)]);
        for mode in [Mode::Eigen, Mode::Trace] {
            let s = RelaxationSpec {
                ts_order: TsOrder::Stabilize,
                extension: ExtensionKind::Maximal,
                ..spec(mode, Sparsity::Ts, Some(2))
            };
            let ts = bound(&pr, &s, &tight()).opt;
            let dense = bound(&pr, &spec(mode, Sparsity::Dense, Some(2)), &tight()).opt;
            ensure((ts - dense).abs() <= 1e-5, format!("seed {seed} {mode:?}: ts {ts} dense {dense}"))?;
            worst = worst.max((ts - dense).abs());
        }
    }
    Ok(format!("20 pairs, max gap {worst:.1e}"))
}

/// `c - b'A^{-1}b / 4` through a Cholesky factorization of `A`.
fn quadratic_minimum(a: &[Vec<f64>], b: &[f64], c: f64) -> f64 {
    let n = b.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            l[i][j] = if i == j { (a[i][i] - s).sqrt() } else { (a[i][j] - s) / l[j][j] };
        }
    }
    // b'A^{-1}b = |L^{-1} b|^2
    let mut z = vec![0.0; n];
    for i in 0..n {
        z[i] = (b[i] - (0..i).map(|k| l[i][k] * z[k]).sum::<f64>()) / l[i][i];
    }
    c - 0.25 * z.iter().map(|v| v * v).sum::<f64>()
}

fn quadratic_exactness() -> Outcome {
    let mut worst: f64 = 0.0;
    for seed in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(200 + seed);
        let n = rng.random_range(1..=5);
        let g: Vec<Vec<f64>> = (0..n).map(|_| (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()).collect();
        let a: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| g[i][k] * g[j][k]).sum::<f64>() + if i == j { 0.5 } else { 0.0 })
                    .collect()
            })
            .collect();
        let b: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
        let c = rng.random_range(-1.0..1.0);
        let mut f = NcPoly::constant(n, c);
        for i in 0..n {
            f.add_term(Word::letter(i as u16 + 1), b[i]);
            for j in 0..n {
                f.add_term(Word::new(vec![i as u16 + 1, j as u16 + 1]), a[i][j]);
            }
        }
        let want = quadratic_minimum(&a, &b, c);
        let got = bound(&Problem::unconstrained(f), &spec(Mode::Eigen, Sparsity::Ts, None), &tight()).opt;
        ensure((got - want).abs() <= 1e-5, format!("seed {seed}: bound {got}, minimum {want}"))?;
        worst = worst.max((got - want).abs());
    }
    Ok(format!("10 quadratics, max error {worst:.1e}"))
}

fn chip_soundness() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut reduced = 0;
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(300 + seed);
        let n = rng.random_range(1..=3);
        let mut f = NcPoly::constant(n, rng.random_range(-1.0..1.0));
        for _ in 0..rng.random_range(1..=3) {
            let mut q = NcPoly::zero(n);
            for _ in 0..rng.random_range(1..=3) {
                let deg = rng.random_range(0..=2);
                q.add_term(random_word(&mut rng, n, deg), rng.random_range(-1.0..1.0));
            }
            f = &f + &(&q.star() * &q);
        }
        if f.degree() % 2 == 1 {
            continue;
        }
        let pr = Problem::unconstrained(f);
        let chip = bound(&pr, &RelaxationSpec::default(), &tight());
        let full_nodes = standard_basis(n, pr.f.degree() / 2).words().to_vec();
        let full_len = full_nodes.len();
        let full = solve_moment(assemble_blocks(&pr, Canon::Symmetric, &[BlockPlan { constraint: 0, nodes: full_nodes }]), &tight());
        ensure((chip.opt - full.opt).abs() <= 1e-5, format!("seed {seed}: chip {} full {}", chip.opt, full.opt))?;
        if chip.mb < full_len {
            reduced += 1;
        }
        worst = worst.max((chip.opt - full.opt).abs());
    }
    Ok(format!("20 quartics ({reduced} with a strictly smaller basis), max gap {worst:.1e}"))
}

fn duality_certificate() -> Outcome {
    let pr = constrained_example();
    let mut worst_gap: f64 = 0.0;
    let mut worst_res: f64 = 0.0;
    for mode in [Mode::Eigen, Mode::Trace] {
        for sparsity in [Sparsity::Ts, Sparsity::Dense] {
            let b = bound(&pr, &spec(mode, sparsity, Some(2)), &Settings::default());
            let gap = (b.sol.primal_objective - b.sol.dual_objective).abs();
            let res = verify_sohs(&pr.f, &b.sdp, &b.sol);
            ensure(gap <= 1e-5 * (1.0 + b.opt.abs()), format!("{mode:?} {sparsity:?}: gap {gap}"))?;
            ensure(res <= 1e-3, format!("{mode:?} {sparsity:?}: certificate residual {res}"))?;
            worst_gap = worst_gap.max(gap);
            worst_res = worst_res.max(res);
        }
    }
    Ok(format!("4 relaxations, max gap {worst_gap:.1e}, max certificate residual {worst_res:.1e}"))
}

/// Minimizes `c'y` over `{y : a0_r + a_r'y >= 0}` by enumerating vertices.
fn lp_by_vertices(c: &[f64], rows: &[(f64, Vec<f64>)]) -> f64 {
    let m = c.len();
    let mut best = f64::INFINITY;
    let mut pick: Vec<usize> = (0..m).collect();
    loop {
        // Solve a_r'y = -a0_r for the picked rows by Gaussian elimination.
        let mut aug: Vec<Vec<f64>> = pick.iter().map(|&r| {
            let mut row = rows[r].1.clone();
            row.push(-rows[r].0);
            row
        }).collect();
        let mut singular = false;
        for col in 0..m {
            let piv = (col..m).max_by(|&i, &j| aug[i][col].abs().total_cmp(&aug[j][col].abs())).unwrap();
            if aug[piv][col].abs() < 1e-12 {
                singular = true;
                break;
            }
            aug.swap(col, piv);
            for i in 0..m {
                if i != col {
                    let t = aug[i][col] / aug[col][col];
                    for j in col..=m {
                        aug[i][j] -= t * aug[col][j];
                    }
                }
            }
        }
        if !singular {
            let y: Vec<f64> = (0..m).map(|i| aug[i][m] / aug[i][i]).collect();
            let feasible = rows.iter().all(|(a0, a)| a0 + a.iter().zip(&y).map(|(u, v)| u * v).sum::<f64>() >= -1e-9);
            if feasible {
                best = best.min(c.iter().zip(&y).map(|(u, v)| u * v).sum());
            }
        }
        // next combination
        let mut i = m;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if pick[i] < rows.len() - m + i {
                pick[i] += 1;
                for j in i + 1..m {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn solver_oracle() -> Outcome {
    let mut worst: f64 = 0.0;
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(400 + seed);
        let m = rng.random_range(1..=3);
        let mut sdp = BlockSdp {
            objective: (0..m).map(|_| rng.random_range(-1.0..1.0)).collect(),
            columns: vec![Vec::new(); m],
            ..Default::default()
        };
        let mut rows = Vec::new();
        let mut push = |sdp: &mut BlockSdp, block: usize, r: usize, a0: f64, a: Vec<f64>| {
            let e = |val| SdpEntry { block: block as u32, row: r as u32, col: r as u32, val };
            sdp.constant.push(e(a0));
            for (i, &v) in a.iter().enumerate() {
                sdp.columns[i].push(e(v));
            }
            rows.push((a0, a));
        };
        // box 1 -+ y_i >= 0 keeps the problem bounded
        sdp.block_sizes.push(2 * m);
        for i in 0..m {
            for (r, s) in [(2 * i, 1.0), (2 * i + 1, -1.0)] {
                let mut a = vec![0.0; m];
                a[i] = s;
                push(&mut sdp, 0, r, 1.0, a);
            }
        }
        for _ in 0..rng.random_range(1..=3) {
            let block = sdp.block_sizes.len();
            let size = rng.random_range(1..=3);
            sdp.block_sizes.push(size);
            for r in 0..size {
                let a = (0..m).map(|_| rng.random_range(-1.0..1.0)).collect();
                push(&mut sdp, block, r, rng.random_range(0.1..1.0), a);
            }
        }
        let want = lp_by_vertices(&sdp.objective, &rows);
        let sol = solve(&sdp, &tight()).unwrap();
        ensure(sol.status == SolveStatus::Optimal, format!("seed {seed}: status {:?}", sol.status))?;
        let got = sol.primal_objective;
        ensure((got - want).abs() <= 1e-5, format!("seed {seed}: solver {got}, vertices {want}"))?;
        worst = worst.max((got - want).abs());
    }
    Ok(format!("20 programs, max error {worst:.1e}"))
}

fn sdpa_export() -> Outcome {
    let pr = constrained_example();
    let s = spec(Mode::Eigen, Sparsity::Dense, Some(2));
    let first = sdpa_string(&to_block_sdp(&relax(&pr, &s).unwrap().sdp));
    let second = sdpa_string(&to_block_sdp(&relax(&pr, &s).unwrap().sdp));
    ensure(first == second, "two assemblies exported differently")?;

    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("ex.txt");
    std::fs::write(&input, "[objective]\n2 - x1^2 + x1x2^2x1 - x2^2\n[constraints]\n4 - x1^2 - x2^2\nx1x2 + x2x1 - 2\n")
        .unwrap();
    let export = |name: &str| {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_ncsos"))
            .args(["--input", input.to_str().unwrap(), "--order", "2", "--solver", "sdpa-export", "--sdpa-file"])
            .arg(&out)
            .output()
            .unwrap()
            .status;
        assert!(status.success());
        std::fs::read(out).unwrap()
    };
    let (a, b) = (export("a.dat-s"), export("b.dat-s"));
    ensure(a == b, "two CLI runs exported different bytes")?;
    ensure(a == first.as_bytes(), "CLI export differs from the library export")?;

    let script = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/sdpa_oracle.py");
    let has_cvxpy = Command::new("python3").args(["-c", "import cvxpy"]).output().is_ok_and(|o| o.status.success());
    if !has_cvxpy {
        return Ok(format!("{} bytes, deterministic; external solve skipped (python3 with cvxpy not found)", a.len()));
    }
    let out = Command::new("python3").arg(&script).arg(dir.path().join("a.dat-s")).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    let mut it = text.split_whitespace();
    let (status, value) = (it.next().unwrap_or(""), it.next().and_then(|v| v.parse::<f64>().ok()));
    ensure(out.status.success() && status == "optimal", format!("external solve failed: {text}"))?;
    let value = value.unwrap();
    ensure((value + 1.0).abs() <= 1e-4, format!("external optimum {value}"))?;
    Ok(format!("{} bytes, deterministic; external solver optimum {value:.6}", a.len()))
}

/// Broyden banded is left out: the first-order solver's gap tail needs about
/// 16 minutes at n=100.
fn smoke_n100() -> Outcome {
    let t = Instant::now();
    let mut parts = Vec::new();
    for name in ["chained-singular", "generalized-rosenbrock", "chained-wood", "broyden-tridiagonal"] {
        let pr = Problem::unconstrained(benchmark(name, 100).unwrap());
        let b = bound(&pr, &spec(Mode::Eigen, Sparsity::Ts, None), &Settings::default());
        parts.push(format!("{name} {:.4}/{}", b.opt, b.mb));
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(secs < 300.0, format!("took {secs:.1} s"))?;
    Ok(format!("{} in {secs:.1} s", parts.join(", ")))
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 13] = [
        ("1", "constrained eigenvalue example", worked_eigen),
        ("2", "constrained trace example", worked_trace),
        ("3", "unconstrained example: chip, initial graph, pinned extension", unconstrained_example),
        ("4", "broyden banded over the box, n=5", banded_over_box),
        ("5", "benchmark rows, n=20", benchmark_rows),
        ("6", "monotonicity in k", monotonicity),
        ("7", "maximal extension reaches the dense bound", maximal_extension),
        ("8", "quadratic exactness", quadratic_exactness),
        ("9", "newton chip soundness", chip_soundness),
        ("10", "duality gap and certificate", duality_certificate),
        ("11", "solver against a vertex-enumeration oracle", solver_oracle),
        ("12", "sdpa export", sdpa_export),
        ("smoke", "unconstrained ts benchmarks at n=100", smoke_n100),
    ];
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, name, run) in criteria {
        if let Some(f) = &filter {
            if !name.contains(f.as_str()) && id != f {
                continue;
            }
        }
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS criterion {id} ({name}): {detail} [{secs:.1} s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}): {detail} [{secs:.1} s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
