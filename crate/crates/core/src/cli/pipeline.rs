//! Parse or generate, relax, solve or export, report.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ncalg::ParseError;
use crate::relax::{relax, report_structure, Problem, RelaxError, Relaxation, RelaxationSpec};
use crate::sdpcore::{solve, to_block_sdp, verify_sohs, write_sdpa, BlockSdp, SdpSolution, Settings, SolveError};

use super::generators::{benchmark, box_constraints, random_clique_instance, GenError};
use super::problem_file::parse_problem;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Generator(#[from] GenError),
    #[error(transparent)]
    Relax(#[from] RelaxError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Where the problem comes from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    File(PathBuf),
    /// A named benchmark; `boxed` adds the constraints `1 - X_i^2`, `X_i - 1/3`.
    Bench { name: String, n: usize, boxed: bool },
    /// `p` overlapping cliques of 15 variables with one ball per clique.
    Random { p: usize, seed: u64 },
}

impl Source {
    pub fn load(&self) -> Result<Problem, PipelineError> {
        Ok(match self {
            Source::File(path) => {
                let text = std::fs::read_to_string(path)?;
                parse_problem(&text).map_err(|source| PipelineError::Parse { path: path.display().to_string(), source })?
            }
            Source::Bench { name, n, boxed } => {
                let f = benchmark(name, *n)?;
                let s = if *boxed { box_constraints(*n) } else { Vec::new() };
                Problem::new(f, s)
            }
            Source::Random { p, seed } => {
                let (f, s) = random_clique_instance(*p, *seed);
                Problem::new(f, s)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    Internal,
    /// Write the SDP in SDPA sparse format instead of solving it.
    SdpaExport(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub source: Source,
    pub spec: RelaxationSpec,
    pub backend: Backend,
    pub settings: Settings,
    /// Report destination; stdout when absent.
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

/// One row of results.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelaxationReport {
    pub n: usize,
    pub mode: String,
    pub sparsity: String,
    pub dhat: usize,
    pub k: usize,
    pub mb: usize,
    /// Primal objective (the lower bound); absent when the SDP was exported.
    pub opt: Option<f64>,
    pub dual: Option<f64>,
    pub status: String,
    pub t_assemble: f64,
    pub t_solve: f64,
    pub histogram: BTreeMap<usize, usize>,
    pub num_vars: usize,
    pub iterations: usize,
    pub certificate_residual: Option<f64>,
}

impl RelaxationReport {
    pub fn is_optimal(&self) -> bool {
        self.status == "optimal"
    }
}

/// Everything produced by one run.
pub struct RunOutcome {
    pub problem: Problem,
    pub relaxation: Relaxation,
    pub block_sdp: BlockSdp,
    pub solution: Option<SdpSolution>,
    pub report: RelaxationReport,
}

/// Relaxes and solves (or exports) an already loaded problem.
pub fn run_problem(
    problem: Problem,
    spec: &RelaxationSpec,
    backend: &Backend,
    settings: &Settings,
) -> Result<RunOutcome, PipelineError> {
    let t0 = Instant::now();
    let relaxation = relax(&problem, spec)?;
    let block_sdp = to_block_sdp(&relaxation.sdp);
    let t_assemble = t0.elapsed().as_secs_f64();
    let st = report_structure(&relaxation.sdp);
    let mut report = RelaxationReport {
        n: problem.n,
        mode: spec.mode.as_str().to_string(),
        sparsity: spec.sparsity.as_str().to_string(),
        dhat: relaxation.dhat,
        k: relaxation.k,
        mb: st.mb,
        opt: None,
        dual: None,
        status: "exported".to_string(),
        t_assemble,
        t_solve: 0.0,
        histogram: st.histogram,
        num_vars: st.num_vars,
        iterations: 0,
        certificate_residual: None,
    };
    let solution = match backend {
        Backend::SdpaExport(path) => {
            let file = std::fs::File::create(path)?;
            let mut w = std::io::BufWriter::new(file);
            write_sdpa(&block_sdp, &mut w)?;
            w.flush()?;
            None
        }
        Backend::Internal => {
            let t1 = Instant::now();
            let sol = solve(&block_sdp, settings)?;
            report.t_solve = t1.elapsed().as_secs_f64();
            report.opt = Some(sol.primal_objective);
            report.dual = Some(sol.dual_objective);
            report.status = sol.status.as_str().to_string();
            report.iterations = sol.iterations;
            report.certificate_residual = Some(verify_sohs(&problem.f, &relaxation.sdp, &sol));
            Some(sol)
        }
    };
    Ok(RunOutcome { problem, relaxation, block_sdp, solution, report })
}

pub fn run_pipeline(cfg: &RunConfig) -> Result<RunOutcome, PipelineError> {
    let problem = cfg.source.load()?;
    run_problem(problem, &cfg.spec, &cfg.backend, &cfg.settings)
}

/// CSV columns, in order.
pub const CSV_HEADER: [&str; 10] = ["n", "mode", "sparsity", "dhat", "k", "mb", "opt", "status", "t_assemble", "t_solve"];

/// Writes one CSV row, preceded by the header when `header` is set.
pub fn write_csv<W: Write>(report: &RelaxationReport, header: bool, out: W) -> Result<(), PipelineError> {
    let mut w = csv::Writer::from_writer(out);
    if header {
        w.write_record(CSV_HEADER)?;
    }
    w.write_record([
        report.n.to_string(),
        report.mode.clone(),
        report.sparsity.clone(),
        report.dhat.to_string(),
        report.k.to_string(),
        report.mb.to_string(),
        report.opt.map(|v| format!("{v:.6}")).unwrap_or_default(),
        report.status.clone(),
        format!("{:.3}", report.t_assemble),
        format!("{:.3}", report.t_solve),
    ])?;
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(report: &RelaxationReport, mut out: W) -> Result<(), PipelineError> {
    serde_json::to_writer_pretty(&mut out, report)?;
    writeln!(out)?;
    Ok(())
}

/// Writes the report to `cfg.out` or stdout. CSV rows are appended to an
/// existing nonempty file without repeating the header.
pub fn emit_report(cfg: &RunConfig, report: &RelaxationReport) -> Result<(), PipelineError> {
    match &cfg.out {
        None => {
            let stdout = std::io::stdout();
            match cfg.format {
                OutputFormat::Csv => write_csv(report, true, stdout.lock()),
                OutputFormat::Json => write_json(report, stdout.lock()),
            }
        }
        Some(path) => match cfg.format {
            OutputFormat::Csv => {
                let fresh = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
                let file = std::fs::OpenOptions::new().create(true).append(true).open(path)?;
                write_csv(report, fresh, file)
            }
            OutputFormat::Json => write_json(report, std::fs::File::create(path)?),
        },
    }
}
