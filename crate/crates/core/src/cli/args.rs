//! Command-line arguments.

use std::path::PathBuf;

use clap::{ArgGroup, Parser, ValueEnum};

use crate::relax::{Mode, RelaxationSpec, Sparsity, TsOrder};
use crate::sdpcore::Settings;
use crate::sparsity::ExtensionKind;

use super::pipeline::{Backend, OutputFormat, RunConfig, Source};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolverArg {
    Internal,
    SdpaExport,
}

/// Lower bounds for eigenvalue and trace minimization of noncommutative
/// polynomials.
#[derive(Debug, Parser)]
#[command(name = "ncsos", version)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "bench", "random"])))]
pub struct Args {
    /// Problem file with [objective] and [constraints] sections.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Benchmark polynomial: broyden-banded, chained-singular,
    /// generalized-rosenbrock, chained-wood or broyden-tridiagonal.
    #[arg(long, value_name = "NAME", requires = "n")]
    pub bench: Option<String>,
    /// Number of variables of the benchmark.
    #[arg(long)]
    pub n: Option<usize>,
    /// Add the box constraints 1 - X_i^2 >= 0 and X_i - 1/3 >= 0.
    #[arg(long = "box", requires = "bench")]
    pub boxed: bool,
    /// Random quartic over overlapping 15-variable cliques with ball constraints.
    #[arg(long, requires = "p")]
    pub random: bool,
    /// Number of cliques of the random instance.
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// eig or trace.
    #[arg(long, default_value = "eig")]
    pub mode: Mode,
    /// dense, ts, cs or cs-ts.
    #[arg(long, default_value = "dense")]
    pub sparsity: Sparsity,
    /// Relaxation order; defaults to the smallest admissible one.
    #[arg(long)]
    pub order: Option<usize>,
    /// Sparse order k, or "stabilize".
    #[arg(long, default_value = "1")]
    pub ts_order: TsOrder,
    /// Chordal extension for term sparsity: maximal, min-fill or min-degree.
    #[arg(long, default_value = "min-fill")]
    pub extension: ExtensionKind,
    /// Chordal extension for the variable graph.
    #[arg(long, default_value = "min-fill")]
    pub csp_extension: ExtensionKind,

    #[arg(long, value_enum, default_value = "internal")]
    pub solver: SolverArg,
    /// Destination of the SDPA file for --solver sdpa-export.
    #[arg(long, value_name = "FILE", required_if_eq("solver", "sdpa-export"))]
    pub sdpa_file: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = 200_000)]
    pub max_iter: usize,
    /// Print solver progress every this many iterations.
    #[arg(long, default_value_t = 0)]
    pub log_every: usize,

    /// Report file; CSV rows are appended. Defaults to stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl Args {
    pub fn into_config(self) -> RunConfig {
        let source = if let Some(path) = self.input {
            Source::File(path)
        } else if let Some(name) = self.bench {
            Source::Bench { name, n: self.n.unwrap_or(0), boxed: self.boxed }
        } else {
            Source::Random { p: self.p.unwrap_or(0), seed: self.seed }
        };
        let backend = match self.solver {
            SolverArg::Internal => Backend::Internal,
            SolverArg::SdpaExport => Backend::SdpaExport(self.sdpa_file.unwrap_or_default()),
        };
        RunConfig {
            source,
            spec: RelaxationSpec {
                mode: self.mode,
                sparsity: self.sparsity,
                order: self.order,
                ts_order: self.ts_order,
                extension: self.extension,
                csp_extension: self.csp_extension,
            },
            backend,
            settings: Settings { tol: self.tol, max_iter: self.max_iter, log_every: self.log_every, ..Settings::default() },
            out: self.out,
            format: match self.format {
                FormatArg::Csv => OutputFormat::Csv,
                FormatArg::Json => OutputFormat::Json,
            },
        }
    }
}
