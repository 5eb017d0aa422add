//! Moment relaxations: dense, term-sparse, correlative-sparse and combined,
//! for eigenvalue and trace minimization.

mod assemble;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::BasisError;
use crate::ncalg::{Canon, NcPoly, Word};
use crate::sparsity::{ExtensionKind, SparsityError};

pub use assemble::{assemble_blocks, plans_from_state, relax, BlockPlan, Relaxation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelaxError {
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Sparsity(#[from] SparsityError),
    #[error("constraint {0} is not symmetric")]
    ConstraintNotSymmetric(usize),
    #[error("relaxation order {given} is below the minimum {min}")]
    OrderTooLow { given: usize, min: usize },
    #[error("sparse order must be at least 1")]
    ZeroSparseOrder,
}

/// Eigenvalue or trace minimization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[serde(rename = "eig")]
    Eigen,
    Trace,
}

impl Mode {
    pub fn canon(self) -> Canon {
        match self {
            Mode::Eigen => Canon::Symmetric,
            Mode::Trace => Canon::Cyclic,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Eigen => "eig",
            Mode::Trace => "trace",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "eig" | "eigen" => Ok(Mode::Eigen),
            "trace" => Ok(Mode::Trace),
            _ => Err(format!("unknown mode '{s}'")),
        }
    }
}

/// Which sparsity to exploit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sparsity {
    Dense,
    Ts,
    Cs,
    CsTs,
}

impl Sparsity {
    pub fn as_str(self) -> &'static str {
        match self {
            Sparsity::Dense => "dense",
            Sparsity::Ts => "ts",
            Sparsity::Cs => "cs",
            Sparsity::CsTs => "cs-ts",
        }
    }

    pub fn uses_terms(self) -> bool {
        matches!(self, Sparsity::Ts | Sparsity::CsTs)
    }

    pub fn uses_cliques(self) -> bool {
        matches!(self, Sparsity::Cs | Sparsity::CsTs)
    }
}

impl std::str::FromStr for Sparsity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dense" => Ok(Sparsity::Dense),
            "ts" => Ok(Sparsity::Ts),
            "cs" => Ok(Sparsity::Cs),
            "cs-ts" => Ok(Sparsity::CsTs),
            _ => Err(format!("unknown sparsity '{s}'")),
        }
    }
}

/// Sparse order: a fixed `k` or iterate until the graphs stop changing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TsOrder {
    Fixed(usize),
    Stabilize,
}

impl std::str::FromStr for TsOrder {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "stabilize" {
            return Ok(TsOrder::Stabilize);
        }
        s.parse().map(TsOrder::Fixed).map_err(|_| format!("invalid sparse order '{s}'"))
    }
}

/// A polynomial optimization problem: minimize `f` subject to `g_j >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub f: NcPoly,
    pub constraints: Vec<NcPoly>,
    pub n: usize,
}

impl Problem {
    pub fn new(f: NcPoly, constraints: Vec<NcPoly>) -> Self {
        let n = constraints.iter().map(NcPoly::n).fold(f.n(), usize::max);
        Problem { f, constraints, n }
    }

    pub fn unconstrained(f: NcPoly) -> Self {
        Problem::new(f, Vec::new())
    }

    /// Smallest admissible relaxation order.
    pub fn min_order(&self, mode: Mode) -> usize {
        let df = match mode {
            Mode::Eigen => self.f.degree(),
            Mode::Trace => self.f.cyclic_degree(),
        };
        self.constraints
            .iter()
            .map(|g| g.degree().div_ceil(2))
            .fold(df.div_ceil(2), usize::max)
    }
}

/// Relaxation parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelaxationSpec {
    pub mode: Mode,
    pub sparsity: Sparsity,
    /// Relaxation order; `None` picks the smallest admissible one.
    pub order: Option<usize>,
    pub ts_order: TsOrder,
    pub extension: ExtensionKind,
    /// Extension used on the variable graph for correlative sparsity.
    pub csp_extension: ExtensionKind,
}

impl Default for RelaxationSpec {
    fn default() -> Self {
        RelaxationSpec {
            mode: Mode::Eigen,
            sparsity: Sparsity::Dense,
            order: None,
            ts_order: TsOrder::Fixed(1),
            extension: ExtensionKind::MinFill,
            csp_extension: ExtensionKind::MinFill,
        }
    }
}

/// One entry `coef * y[var]` at position `(row, col)`, `row <= col`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockEntry {
    pub row: u32,
    pub col: u32,
    pub var: u32,
    pub coef: f64,
}

/// A localizing (or moment) block restricted to a set of basis words.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentBlock {
    /// Index into [`MomentSdp::polys`]; 0 is the unit polynomial.
    pub constraint: usize,
    pub nodes: Vec<Word>,
    pub entries: Vec<BlockEntry>,
}

impl MomentBlock {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }
}

/// Minimize `sum objective[i].1 * y[objective[i].0]` subject to every block being PSD and `y[0] = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSdp {
    pub canon: Canon,
    /// Canonical word of each moment variable; index 0 is the word `1`.
    pub vars: Vec<Word>,
    pub blocks: Vec<MomentBlock>,
    pub objective: Vec<(usize, f64)>,
    /// `polys[0] = 1`, `polys[j] = g_j`.
    pub polys: Vec<NcPoly>,
}

/// Size statistics of a relaxation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub mb: usize,
    /// Block side length to number of blocks.
    pub histogram: BTreeMap<usize, usize>,
    pub num_vars: usize,
    pub num_blocks: usize,
}

pub fn report_structure(sdp: &MomentSdp) -> StructureReport {
    let mut histogram = BTreeMap::new();
    for b in &sdp.blocks {
        *histogram.entry(b.size()).or_insert(0) += 1;
    }
    StructureReport {
        mb: sdp.blocks.iter().map(MomentBlock::size).max().unwrap_or(0),
        histogram,
        num_vars: sdp.vars.len(),
        num_blocks: sdp.blocks.len(),
    }
}
