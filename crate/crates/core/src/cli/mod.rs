//! Command-line driver: problem files, generators, the run pipeline and
//! reporting.

pub mod args;
pub mod generators;
pub mod pipeline;
pub mod problem_file;

pub use args::Args;
pub use pipeline::{run_pipeline, run_problem, RelaxationReport, RunConfig, RunOutcome};
pub use problem_file::{format_problem, parse_problem};
