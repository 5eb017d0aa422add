use std::process::ExitCode;

use clap::Parser;
use ncsos::cli::pipeline::emit_report;
use ncsos::cli::{run_pipeline, Args};

fn main() -> ExitCode {
    let cfg = Args::parse().into_config();
    let outcome = match run_pipeline(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit_report(&cfg, &outcome.report) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match outcome.report.status.as_str() {
        "optimal" | "exported" => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    }
}
