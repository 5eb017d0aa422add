//! Block semidefinite programs: data model, a first-order solver, SDPA
//! export and certificate checking.

mod admm;
mod model;
mod sdpa;
mod verify;

pub use admm::{project_psd, solve, Residuals, SdpSolution, Settings, SolveError, SolveStatus};
pub use model::{to_block_sdp, BlockSdp, SdpEntry};
pub use sdpa::{sdpa_string, write_sdpa};
pub use verify::verify_sohs;
