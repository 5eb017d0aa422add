//! Moment-SOHS relaxations for eigenvalue and trace minimization of
//! noncommutative polynomials, with term and correlative sparsity.

pub mod basis;
pub mod cli;
pub mod ncalg;
pub mod relax;
pub mod sdpcore;
pub mod sparsity;
