//! Sparsity patterns: term sparsity graphs, their support and chordal
//! extensions, and correlative sparsity.

mod csp;
mod graph;
mod iterate;
mod tsp;

use thiserror::Error;

pub use csp::{csp_graph, decompose_csp, CspDecomposition};
pub use graph::{chordal_extension, maximal_cliques, CliqueSet, ExtensionKind, Graph};
pub use iterate::{half_degree, IterState, TsBlock, TsSetup};
pub use tsp::{
    cyclic_support_extension, cyclic_tsp_graph, squares, support_extension, tsp_graph_constrained, tsp_graph_on,
    tsp_graph_unconstrained, MonGraph,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SparsityError {
    #[error("graph is not chordal")]
    NotChordal,
    #[error("constraint {0} is not covered by any variable clique")]
    UncoveredConstraint(usize),
}
