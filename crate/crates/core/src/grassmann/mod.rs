//! Grassmannian combinatorics: labels, weak separation, rectangle seeds,
//! windows of the infinite quiver, r-maps, Pluecker relations, the minors
//! oracle, square moves and Laurent expansions.

pub mod expansion;
pub mod oracle;
pub mod partition;
pub mod quad;
pub mod quiver;
pub mod rect;
pub mod relations;
pub mod rmap;
pub mod weaksep;

pub use expansion::{laurent_expansion, laurent_expansion_with, ExpansionOptions};
pub use oracle::MinorsOracle;
pub use partition::{FrobeniusForm, MayaSeq, Partition};
pub use quad::quad_quiver;
pub use quiver::PlueckerQuiver;
pub use rect::{finite_label, q_infty_window, rect_seed, WindowSeed};
pub use relations::{diag_relation, hook_relation, pluecker_relation, PlueckerRelation};
pub use rmap::r_map;
pub use weaksep::weakly_separated;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrassError {
    #[error("partition does not fit the requested box")]
    DoesNotFitBox,
    #[error("target box must contain the source box")]
    BoxShrinks,
    #[error("vertex is not a quadrilateral in Pluecker position: {0}")]
    NotQuadrilateral(String),
    #[error("mutation at a window-boundary vertex is not defined: {0}")]
    WindowBoundary(String),
    #[error("cluster search exhausted without reaching the target label")]
    SearchExhausted,
    #[error("invalid Maya sequence: {0}")]
    InvalidMaya(String),
    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),
    #[error("cannot parse partition literal `{0}`")]
    BadPartitionLiteral(String),
    #[error("oracle verification failed: {0}")]
    OracleMismatch(String),
    #[error("seed error: {0}")]
    Seed(#[from] crate::seed::SeedError),
    #[error("arithmetic error: {0}")]
    Laurent(#[from] crate::laurent::LaurentError),
}
