//! Exact dense matrices, rank, algebra closure and commutants.

mod echelon;
mod fallback;
mod mat;
mod scalar;
mod span;

use thiserror::Error;

pub use echelon::Echelon;
pub use fallback::{closure_dim, commutant_dimension, probe_points, Dimension, ExactPolicy};
pub use mat::Mat;
pub use scalar::{ExactField, Field, Pivot, Scalar, SparseRow};
pub use span::{
    algebra_closure, all_commute, commutant, commutant_dim, rank, span_contains, span_dim,
    SpanBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("rows have different lengths")]
    Ragged,
    #[error("bad matrix fixture: {0}")]
    Fixture(String),
    #[error("matrix size {d} exceeds the exact-arithmetic threshold {threshold}")]
    ResourceLimit { d: usize, threshold: usize },
}
