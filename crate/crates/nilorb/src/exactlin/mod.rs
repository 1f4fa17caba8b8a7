//! Exact scalar arithmetic over Q, Q(i) and the rational quaternions, and exact
//! linear algebra on dense matrices: rank, real null-space dimension and
//! congruence signature.

mod elim;
mod matrix;
mod quaternion;

pub use elim::{congruence_signature, nullspace_dim_real, rank};
pub use matrix::ExactMatrix;
pub use quaternion::{rat, ratio, Quaternion, Rational, ScalarField};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactLinError {
    #[error("matrix is not self-adjoint (σ(G)ᵗ ≠ G)")]
    NotSelfAdjoint,
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("matrix is not square ({rows}×{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry {value} does not lie in {field}")]
    FieldViolation { field: ScalarField, value: String },
}
