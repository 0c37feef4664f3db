//! Exact linear algebra over Q and prime fields: matrices, RREF, subspaces, kernels.

pub mod certify;
pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use certify::{Certification, Check};
pub use matrix::{vect, Matrix};
pub use scalar::{eval_poly, field_roots, parse_scalar, Field, Scalar};
pub use subspace::{all_subspaces, image, kernel, QuotientMap, SpanBuilder, Subspace};

/// Errors for dimension or field mismatches between operands.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("field mismatch: {left:?} vs {right:?}")]
    FieldMismatch { left: Field, right: Field },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}
