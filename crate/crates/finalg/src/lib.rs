//! Finite-dimensional algebras, bimodules, tensor products over a base, and
//! properties of algebra inclusions, all in exact arithmetic.

pub mod algebra;
pub mod bimodule;
pub mod extension;
pub mod module;
pub mod morphism;
pub mod tensor;

pub use algebra::{check_algebra, subalgebra_from_subspace, FinAlgebra};
pub use bimodule::{check_bimodule, BimoduleStructure};
pub use extension::{
    characters_of_split_algebra, equalizer_subspace, extension_tensor_square,
    faithfully_flat_check, primitive_idempotents, purity_check, Purity,
};
pub use module::{
    basis_subset_left_ideals, check_left_module, induce_module, module_pool,
    quotient_by_left_ideal, InducedModule, LeftModule,
};
pub use morphism::{check_morphism, AlgMorphism};
pub use tensor::{
    descend_factorwise, descend_map, descend_to_plain, legwise_product,
    legwise_product_second_reversed, takeuchi_subspace, tensor_chain, tensor_over_A,
    TensorOverA,
};

/// Errors from mismatched bases, failed descents, and unsupported inputs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FinAlgError {
    #[error("operands live over different base algebras")]
    BaseMismatch,
    #[error("the inclusion is not injective")]
    NotMono,
    #[error("unsupported base algebra: {0}")]
    UnsupportedBase(String),
    #[error("subspace is not closed: {0}")]
    NotClosed(String),
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("map does not descend to the quotient: {0}")]
    NotDescendable(String),
    #[error(transparent)]
    Linalg(#[from] exact_linalg::LinalgError),
}
