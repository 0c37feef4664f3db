//! Finite-dimensional left bialgebroids and left Hopf algebroids by explicit
//! matrices: axiom certification, the ideal/subring correspondences, the
//! Galois connection between them, and the canonical and translation maps.

mod core;
mod correspondence;
mod galois;
mod hopf;
mod verify;

pub use crate::core::LeftBialgebroid;
pub use correspondence::{
    certify_coideal_subring, certify_ideal_coideal, phi_ideal, psi_coinvariants,
    xi_correspondence, CoidealSubring, IdealCoideal, QuotientCoring,
};
pub use galois::{
    basis_subset_subspaces, galois_connection_check, gamma_stability_and_xi, ideal_pool,
    partition_block_subspaces, subring_pool,
};
pub use hopf::{hopf_galois, verify_hopf_galois, HopfGalois, HopfGaloisData};
pub use verify::verify_bialgebroid;

use finalg::FinAlgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BialgebroidError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("input is not certified: {0}")]
    NotCertified(String),
    #[error("structure maps are mutually incoherent: {0}")]
    Incoherent(String),
    #[error(transparent)]
    FinAlg(#[from] FinAlgError),
    #[error(transparent)]
    Linalg(#[from] exact_linalg::LinalgError),
}
