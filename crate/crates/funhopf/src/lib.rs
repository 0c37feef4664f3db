//! Function Hopf algebroids of finite groupoids: construction, Hopf ideals,
//! the adjoint coaction, coinvariants, and the normal-ideal correspondence.

pub mod build;
pub mod characters;
pub mod coaction;
pub mod coinv;
pub mod correspondence;
pub mod ideal;
pub mod isotropy;
pub mod normal;
pub mod verify;

pub use build::{arrow_span, build_function_hopf_algebroid, FunctionHopfAlgebroid};
pub use characters::{character_table, characters_and_quotient, CharacterReport, CharacterTable};
pub use coaction::{adjoint_coaction, AdjointCoaction};
pub use coinv::{coinvariants, coproduct_on_coinvariants, Coinvariants};
pub use correspondence::{
    normal_correspondence, quotient_structure_match, CorrespondencePair, CorrespondenceReport,
};
pub use ideal::{classify_ideal, source_target_ideal, HopfIdeal};
pub use isotropy::{isotropy_quotient, IsotropyQuotient};
pub use normal::{check_normal, check_normal_with, NormalityReport};
pub use verify::{translation_matches_antipode, verify_function_hopf};

#[derive(Debug, thiserror::Error)]
pub enum FunHopfError {
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ideal is not a normal Hopf ideal: {0}")]
    NotNormal(String),
    #[error("input is not certified: {0}")]
    NotCertified(String),
    #[error("internal inconsistency: {0}")]
    Incoherent(String),
    #[error(transparent)]
    Groupoid(#[from] groupoid::GroupoidError),
    #[error(transparent)]
    FinAlg(#[from] finalg::FinAlgError),
    #[error(transparent)]
    Linalg(#[from] exact_linalg::LinalgError),
    #[error(transparent)]
    Bialgebroid(#[from] bialgebroid::BialgebroidError),
}
