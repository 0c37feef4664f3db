//! Finite groupoids: validation, isotropy, adjoint action, normal
//! subgroupoids, orbit spaces, translation groupoids, and quotients.

pub mod action;
pub mod core;
pub mod corpus;
pub mod iso;
pub mod normal;
pub mod sub;

pub use crate::core::{
    check_morphism, validate_groupoid, FiniteGroupoid, GroupoidData, GroupoidMorphism,
};
pub use action::{
    adjoint_action, canonical_object_action, left_translation_action, orbit_space,
    translation_groupoid, validate_action, GroupoidAction,
};
pub use iso::are_isomorphic;
pub use normal::{
    enumerate_normal_subgroupoids, enumerate_normal_subgroupoids_bruteforce,
    factor_through_projection, is_normal, left_translation_partition, quotient_groupoid,
    right_translation_partition, QuotientGroupoid,
};
pub use sub::{isotropy, WideSubgroupoid};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupoidError {
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("conflicting composition entries for ({0}, {1})")]
    ConflictingComposition(String, String),
    #[error("composite of ({0}, {1}) is undefined")]
    UndefinedComposite(String, String),
    #[error("not a wide subgroupoid: {0}")]
    NotWide(String),
    #[error("subgroupoid is not normal: {0}")]
    NotNormal(String),
    #[error("invalid groupoid: {0}")]
    Invalid(String),
}
