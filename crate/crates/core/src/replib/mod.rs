//! Linear representations of finite groups: modules given by matrices,
//! restriction and induction with their units and counits, the Mackey
//! and projection isomorphisms, Krull-Schmidt decomposition over `F_p`,
//! vertices, Green correspondence and blocks.

mod adjunction;
mod decompose;
mod frobenius;
mod hom;
mod module;
mod vertex;

use thiserror::Error;

use crate::group::GroupError;

pub use adjunction::{
    check_projection, counit_left, counit_right, mackey_iso, projection_map, projection_map_mirror, unit_counit,
    unit_left, unit_right, MackeyIso, MackeyReport, MackeySummand, ProjectionReport, TriangleReport, UnitCounit,
};
pub use decompose::{
    are_isomorphic_modules, decompose, indecomposable_isomorphism, is_summand, Decomposition, Piece, Summand,
    SummandWitness,
};
pub use frobenius::{frobenius_object, FrobeniusObject, FrobeniusReport};
pub use hom::{hom_dimension, hom_space};
pub use module::{conj_module, induce, induce_map, permutation_module, restrict, Module, ModuleHom};
pub use vertex::{
    block_of, green_census, green_correspondent, indecomposable_summands, p_subgroup_classes, permutation_modules,
    relatively_projective, vertex, vertex_of_indecomposable, FoundIndecomposable, GreenCensus, GreenCorrespondence,
    Vertex,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplibError {
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("not a module homomorphism: {0}")]
    NotAHom(String),
    #[error("modules live over different groups")]
    GroupMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("direct sum of no modules")]
    EmptySum,
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("vertex computation failed: {0}")]
    Vertex(String),
    #[error("Green correspondence failed: {0}")]
    Green(String),
    #[error("block assignment failed: {0}")]
    Block(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[cfg(test)]
mod tests;
