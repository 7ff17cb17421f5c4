//! G-sets and the Burnside ring via tables of marks, the crossed Burnside
//! algebra, the map `ρ^coh` into the center of the group algebra, and
//! primitive (block) idempotents of commutative algebras.

mod algebra;
mod center;
mod gset;
mod marks;
mod xbur;

use thiserror::Error;

pub use algebra::{primitive_idempotents, primitive_idempotents_rational, FiniteAlgebra, DEFAULT_SEED};
pub use center::{
    block_decomposition, group_algebra, group_algebra_mul, rho_coh, rho_coh_group_vector, Block, CenterOfGroupAlgebra,
};
pub use gset::{gset_induce, gset_restrict, GSet};
pub use marks::{burnside_multiply, table_of_marks, BurnsideElement, TableOfMarks};
pub use xbur::{canonical_pair, crossed_burnside, CentralPair, CrossedBurnsideAlgebra, PairLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("not a group action: {0}")]
    InvalidAction(String),
    #[error("marks vector is not integral at class {class}")]
    NonIntegral { class: usize },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("not split over Q")]
    NotSplitOverRationals,
    #[error("idempotent splitting failed: {0}")]
    SplittingFailed(String),
    #[error("rho^coh check failed: {0}")]
    RhoCoh(String),
}

#[cfg(test)]
mod tests;
