//! Ordinary `G`-local Mackey and Green functors as finite matrix data,
//! obtained by decategorifying the representation model (Hom-groups between
//! restricted modules) and from Burnside rings, together with an exhaustive
//! checker for the Mackey axioms, the Green functor laws and the
//! cohomological identity.

mod burnside;
mod check;
mod data;
mod functor;
mod green;
mod hom;

use thiserror::Error;

use crate::burnside::BurnsideError;
use crate::group::GroupError;
use crate::replib::ReplibError;

pub use burnside::burnside_green_functor;
pub use check::{
    cohomological_check, verify_green_axioms, verify_mackey_axioms, AxiomReport, Clause, ClauseSummary, IdentityCheck,
};
pub use data::{FunctorData, LevelData, MapData, ScalarParse};
pub use functor::{Level, OrdinaryMackeyFunctor};
pub use green::{green_from_monoid, GreenFunctorData, Monoid};
pub use hom::hom_decategorify;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MackeyError {
    #[error("not a monoid: {0}")]
    NotAMonoid(String),
    #[error("value does not lie in the level of the subgroup {0:?}")]
    NotInLevel(Vec<usize>),
    #[error("malformed functor data: {0}")]
    Malformed(String),
    #[error(transparent)]
    Replib(#[from] ReplibError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
}

#[cfg(test)]
mod tests;
