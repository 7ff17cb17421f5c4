//! Exact computations with finite groups, finite groupoids and their linear
//! representations, aimed at checking Mackey and Green functor identities
//! on small examples.
//!
//! - [`group`]: groups as Cayley tables, subgroups, double cosets, homs
//! - [`groupoid`]: finite groupoids, isocomma squares, skeleta
//! - [`burnside`]: G-sets, tables of marks, crossed Burnside algebras, blocks
//! - [`replib`]: modules, induction and its adjunctions, Mackey and
//!   projection isomorphisms, decomposition, vertices, Green correspondence
//! - [`mackey1`]: ordinary Mackey and Green functors and their axioms
//! - [`verify`]: the verification grid
//!
//! Linear algebra is generic over [`scalar::Ring`] and [`scalar::Field`];
//! [`F2`], [`F3`] and [`Q`] are the usual instances.

pub mod burnside;
pub mod group;
pub mod groupoid;
pub mod mackey1;
pub mod matrix;
pub mod poly;
pub mod replib;
pub mod scalar;
pub mod verify;

pub use group::{FiniteGroup, GroupError, GroupRef, InjectiveHom, Subgroup};
pub use matrix::Matrix;
pub use replib::{Module, ModuleHom};
pub use scalar::{Field, FieldTag, Fp, PrimeField, Rational, Ring};

/// The field with two elements.
pub type F2 = scalar::Fp<2>;
/// The field with three elements.
pub type F3 = scalar::Fp<3>;
/// The rationals.
pub type Q = scalar::Rational;
