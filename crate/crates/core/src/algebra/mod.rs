//! Finite-dimensional algebras, modules, homological invariants and
//! Auslander-Reiten theory.

#[allow(clippy::module_inception)]
mod algebra;
pub mod approx;
pub mod decompose;
pub mod ar;
pub mod homological;
mod module;
pub mod nakayama;

pub use algebra::{Algebra, AlgebraSpec, NakayamaShape};
pub use module::{hom_basis, iso_test, DirectSum, HomSpace, IsoVerdict, Module, Morphism};
