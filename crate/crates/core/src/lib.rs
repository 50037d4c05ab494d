//! Exact homological algebra for finite-dimensional algebras and finite
//! k-linear categories: approximations, functor-category resolutions and
//! singular-equivalence certificates.

pub mod ab;
pub mod algebra;
mod error;
pub mod io;
pub mod lincat;
pub mod linalg;
pub mod singeq;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear_algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/categories.md")]
    mod categories {}
    #[doc = include_str!("../../../book/src/cotilting.md")]
    mod cotilting {}
    #[doc = include_str!("../../../book/src/singular_equivalence.md")]
    mod singular_equivalence {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
