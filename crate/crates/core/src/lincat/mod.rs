//! Finite k-linear categories given by objects in a module category, their
//! ideal quotients, and functor modules over them.

mod category;
pub mod functor;
mod gamma;
pub mod resolution;
pub mod weak_kernel;

pub use category::{HomClasses, LinCat};
pub use gamma::CategoryAlgebra;
