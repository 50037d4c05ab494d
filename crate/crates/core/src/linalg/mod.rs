//! Exact linear algebra over the rationals and prime fields.

mod field;
mod generic;
mod mat;
mod prime;
mod rational;

pub use field::Field;
pub use generic::{find_invertible_combination, generic_invertibility, Invertibility, GRID_BUDGET};
pub use mat::{LinalgError, Mat, Rref};
pub use prime::{Fp, ModulusError};
pub use rational::Q;

/// Rank of a list of vectors of equal length.
pub fn rank_of_vectors<F: Field>(vectors: &[Vec<F>], len: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Mat::from_rows(vectors.iter().map(|v| {
        debug_assert_eq!(v.len(), len);
        v.clone()
    }).collect())
    .rank()
}
