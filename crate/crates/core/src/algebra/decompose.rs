//! Krull-Schmidt decomposition against a complete list of indecomposables.
//!
//! For a representation-finite algebra with indecomposables `U_1..U_r`, the
//! matrix `H[j][i] = dim Hom(U_j, U_i)` is invertible and the multiplicity
//! vector `m` of a module `K` solves `H m = (dim Hom(U_j, K))_j`. The answer
//! is confirmed with an explicit isomorphism.

use super::module::{hom_basis, iso_test, Module, Morphism};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Q};

/// `K ≅ ⊕ U_{summands[k]}` with an isomorphism from the sum.
#[derive(Debug, Clone)]
pub struct Decomposition<F: Field> {
    /// Universe indices with repetition, sorted.
    pub summands: Vec<usize>,
    pub iso: Morphism<F>,
}

/// Hom-dimension matrix of a universe, reusable across decompositions.
#[derive(Debug, Clone)]
pub struct HomDimMatrix {
    inverse: Mat<Q>,
}

impl HomDimMatrix {
    pub fn new<F: Field>(universe: &[Module<F>]) -> Result<Self> {
        let r = universe.len();
        let mut h = Mat::zeros(r, r);
        for j in 0..r {
            for i in 0..r {
                let d = hom_basis(&universe[j], &universe[i])?.dim();
                h.set(j, i, Q::from_i64(d as i64));
            }
        }
        let inverse = h.inverse().ok_or_else(|| {
            Error::Validation("Hom-dimension matrix is singular: universe has repeated or missing modules".into())
        })?;
        Ok(HomDimMatrix { inverse })
    }
}

pub fn decompose<F: Field>(m: &Module<F>, universe: &[Module<F>], hd: &HomDimMatrix) -> Result<Decomposition<F>> {
    let r = universe.len();
    let mut rhs = Mat::zeros(r, 1);
    for (j, u) in universe.iter().enumerate() {
        rhs.set(j, 0, Q::from_i64(hom_basis(u, m)?.dim() as i64));
    }
    let mult = hd.inverse.mul(&rhs);
    let mut summands = Vec::new();
    for i in 0..r {
        let (num, den) = mult.get(i, 0).numer_denom();
        let one = num_bigint::BigInt::from(1);
        if den != one || num < num_bigint::BigInt::from(0) {
            return Err(Error::Validation(format!("{} is not a sum of the given indecomposables", m.name())));
        }
        let k: usize = num.try_into().map_err(|_| Error::Internal("multiplicity overflow".into()))?;
        summands.extend(std::iter::repeat(i).take(k));
    }
    let parts: Vec<Module<F>> = summands.iter().map(|&i| universe[i].clone()).collect();
    let sum = Module::direct_sum(m.algebra(), &parts)?.sum;
    let v = iso_test(&sum, m)?;
    let iso = v.witness.ok_or_else(|| {
        Error::Validation(format!("{} is not a sum of the given indecomposables", m.name()))
    })?;
    Ok(Decomposition { summands, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nakayama::{enumerate_indecomposables, two_cycle_family};

    #[test]
    fn decomposes_a_direct_sum() {
        let a = two_cycle_family::<Q>(1).unwrap();
        let ind = enumerate_indecomposables(&a).unwrap();
        let hd = HomDimMatrix::new(&ind).unwrap();
        let s = Module::direct_sum(&a, &[ind[3].clone(), ind[0].clone(), ind[3].clone()]).unwrap().sum;
        let d = decompose(&s, &ind, &hd).unwrap();
        assert_eq!(d.summands, vec![0, 3, 3]);
        assert!(d.iso.is_iso());
    }
}
