//! Right and left approximations by a finite list of modules.
//!
//! The universal map `⊕_i X_i^{dim Hom(X_i, M)} -> M` is a right
//! approximation. Minimal mode drops summands greedily: a summand whose map
//! factors through the remaining ones is redundant, and a generating set with
//! no redundant element maps onto a basis of the top, so the result is right
//! minimal.

use super::module::{hom_basis, HomSpace, Module, Morphism};
use crate::error::Result;
use crate::linalg::{Field, Mat};

/// An approximation together with its decomposition.
#[derive(Debug, Clone)]
pub struct Approximation<F: Field> {
    /// Index into the member list for each summand, in order.
    pub summands: Vec<usize>,
    /// The direct sum of the chosen members.
    pub object: Module<F>,
    /// `object -> M` for right approximations, `M -> object` for left ones.
    pub map: Morphism<F>,
    /// Component maps, one per summand.
    pub components: Vec<Morphism<F>>,
}

/// Hom spaces between members, computed once per approximation problem.
pub struct MemberHoms<F: Field> {
    homs: Vec<Vec<HomSpace<F>>>,
}

impl<F: Field> MemberHoms<F> {
    pub fn new(members: &[Module<F>]) -> Result<Self> {
        let homs = members
            .iter()
            .map(|x| members.iter().map(|y| hom_basis(x, y)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(MemberHoms { homs })
    }

    /// Basis of `Hom(X_i, X_j)`.
    pub fn get(&self, i: usize, j: usize) -> &HomSpace<F> {
        &self.homs[i][j]
    }
}

/// Is `h` a sum `sum_l c_l ∘ s_l` with `s_l` ranging over `Hom(src, X_l)`?
fn factors_right<F: Field>(h: &Morphism<F>, comps: &[(usize, &Morphism<F>)], src: usize, homs: &MemberHoms<F>) -> bool {
    let mut cols: Vec<Vec<F>> = Vec::new();
    for &(l, c) in comps {
        for s in homs.get(src, l).basis() {
            cols.push(c.compose(s).flatten());
        }
    }
    solvable(&cols, &h.flatten())
}

/// Is `h` a sum `sum_l s_l ∘ c_l` with `s_l` ranging over `Hom(X_l, tgt)`?
fn factors_left<F: Field>(h: &Morphism<F>, comps: &[(usize, &Morphism<F>)], tgt: usize, homs: &MemberHoms<F>) -> bool {
    let mut cols: Vec<Vec<F>> = Vec::new();
    for &(l, c) in comps {
        for s in homs.get(l, tgt).basis() {
            cols.push(s.compose(c).flatten());
        }
    }
    solvable(&cols, &h.flatten())
}

pub(crate) fn solvable<F: Field>(cols: &[Vec<F>], rhs: &[F]) -> bool {
    if rhs.iter().all(F::is_zero) {
        return true;
    }
    if cols.is_empty() {
        return false;
    }
    let a = Mat::from_cols(rhs.len(), cols);
    let b = Mat::from_cols(rhs.len(), &[rhs.to_vec()]);
    matches!(a.solve(&b), Ok(Some(_)))
}

fn solve_coeffs<F: Field>(cols: &[Vec<F>], rhs: &[F]) -> Result<Option<Vec<F>>> {
    if cols.is_empty() {
        return Ok(if rhs.iter().all(F::is_zero) { Some(Vec::new()) } else { None });
    }
    if rhs.is_empty() {
        return Ok(Some(vec![F::zero(); cols.len()]));
    }
    let a = Mat::from_cols(rhs.len(), cols);
    let b = Mat::from_cols(rhs.len(), &[rhs.to_vec()]);
    Ok(a.solve(&b)?.map(|x| x.col(0)))
}

/// Some `φ: A -> B` with `u ∘ φ = v`, for `u: B -> C` and `v: A -> C`.
pub fn lift_through<F: Field>(u: &Morphism<F>, v: &Morphism<F>) -> Result<Option<Morphism<F>>> {
    let h = hom_basis(v.source(), u.source())?;
    let cols: Vec<Vec<F>> = h.basis().iter().map(|s| u.compose(s).flatten()).collect();
    Ok(solve_coeffs(&cols, &v.flatten())?.map(|c| h.combination(&c)))
}

/// Some `φ: B -> C` with `φ ∘ u = v`, for `u: A -> B` and `v: A -> C`.
pub fn extend_along<F: Field>(u: &Morphism<F>, v: &Morphism<F>) -> Result<Option<Morphism<F>>> {
    let h = hom_basis(u.target(), v.target())?;
    let cols: Vec<Vec<F>> = h.basis().iter().map(|s| s.compose(u).flatten()).collect();
    Ok(solve_coeffs(&cols, &v.flatten())?.map(|c| h.combination(&c)))
}

/// Right approximation of `m` by the members (all of which share its algebra).
pub fn right_approximation<F: Field>(members: &[Module<F>], m: &Module<F>, minimal: bool) -> Result<Approximation<F>> {
    let homs = MemberHoms::new(members)?;
    right_approximation_with(members, &homs, m, minimal)
}

pub fn right_approximation_with<F: Field>(
    members: &[Module<F>],
    homs: &MemberHoms<F>,
    m: &Module<F>,
    minimal: bool,
) -> Result<Approximation<F>> {
    let mut candidates: Vec<(usize, Morphism<F>)> = Vec::new();
    for (i, x) in members.iter().enumerate() {
        for h in hom_basis(x, m)?.basis() {
            candidates.push((i, h.clone()));
        }
    }
    let chosen: Vec<usize> = if minimal {
        let mut keep = vec![true; candidates.len()];
        for j in 0..candidates.len() {
            keep[j] = false;
            let others: Vec<(usize, &Morphism<F>)> =
                (0..candidates.len()).filter(|&l| keep[l]).map(|l| (candidates[l].0, &candidates[l].1)).collect();
            if !factors_right(&candidates[j].1, &others, candidates[j].0, homs) {
                keep[j] = true;
            }
        }
        (0..candidates.len()).filter(|&j| keep[j]).collect()
    } else {
        (0..candidates.len()).collect()
    };
    let summands: Vec<usize> = chosen.iter().map(|&j| candidates[j].0).collect();
    let components: Vec<Morphism<F>> = chosen.iter().map(|&j| candidates[j].1.clone()).collect();
    let parts: Vec<Module<F>> = summands.iter().map(|&i| members[i].clone()).collect();
    let ds = Module::direct_sum(m.algebra(), &parts)?;
    let map = Morphism::from_columns(&ds.sum, m, &components);
    Ok(Approximation { summands, object: ds.sum, map, components })
}

/// Left approximation `m -> ⊕ X_i`.
pub fn left_approximation<F: Field>(m: &Module<F>, members: &[Module<F>], minimal: bool) -> Result<Approximation<F>> {
    let homs = MemberHoms::new(members)?;
    left_approximation_with(m, members, &homs, minimal)
}

pub fn left_approximation_with<F: Field>(
    m: &Module<F>,
    members: &[Module<F>],
    homs: &MemberHoms<F>,
    minimal: bool,
) -> Result<Approximation<F>> {
    let mut candidates: Vec<(usize, Morphism<F>)> = Vec::new();
    for (i, x) in members.iter().enumerate() {
        for h in hom_basis(m, x)?.basis() {
            candidates.push((i, h.clone()));
        }
    }
    let chosen: Vec<usize> = if minimal {
        let mut keep = vec![true; candidates.len()];
        for j in 0..candidates.len() {
            keep[j] = false;
            let others: Vec<(usize, &Morphism<F>)> =
                (0..candidates.len()).filter(|&l| keep[l]).map(|l| (candidates[l].0, &candidates[l].1)).collect();
            if !factors_left(&candidates[j].1, &others, candidates[j].0, homs) {
                keep[j] = true;
            }
        }
        (0..candidates.len()).filter(|&j| keep[j]).collect()
    } else {
        (0..candidates.len()).collect()
    };
    let summands: Vec<usize> = chosen.iter().map(|&j| candidates[j].0).collect();
    let components: Vec<Morphism<F>> = chosen.iter().map(|&j| candidates[j].1.clone()).collect();
    let parts: Vec<Module<F>> = summands.iter().map(|&i| members[i].clone()).collect();
    let ds = Module::direct_sum(m.algebra(), &parts)?;
    let map = Morphism::from_rows(m, &ds.sum, &components);
    Ok(Approximation { summands, object: ds.sum, map, components })
}

/// Checks that every basis map `X_i -> M` factors through `f`.
pub fn is_right_approximation<F: Field>(members: &[Module<F>], f: &Morphism<F>) -> Result<bool> {
    for x in members {
        let through = hom_basis(x, f.source())?;
        let cols: Vec<Vec<F>> = through.basis().iter().map(|s| f.compose(s).flatten()).collect();
        for h in hom_basis(x, f.target())?.basis() {
            if !solvable(&cols, &h.flatten()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that every basis map `M -> X_i` factors through `f`.
pub fn is_left_approximation<F: Field>(f: &Morphism<F>, members: &[Module<F>]) -> Result<bool> {
    for x in members {
        let through = hom_basis(f.target(), x)?;
        let cols: Vec<Vec<F>> = through.basis().iter().map(|s| s.compose(f).flatten()).collect();
        for h in hom_basis(f.source(), x)?.basis() {
            if !solvable(&cols, &h.flatten()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nakayama::{enumerate_indecomposables, two_cycle_family};
    use crate::linalg::Q;

    #[test]
    fn member_is_its_own_minimal_approximation() {
        let a = two_cycle_family::<Q>(1).unwrap();
        let ind = enumerate_indecomposables(&a).unwrap();
        let ap = right_approximation(&ind[..3], &ind[1], true).unwrap();
        assert_eq!(ap.summands, vec![1]);
        assert!(ap.map.is_iso());
    }

    #[test]
    fn projective_approximation_is_the_cover() {
        let a = two_cycle_family::<Q>(2).unwrap();
        let projs: Vec<Module<Q>> = (0..2).map(|v| Module::projective(&a, v)).collect();
        for m in enumerate_indecomposables(&a).unwrap() {
            let ap = right_approximation(&projs, &m, true).unwrap();
            assert!(ap.map.is_surjective());
            assert_eq!(ap.summands.len(), m.top_dims().iter().sum::<usize>());
            assert!(is_right_approximation(&projs, &ap.map).unwrap());
            let full = right_approximation(&projs, &m, false).unwrap();
            assert!(full.summands.len() >= ap.summands.len());
        }
    }

    #[test]
    fn left_approximation_by_projectives() {
        let a = two_cycle_family::<Q>(1).unwrap();
        let projs: Vec<Module<Q>> = (0..2).map(|v| Module::projective(&a, v)).collect();
        for m in enumerate_indecomposables(&a).unwrap() {
            let ap = left_approximation(&m, &projs, true).unwrap();
            assert!(is_left_approximation(&ap.map, &projs).unwrap());
        }
    }
}
