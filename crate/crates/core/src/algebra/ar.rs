//! Auslander-Reiten translates, stable Hom spaces and AR quivers.

use super::homological::{projective_cover, syzygy_step};
use super::module::{hom_basis, iso_test, HomSpace, Module, Morphism};
use super::nakayama::enumerate_indecomposables;
use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// Transpose `Tr M`, a module over the opposite algebra, from a minimal
/// projective presentation `P_1 -> P_0 -> M -> 0`.
pub fn transpose<F: Field>(m: &Module<F>) -> Result<Module<F>> {
    let a = m.algebra();
    let op = a.opposite();
    if m.is_zero() {
        return Ok(Module::zero(&op));
    }
    let (c0, ses) = syzygy_step(m)?;
    let omega = ses.inclusion.source();
    let c1 = projective_cover(omega)?;
    let (u, v) = (&c0.vertices, &c1.vertices);
    // x_ij in e_{u_i} A e_{v_j}: the image of generator j read in summand i
    let mut images: Vec<Vec<F>> = vec![Vec::new(); u.len()];
    for (j, &vj) in v.iter().enumerate() {
        let col = ses.inclusion.block(vj).mul_vec(&c1.generators[j]);
        let mut off = 0;
        for (i, &ui) in u.iter().enumerate() {
            let len = a.between(ui, vj).len();
            images[i].extend_from_slice(&col[off..off + len]);
            off += len;
        }
    }
    let src = Module::free(&op, u);
    let tgt = Module::free(&op, v);
    let dual_map = Morphism::from_free(&src, u, &tgt, &images);
    Ok(dual_map.cokernel()?.target().clone())
}

/// `τ M = D Tr M`. Projective summands contribute nothing.
pub fn tau<F: Field>(m: &Module<F>) -> Result<Module<F>> {
    let t = transpose(m)?;
    Ok(t.dual())
}

/// `τ^- N = Tr D N`.
pub fn tau_inverse<F: Field>(n: &Module<F>) -> Result<Module<F>> {
    transpose(&n.dual())
}

/// Subspace of `Hom(M, N)` of maps factoring through `add(through)`,
/// as its dimension.
pub fn factoring_dim<F: Field>(hom: &HomSpace<F>, through: &[Module<F>]) -> Result<usize> {
    if hom.dim() == 0 {
        return Ok(0);
    }
    let mut rows: Vec<Vec<F>> = Vec::new();
    for x in through {
        let into = hom_basis(hom.source(), x)?;
        if into.dim() == 0 {
            continue;
        }
        let out = hom_basis(x, hom.target())?;
        for g in out.basis() {
            for f in into.basis() {
                rows.push(hom.coords(&g.compose(f)));
            }
        }
    }
    Ok(if rows.is_empty() { 0 } else { Mat::from_rows(rows).rank() })
}

/// `dim Hom(M, N)` modulo maps factoring through projectives.
pub fn stable_hom_dim<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<usize> {
    let a = m.algebra();
    let projs: Vec<Module<F>> = (0..a.num_vertices()).map(|v| Module::projective(a, v)).collect();
    let h = hom_basis(m, n)?;
    Ok(h.dim() - factoring_dim(&h, &projs)?)
}

/// `dim Hom(M, N)` modulo maps factoring through injectives.
pub fn costable_hom_dim<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<usize> {
    let a = m.algebra();
    let injs: Vec<Module<F>> = (0..a.num_vertices()).map(|v| Module::injective(a, v)).collect();
    let h = hom_basis(m, n)?;
    Ok(h.dim() - factoring_dim(&h, &injs)?)
}

/// Radical of `End(M)` for indecomposable `M`, as the trace-zero
/// endomorphisms; fails unless they form a nilpotent ideal of codimension one.
pub fn radical_endomorphisms<F: Field>(m: &Module<F>) -> Result<Vec<Morphism<F>>> {
    let d = m.dim() as u64;
    let p = F::characteristic();
    if p != 0 && d % p == 0 {
        return Err(Error::Unsupported(format!(
            "trace criterion for rad End needs characteristic prime to dim {d}"
        )));
    }
    let end = hom_basis(m, m)?;
    let traces: Vec<F> = end
        .basis()
        .iter()
        .map(|f| f.blocks().iter().fold(F::zero(), |acc, b| (0..b.rows()).fold(acc, |s, i| s.add(b.get(i, i)))))
        .collect();
    let tr = Mat::from_rows(vec![traces]);
    let ker = tr.kernel();
    let rad: Vec<Morphism<F>> = (0..ker.cols()).map(|c| end.combination(&ker.col(c))).collect();
    if rad.len() + 1 != end.dim() {
        return Err(Error::Validation(format!("{} has no endomorphism of nonzero trace", m.name())));
    }
    // nilpotent: rad^k = 0 for k = dim M
    let mut layer = rad.clone();
    for _ in 0..m.dim().max(1) {
        if layer.is_empty() {
            break;
        }
        let mut next: Vec<Vec<F>> = Vec::new();
        for x in &layer {
            for r in &rad {
                let y = x.compose(r);
                if !y.is_zero() {
                    next.push(end.coords(&y));
                }
            }
        }
        layer = if next.is_empty() {
            Vec::new()
        } else {
            let rr = Mat::from_rows(next).rref();
            (0..rr.pivots.len()).map(|i| end.combination(rr.reduced.row(i))).collect()
        };
    }
    if !layer.is_empty() {
        return Err(Error::Validation(format!("{} is not indecomposable: End is not local", m.name())));
    }
    Ok(rad)
}

/// A quiver with multiplicity-labelled arrows and undirected mesh edges.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    /// `(from, to, multiplicity)`.
    pub arrows: Vec<(usize, usize, usize)>,
    /// `(M, τ M)` pairs.
    pub mesh: Vec<(usize, usize)>,
}

/// Radical of the category spanned by pairwise non-isomorphic
/// indecomposables: `rad(i, j)` as morphism lists.
pub(crate) fn radical_morphisms<F: Field>(universe: &[Module<F>]) -> Result<Vec<Vec<Vec<Morphism<F>>>>> {
    let n = universe.len();
    let mut rad = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            rad[i][j] = if i == j {
                radical_endomorphisms(&universe[i])?
            } else {
                hom_basis(&universe[i], &universe[j])?.basis().to_vec()
            };
        }
    }
    Ok(rad)
}

/// AR quiver of a complete list of indecomposables: arrow multiplicity
/// `dim rad(M, N) / rad^2(M, N)`, mesh edges from `τ`.
pub fn ar_quiver_of<F: Field>(universe: &[Module<F>]) -> Result<Quiver> {
    let n = universe.len();
    let rad = radical_morphisms(universe)?;
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rad[i][j].is_empty() {
                continue;
            }
            let h = hom_basis(&universe[i], &universe[j])?;
            let rad_dim = Mat::from_rows(rad[i][j].iter().map(|f| h.coords(f)).collect()).rank();
            let mut sq: Vec<Vec<F>> = Vec::new();
            for z in 0..n {
                for g in &rad[z][j] {
                    for f in &rad[i][z] {
                        sq.push(h.coords(&g.compose(f)));
                    }
                }
            }
            let sq_dim = if sq.is_empty() { 0 } else { Mat::from_rows(sq).rank() };
            if rad_dim > sq_dim {
                arrows.push((i, j, rad_dim - sq_dim));
            }
        }
    }
    let mut mesh = Vec::new();
    for (i, m) in universe.iter().enumerate() {
        let t = tau(m)?;
        if t.is_zero() {
            continue;
        }
        for (j, cand) in universe.iter().enumerate() {
            if iso_test(cand, &t)?.is_iso() {
                mesh.push((i, j));
                break;
            }
        }
    }
    let vertices = universe.iter().map(|m| m.name()).collect();
    Ok(Quiver { vertices, arrows, mesh })
}

/// AR quiver of a Nakayama algebra over its `[m]_l` indecomposables.
pub fn ar_quiver<F: Field>(a: &Algebra<F>) -> Result<Quiver> {
    ar_quiver_of(&enumerate_indecomposables(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::homological::ext_dim;
    use crate::algebra::nakayama::{nakayama, two_cycle_family, Shape};
    use crate::linalg::Q;

    #[test]
    fn tau_of_projective_is_zero() {
        let a = two_cycle_family::<Q>(1).unwrap();
        assert!(tau(&Module::projective(&a, 0)).unwrap().is_zero());
        assert!(tau_inverse(&Module::injective(&a, 0)).unwrap().is_zero());
    }

    #[test]
    fn tau_tau_inverse_round_trip() {
        let a = two_cycle_family::<Q>(1).unwrap();
        for m in enumerate_indecomposables(&a).unwrap() {
            let ti = tau_inverse(&m).unwrap();
            if ti.is_zero() {
                continue;
            }
            assert!(iso_test(&tau(&ti).unwrap(), &m).unwrap().is_iso(), "{}", m.name());
        }
    }

    #[test]
    fn ar_formula_on_linear_a3() {
        let a = nakayama::<Q>(&[3, 2, 1], Shape::Linear).unwrap();
        let ind = enumerate_indecomposables(&a).unwrap();
        for m in &ind {
            for n in &ind {
                let e = ext_dim(1, m, n).unwrap();
                let s = stable_hom_dim(&tau_inverse(n).unwrap(), m).unwrap();
                let c = costable_hom_dim(n, &tau(m).unwrap()).unwrap();
                assert_eq!((e, e), (s, c), "{} {}", m.name(), n.name());
            }
        }
    }

    #[test]
    fn two_simple_vertices_give_isolated_quiver() {
        use crate::algebra::{Algebra, AlgebraSpec};
        let spec = AlgebraSpec {
            name: "kxk".into(),
            labels: vec!["e1".into(), "e2".into()],
            idempotents: vec![0, 1],
            vertex_labels: None,
            table: vec![(0, 0, vec![(0, Q::from_i64(1))]), (1, 1, vec![(1, Q::from_i64(1))])],
        };
        let a = Algebra::build(spec).unwrap();
        let universe = vec![Module::simple(&a, 0), Module::simple(&a, 1)];
        let q = ar_quiver_of(&universe).unwrap();
        assert_eq!(q.vertices.len(), 2);
        assert!(q.arrows.is_empty() && q.mesh.is_empty());
    }

    #[test]
    fn family_quiver_has_mesh_shape() {
        let a = two_cycle_family::<Q>(1).unwrap();
        let q = ar_quiver(&a).unwrap();
        assert_eq!(q.vertices.len(), 7);
        // every irreducible map between uniserials is simple
        assert!(q.arrows.iter().all(|&(_, _, m)| m == 1));
        // non-projective indecomposables: 7 - 2
        assert_eq!(q.mesh.len(), 5);
    }
}
