//! AB3 triples over an Iwanaga-Gorenstein algebra by a mapping cone.
//!
//! With `G = Ω^n M` Gorenstein projective, the projective resolution
//! `0 -> G -> P_{n-1} -> ... -> P_0 -> M -> 0` receives a chain map from the
//! coresolution `0 -> G -> Q_{n-1} -> ... -> Q_0 -> Ω^{-n} G -> 0`. Its cone,
//! with the split summand `G` cancelled, ends in
//! `f = (ψ, ε): Ω^{-n} G ⊕ P_0 -> M`, a right `⊥Λ`-approximation whose kernel
//! has a finite projective resolution.

use super::approx::omega_hat_resolve;
use super::conditions::ApproxTriple;
use super::cotilting::perp;
use super::Universe;
use crate::algebra::approx::{extend_along, is_right_approximation, left_approximation, Approximation};
use crate::algebra::homological::{injective_dimension, projective_dimension, syzygy_step, HomDim};
use crate::algebra::{Module, Morphism};
use crate::error::{Error, Result};
use crate::linalg::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IgCertificate {
    /// `id P_v` per vertex.
    pub id_projectives: Vec<HomDim>,
    /// `pd I_v` per vertex, i.e. `id` of the projectives of the opposite algebra.
    pub pd_injectives: Vec<HomDim>,
}

impl IgCertificate {
    pub fn is_ig(&self) -> Option<bool> {
        let all = self.id_projectives.iter().chain(&self.pd_injectives).fold(HomDim::Finite(0), |a, b| a.max(*b));
        match all {
            HomDim::Finite(_) => Some(true),
            HomDim::Infinite => Some(false),
            HomDim::Unknown => None,
        }
    }

    /// `id Λ_Λ` when finite.
    pub fn self_injective_dimension(&self) -> Option<usize> {
        self.id_projectives.iter().fold(HomDim::Finite(0), |a, b| a.max(*b)).finite()
    }
}

pub fn ig_certificate<F: Field>(u: &Universe<F>, cutoff: usize) -> Result<IgCertificate> {
    let a = u.algebra();
    let nv = a.num_vertices();
    let id_projectives = (0..nv).map(|v| injective_dimension(&Module::projective(a, v), cutoff)).collect::<Result<_>>()?;
    let pd_injectives = (0..nv).map(|v| projective_dimension(&Module::injective(a, v), cutoff)).collect::<Result<_>>()?;
    Ok(IgCertificate { id_projectives, pd_injectives })
}

fn missing(what: &str) -> Error {
    Error::Internal(format!("{what} does not exist; the chain map construction failed"))
}

/// AB3 triple for `m` with `X = ⊥Λ` and `ω = proj Λ`, built from the cone of
/// the comparison map between `n`-step resolutions.
pub fn gp_mapping_cone_ab3<F: Field>(u: &Universe<F>, ig: &IgCertificate, m: &Module<F>, n: usize) -> Result<ApproxTriple<F>> {
    if ig.is_ig() != Some(true) {
        return Err(Error::Validation(format!(
            "the algebra is not certified Iwanaga-Gorenstein (id of projectives {:?}, pd of injectives {:?})",
            ig.id_projectives, ig.pd_injectives
        )));
    }
    let d = ig.self_injective_dimension().unwrap_or(0);
    if n < d {
        return Err(Error::Input(format!("n = {n} is below id Λ = {d}")));
    }
    let a = u.algebra();
    let proj = u.projectives()?;
    let gp = perp(u, &proj, d.max(1))?;
    let projs = u.members(&proj);
    let approx = if n == 0 {
        if !u.in_add(&gp, m)? {
            return Err(Error::Input(format!("{} is not Gorenstein projective; use n >= 1", m.name())));
        }
        let id = Morphism::identity(m);
        let summands = if m.is_zero() { Vec::new() } else { u.decompose(m)?.summands };
        Approximation { summands, object: m.clone(), map: id.clone(), components: vec![id] }
    } else {
        // projective resolution: eps = P_0 -> M, diffs[i] = P_{i+1} -> P_i, g_in = G -> P_{n-1}
        let mut covers = Vec::new();
        let mut incls = Vec::new();
        let mut cur = m.clone();
        for _ in 0..n {
            let (cover, ses) = syzygy_step(&cur)?;
            cur = ses.inclusion.source().clone();
            covers.push(cover.map);
            incls.push(ses.inclusion);
        }
        let g = cur;
        let eps = covers[0].clone();
        let diff = |i: usize| incls[i].compose(&covers[i + 1]); // P_{i+1} -> P_i
        // coresolution: e[j]: S_j -> Q^(j), c[j]: Q^(j) -> S_{j+1}, S_0 = G
        let mut es = Vec::new();
        let mut cs = Vec::new();
        let mut s = g.clone();
        for _ in 0..n {
            let ap = left_approximation(&s, &projs, true)?;
            if !ap.map.is_injective() {
                return Err(Error::Internal(format!("Ω^{n} {} is not torsionless", m.name())));
            }
            let c = ap.map.cokernel()?;
            s = c.target().clone();
            es.push(ap.map);
            cs.push(c);
        }
        // chain map phi[j]: Q^(j) -> P_{n-1-j}
        let mut phis: Vec<Morphism<F>> = Vec::new();
        phis.push(extend_along(&es[0], &incls[n - 1])?.ok_or_else(|| missing("φ_{n-1}"))?);
        for j in 1..n {
            let dq = es[j].compose(&cs[j - 1]);
            let rhs = diff(n - 1 - j).compose(&phis[j - 1]);
            phis.push(extend_along(&dq, &rhs)?.ok_or_else(|| missing("a chain map component"))?);
        }
        let psi = extend_along(&cs[n - 1], &eps.compose(&phis[n - 1]))?.ok_or_else(|| missing("ψ"))?;
        let sum = Module::direct_sum(a, &[s.clone(), eps.source().clone()])?;
        let map = Morphism::from_columns(&sum.sum, m, &[psi.clone(), eps.clone()]);
        let summands = u.decompose(&sum.sum)?.summands;
        Approximation { summands, object: sum.sum, map, components: vec![psi, eps] }
    };
    if !is_right_approximation(&u.members(&gp), &approx.map)? {
        return Err(Error::Internal(format!("cone map for {} is not a right ⊥Λ-approximation", m.name())));
    }
    let kernel = approx.map.kernel()?;
    let omega_hat = omega_hat_resolve(u, &proj, kernel.source(), n + 1)?;
    let surjective = approx.map.is_surjective();
    Ok(ApproxTriple { approx, kernel, omega_hat, surjective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nakayama::{nakayama, two_cycle_family, Shape};
    use crate::linalg::Q;

    #[test]
    fn self_injective_simples() {
        let a = nakayama::<Q>(&[3, 3], Shape::Cyclic).unwrap();
        let u = Universe::of(&a).unwrap();
        let ig = ig_certificate(&u, 20).unwrap();
        assert_eq!(ig.is_ig(), Some(true));
        for v in 0..2 {
            let s = Module::simple(&a, v);
            for n in 0..=1 {
                let t = gp_mapping_cone_ab3(&u, &ig, &s, n).unwrap();
                assert!(t.surjective);
                assert!(t.omega_hat.is_some());
            }
        }
    }

    #[test]
    fn gorenstein_of_dimension_one() {
        // linear [2,2,1] has gd 2 and is Iwanaga-Gorenstein
        let a = nakayama::<Q>(&[2, 2, 1], Shape::Linear).unwrap();
        let u = Universe::of(&a).unwrap();
        let ig = ig_certificate(&u, 20).unwrap();
        let d = ig.self_injective_dimension().unwrap();
        for m in u.modules() {
            let t = gp_mapping_cone_ab3(&u, &ig, m, d.max(1)).unwrap();
            assert!(t.omega_hat.is_some(), "{}", m.name());
        }
    }

    #[test]
    fn refuses_without_certificate() {
        let a = two_cycle_family::<Q>(2).unwrap();
        let u = Universe::of(&a).unwrap();
        let ig = ig_certificate(&u, 40).unwrap();
        if ig.is_ig() != Some(true) {
            assert!(gp_mapping_cone_ab3(&u, &ig, u.module(0), 3).is_err());
        }
    }
}
