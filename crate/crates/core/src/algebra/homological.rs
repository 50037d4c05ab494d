//! Projective covers, syzygies, minimal resolutions, Ext and homological
//! dimensions.

use super::approx::left_approximation;
use super::module::{hom_basis, iso_test, Module, Morphism};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// Default number of resolution steps before giving up.
pub const DEFAULT_CUTOFF: usize = 200;

/// A minimal projective cover `P -> M`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover<F: Field> {
    /// Vertex of each indecomposable summand, in vertex then slot order.
    pub vertices: Vec<usize>,
    /// Generator of each summand as an element of `M e_v`.
    pub generators: Vec<Vec<F>>,
    pub map: Morphism<F>,
}

impl<F: Field> ProjectiveCover<F> {
    pub fn projective(&self) -> &Module<F> {
        self.map.source()
    }
}

/// Minimal projective cover from a basis complement of `rad M` at each vertex.
pub fn projective_cover<F: Field>(m: &Module<F>) -> Result<ProjectiveCover<F>> {
    let a = m.algebra();
    let spans = m.radical_spans();
    let mut vertices = Vec::new();
    let mut generators = Vec::new();
    for (v, span) in spans.iter().enumerate() {
        let d = m.dims()[v];
        let basis = if span.cols() == 0 { Mat::zeros(d, 0) } else { span.image() };
        for i in basis.complement_indices() {
            let mut g = vec![F::zero(); d];
            g[i] = F::one();
            vertices.push(v);
            generators.push(g);
        }
    }
    let free = Module::free(a, &vertices);
    let map = Morphism::from_free(&free, &vertices, m, &generators);
    if !map.is_surjective() {
        return Err(Error::Internal("projective cover is not surjective".into()));
    }
    Ok(ProjectiveCover { vertices, generators, map })
}

/// A short exact sequence `0 -> K -> P -> M -> 0`.
#[derive(Debug, Clone)]
pub struct ShortExact<F: Field> {
    pub inclusion: Morphism<F>,
    pub projection: Morphism<F>,
}

impl<F: Field> ShortExact<F> {
    /// Checks exactness at all three places.
    pub fn is_exact(&self) -> bool {
        self.inclusion.is_injective()
            && self.projection.is_surjective()
            && self.projection.compose(&self.inclusion).is_zero()
            && self.inclusion.rank() + self.projection.rank() == self.inclusion.target().dim()
    }
}

/// One step of the syzygy: `0 -> Ω M -> P(M) -> M -> 0`.
pub fn syzygy_step<F: Field>(m: &Module<F>) -> Result<(ProjectiveCover<F>, ShortExact<F>)> {
    let cover = projective_cover(m)?;
    let inclusion = cover.map.kernel()?;
    let ses = ShortExact { inclusion, projection: cover.map.clone() };
    Ok((cover, ses))
}

/// One step of the cosyzygy: `0 -> M -> P -> Ω^- M -> 0` along a minimal
/// left projective approximation.
pub fn cosyzygy_step<F: Field>(m: &Module<F>) -> Result<ShortExact<F>> {
    let a = m.algebra();
    let projs: Vec<Module<F>> = (0..a.num_vertices()).map(|v| Module::projective(a, v)).collect();
    let ap = left_approximation(m, &projs, true)?;
    if !ap.map.is_injective() {
        return Err(Error::Unsupported(format!(
            "{} does not embed in a projective module; its cosyzygy is undefined",
            m.name()
        )));
    }
    let projection = ap.map.cokernel()?;
    Ok(ShortExact { inclusion: ap.map, projection })
}

/// `Ω^k M` for `k > 0`, `Ω^{-k}` (cosyzygies) for `k < 0`, with the
/// witnessing sequences.
pub fn syzygy<F: Field>(m: &Module<F>, k: i64) -> Result<(Module<F>, Vec<ShortExact<F>>)> {
    let mut cur = m.clone();
    let mut seqs = Vec::new();
    for _ in 0..k.unsigned_abs() {
        let ses = if k > 0 { syzygy_step(&cur)?.1 } else { cosyzygy_step(&cur)? };
        cur = if k > 0 { ses.inclusion.source().clone() } else { ses.projection.target().clone() };
        seqs.push(ses);
    }
    Ok((cur, seqs))
}

/// How a resolution computation stopped.
#[derive(Debug, Clone)]
pub enum Termination<F: Field> {
    /// `Ω^length M = 0` with `length` nonzero terms; `M = 0` has length 0.
    Finite { length: usize },
    /// `Ω^first M ≅ Ω^second M` with an explicit isomorphism.
    Periodic { first: usize, second: usize, witness: Morphism<F> },
    /// Stopped after `cutoff` steps without a decision.
    Truncated { cutoff: usize },
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M`.
#[derive(Debug, Clone)]
pub struct Resolution<F: Field> {
    pub covers: Vec<ProjectiveCover<F>>,
    /// `syzygies[i] = Ω^i M`, with `syzygies[0] = M`.
    pub syzygies: Vec<Module<F>>,
    /// Inclusions `Ω^{i+1} M -> P_i`.
    pub inclusions: Vec<Morphism<F>>,
    pub termination: Termination<F>,
}

/// Dimension of the resolution as a homological invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomDim {
    Finite(usize),
    Infinite,
    Unknown,
}

/// Serialized as the number when finite, otherwise as `"infinite"` or `"unknown"`.
impl serde::Serialize for HomDim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomDim::Finite(d) => s.serialize_u64(*d as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl std::fmt::Display for HomDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomDim::Finite(d) => write!(f, "{d}"),
            HomDim::Infinite => f.write_str("infinite"),
            HomDim::Unknown => f.write_str("unknown"),
        }
    }
}

impl HomDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(d) => Some(d),
            _ => None,
        }
    }

    /// Maximum, with `Infinite` dominating `Unknown`.
    pub fn max(self, other: HomDim) -> HomDim {
        use HomDim::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Unknown, _) | (_, Unknown) => Unknown,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }
}

impl<F: Field> Resolution<F> {
    pub fn projective_dimension(&self) -> HomDim {
        match &self.termination {
            Termination::Finite { length } => HomDim::Finite(length.saturating_sub(1)),
            Termination::Periodic { .. } => HomDim::Infinite,
            Termination::Truncated { .. } => HomDim::Unknown,
        }
    }

    /// Vertex multisets of the terms `P_0, P_1, ...`.
    pub fn term_vertices(&self) -> Vec<Vec<usize>> {
        self.covers.iter().map(|c| c.vertices.clone()).collect()
    }

    /// Differential `P_{i+1} -> P_i` for `i + 1 < covers.len()`.
    pub fn differential(&self, i: usize) -> Morphism<F> {
        self.inclusions[i].compose(&self.covers[i + 1].map)
    }
}

/// Minimal projective resolution until a zero syzygy, a syzygy isomorphic to
/// an earlier one, or `cutoff` terms.
pub fn resolve<F: Field>(m: &Module<F>, cutoff: usize) -> Result<Resolution<F>> {
    let mut res = Resolution {
        covers: Vec::new(),
        syzygies: vec![m.clone()],
        inclusions: Vec::new(),
        termination: Termination::Truncated { cutoff },
    };
    if m.is_zero() {
        res.termination = Termination::Finite { length: 0 };
        return Ok(res);
    }
    for step in 0..cutoff {
        let cur = res.syzygies[step].clone();
        let (cover, ses) = syzygy_step(&cur)?;
        let next = ses.inclusion.source().clone();
        res.covers.push(cover);
        res.inclusions.push(ses.inclusion);
        res.syzygies.push(next.clone());
        if next.is_zero() {
            res.termination = Termination::Finite { length: step + 1 };
            return Ok(res);
        }
        for earlier in 0..=step {
            let old = &res.syzygies[earlier];
            if old.dims() != next.dims() {
                continue;
            }
            let v = iso_test(old, &next)?;
            if let Some(w) = v.witness {
                res.termination = Termination::Periodic { first: earlier, second: step + 1, witness: w };
                return Ok(res);
            }
        }
    }
    Ok(res)
}

/// Projective and injective dimension with their resolutions.
#[derive(Debug, Clone)]
pub struct HomologicalDims<F: Field> {
    pub pd: HomDim,
    pub id: HomDim,
    pub projective: Resolution<F>,
    /// Resolution of `D M` over the opposite algebra.
    pub injective: Resolution<F>,
}

pub fn homological_dims<F: Field>(m: &Module<F>, cutoff: usize) -> Result<HomologicalDims<F>> {
    if cutoff == 0 {
        return Err(Error::Input("cutoff must be at least 1".into()));
    }
    let projective = resolve(m, cutoff)?;
    let injective = resolve(&m.dual(), cutoff)?;
    Ok(HomologicalDims {
        pd: projective.projective_dimension(),
        id: injective.projective_dimension(),
        projective,
        injective,
    })
}

pub fn projective_dimension<F: Field>(m: &Module<F>, cutoff: usize) -> Result<HomDim> {
    Ok(resolve(m, cutoff)?.projective_dimension())
}

pub fn injective_dimension<F: Field>(m: &Module<F>, cutoff: usize) -> Result<HomDim> {
    Ok(resolve(&m.dual(), cutoff)?.projective_dimension())
}

/// `dim Ext^i(M, N)` as the cokernel of `Hom(P_{i-1}, N) -> Hom(Ω^i M, N)`.
pub fn ext_dim<F: Field>(i: usize, m: &Module<F>, n: &Module<F>) -> Result<usize> {
    if i == 0 {
        return Ok(hom_basis(m, n)?.dim());
    }
    let (omega, _) = syzygy(m, (i - 1) as i64)?;
    if omega.is_zero() {
        return Ok(0);
    }
    let (_, ses) = syzygy_step(&omega)?;
    ext_from_sequence(&ses, n)
}

/// Cokernel dimension of restriction along `K -> P` in `0 -> K -> P -> X -> 0`.
pub(crate) fn ext_from_sequence<F: Field>(ses: &ShortExact<F>, n: &Module<F>) -> Result<usize> {
    let k = ses.inclusion.source();
    let hk = hom_basis(k, n)?;
    if hk.dim() == 0 {
        return Ok(0);
    }
    let hp = hom_basis(ses.inclusion.target(), n)?;
    let rows: Vec<Vec<F>> = hp.basis().iter().map(|h| hk.coords(&h.compose(&ses.inclusion))).collect();
    let rank = if rows.is_empty() { 0 } else { Mat::from_rows(rows).rank() };
    Ok(hk.dim() - rank)
}

/// Ext^i for all `1 <= i <= bound` from one resolution.
pub fn ext_dims_up_to<F: Field>(m: &Module<F>, n: &Module<F>, bound: usize) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(bound);
    let mut cur = m.clone();
    for _ in 0..bound {
        if cur.is_zero() {
            out.push(0);
            continue;
        }
        let (_, ses) = syzygy_step(&cur)?;
        out.push(ext_from_sequence(&ses, n)?);
        cur = ses.inclusion.source().clone();
    }
    Ok(out)
}

/// Global dimension as the maximum projective dimension of the simples.
pub fn global_dimension<F: Field>(a: &crate::algebra::Algebra<F>, cutoff: usize) -> Result<HomDim> {
    let mut gd = HomDim::Finite(0);
    for v in 0..a.num_vertices() {
        gd = gd.max(projective_dimension(&Module::simple(a, v), cutoff)?);
    }
    Ok(gd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nakayama::{enumerate_indecomposables, nakayama, two_cycle_family, Shape};
    use crate::linalg::Q;

    #[test]
    fn syzygy_of_projective_is_zero() {
        let a = two_cycle_family::<Q>(2).unwrap();
        let p = Module::projective(&a, 0);
        assert!(syzygy(&p, 1).unwrap().0.is_zero());
        assert_eq!(syzygy(&p, 0).unwrap().0.dims(), p.dims());
    }

    #[test]
    fn syzygy_dimension_is_cover_minus_module() {
        let a = two_cycle_family::<Q>(2).unwrap();
        for m in enumerate_indecomposables(&a).unwrap() {
            let (cover, ses) = syzygy_step(&m).unwrap();
            assert!(ses.is_exact());
            assert_eq!(ses.inclusion.source().dim(), cover.projective().dim() - m.dim());
        }
    }

    #[test]
    fn linear_a3_has_global_dimension_one() {
        let a = nakayama::<Q>(&[3, 2, 1], Shape::Linear).unwrap();
        assert_eq!(global_dimension(&a, 10).unwrap(), HomDim::Finite(1));
        let b = nakayama::<Q>(&[2, 2, 1], Shape::Linear).unwrap();
        assert_eq!(global_dimension(&b, 10).unwrap(), HomDim::Finite(2));
    }

    #[test]
    fn self_injective_simple_is_periodic() {
        let a = nakayama::<Q>(&[3, 3], Shape::Cyclic).unwrap();
        let r = resolve(&Module::simple(&a, 0), 20).unwrap();
        assert!(matches!(r.termination, Termination::Periodic { .. }));
        assert_eq!(r.projective_dimension(), HomDim::Infinite);
    }

    #[test]
    fn ext_vanishes_on_projectives() {
        let a = two_cycle_family::<Q>(1).unwrap();
        let ind = enumerate_indecomposables(&a).unwrap();
        let p = Module::projective(&a, 1);
        for n in &ind {
            assert_eq!(ext_dim(1, &p, n).unwrap(), 0);
            assert_eq!(ext_dim(2, &p, n).unwrap(), 0);
        }
    }

    #[test]
    fn cosyzygy_sequence_is_exact() {
        let a = nakayama::<Q>(&[3, 3], Shape::Cyclic).unwrap();
        let s = Module::simple(&a, 0);
        let (m, seqs) = syzygy(&s, -1).unwrap();
        assert!(seqs[0].is_exact());
        assert_eq!(m.dim(), 2);
    }
}
