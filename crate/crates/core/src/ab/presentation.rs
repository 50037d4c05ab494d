//! Resolutions of functors vanishing on a subcategory `B`.
//!
//! A presentation `A(-, M) -> A(-, L) -> F -> 0` of a functor vanishing on
//! `B` comes from a `B`-epimorphism `f: M -> L`; with `N = ker f` the Yoneda
//! sequence `0 -> A(-, N) -> A(-, M) -> A(-, L) -> F -> 0` is exact. Over the
//! quotient `A/[B]` the same sequence continues through relative syzygies
//! `Ω_B` of `N`, `M`, `L`, connected by `δ: Ω_B L -> N`.

use super::approx::right_approx;
use super::{SubcatSpec, Universe};
use crate::algebra::approx::lift_through;
use crate::algebra::homological::HomDim;
use crate::algebra::{Module, Morphism};
use crate::error::{Error, Result};
use crate::lincat::functor::{cokernel_functor, induced_map, restricted_representable, FunctorModule};
use crate::lincat::resolution::minimal_resolution;
use crate::lincat::{CategoryAlgebra, LinCat};
use crate::linalg::Field;

/// Does every map from a member of `B` into `f.target()` factor through `f`?
/// Returns the first failing member label otherwise.
pub fn b_epi_witness<F: Field>(u: &Universe<F>, b: &SubcatSpec, f: &Morphism<F>) -> Result<Option<String>> {
    for x in u.members(b) {
        for h in crate::algebra::hom_basis(&x, f.target())?.basis() {
            if lift_through(f, h)?.is_none() {
                return Ok(Some(x.name()));
            }
        }
    }
    Ok(None)
}

/// Dimension of the homology of `P_{i+1} -> P_i -> P_{i-1}` at `P_i`, or
/// `None` if the composite is nonzero.
pub fn homology_dim<F: Field>(d_in: &Morphism<F>, d_out: &Morphism<F>) -> Option<usize> {
    if !d_out.compose(d_in).is_zero() {
        return None;
    }
    Some(d_out.source().dim() - d_out.rank() - d_in.rank())
}

#[derive(Debug, Clone)]
pub struct VanishingPresentation<F: Field> {
    pub f: Morphism<F>,
    /// `N -> M`, the kernel of `f`.
    pub g: Morphism<F>,
    /// `A(-, N), A(-, M), A(-, L)`.
    pub terms: Vec<FunctorModule<F>>,
    /// `A(-, N) -> A(-, M)` and `A(-, M) -> A(-, L)`.
    pub maps: Vec<Morphism<F>>,
    pub functor: FunctorModule<F>,
    /// Exact at `A(-, N)` and `A(-, M)`, with cokernel of dimension `dim F`.
    pub exact: bool,
    /// Index of the last nonzero term: a bound for `pd F`.
    pub length: usize,
    pub minimal_pd: HomDim,
}

/// Presentation of `F = coker A(-, f)` for `f: M -> L` in `add A`, where `F`
/// must vanish on `B`.
pub fn vanishing_presentation<F: Field>(
    u: &Universe<F>,
    cat: &LinCat<F>,
    gamma: &CategoryAlgebra<F>,
    b: &SubcatSpec,
    f: &Morphism<F>,
    cutoff: usize,
) -> Result<VanishingPresentation<F>> {
    let functor = cokernel_functor(cat, gamma, f)?;
    for lbl in b.labels(u) {
        if let Some(i) = cat.index_of(&lbl) {
            if functor.module.dims()[i] != 0 {
                return Err(Error::Input(format!("the functor does not vanish on {lbl}")));
            }
        }
    }
    let g = f.kernel()?;
    let n = g.source();
    if !n.is_zero() {
        for s in u.decompose(n)?.summands {
            if cat.index_of(&u.module(s).name()).is_none() {
                return Err(Error::KernelOutsideCategory { kernel: u.module(s).name() });
            }
        }
    }
    let tn = restricted_representable(cat, gamma, n)?;
    let tm = restricted_representable(cat, gamma, f.source())?;
    let tl = restricted_representable(cat, gamma, f.target())?;
    let gs = induced_map(&tn, &tm, &g)?;
    let fs = induced_map(&tm, &tl, f)?;
    let exact = gs.is_injective()
        && homology_dim(&gs, &fs) == Some(0)
        && tl.dim() - fs.rank() == functor.dim();
    let length = [&tl, &tm, &tn].iter().rposition(|t| t.dim() > 0).unwrap_or(0);
    let minimal_pd = minimal_resolution(gamma, &functor, cutoff)?.projective_dimension();
    Ok(VanishingPresentation {
        f: f.clone(),
        g,
        terms: vec![tn, tm, tl],
        maps: vec![gs, fs],
        functor,
        exact,
        length,
        minimal_pd,
    })
}

/// The resolution `... -> Ā(-, Ω_B L) -> Ā(-, N) -> Ā(-, M) -> Ā(-, L) -> F`.
#[derive(Debug, Clone)]
pub struct RelativeResolution<F: Field> {
    pub quotient: LinCat<F>,
    pub gamma: CategoryAlgebra<F>,
    /// `F = coker(Ā(-, M) -> Ā(-, L))`.
    pub functor: FunctorModule<F>,
    /// `P_0 = Ā(-, L), P_1 = Ā(-, M), P_2 = Ā(-, N), P_3 = Ā(-, Ω_B L), ...`
    pub terms: Vec<FunctorModule<F>>,
    /// `d_i: P_i -> P_{i-1}` stored at index `i - 1`.
    pub differentials: Vec<Morphism<F>>,
    /// Homology at `P_1 .. P_{k-1}`; `None` entries mark a nonzero composite.
    pub homology: Vec<Option<usize>>,
    /// Dimension of `coker d_1` minus `dim F` is zero when this holds.
    pub cokernel_matches: bool,
    /// The last level consisted of objects of `add B`, so the tail vanishes.
    pub complete: bool,
}

impl<F: Field> RelativeResolution<F> {
    pub fn is_exact(&self) -> bool {
        self.cokernel_matches && self.homology.iter().all(|h| *h == Some(0))
    }

    /// Index of the last nonzero term.
    pub fn length(&self) -> usize {
        self.terms.iter().rposition(|t| t.dim() > 0).unwrap_or(0)
    }
}

struct Level<F: Field> {
    n: Module<F>,
    m: Module<F>,
    l: Module<F>,
    g: Morphism<F>,
    f: Morphism<F>,
}

/// Builds the resolution over `A/[B]` from an exact `0 -> N -g-> M -f-> L`
/// with `f` a `B`-epimorphism, for at most `levels` rounds of relative
/// syzygies.
pub fn relative_syzygy_resolution<F: Field>(
    u: &Universe<F>,
    cat: &LinCat<F>,
    b: &SubcatSpec,
    g: &Morphism<F>,
    f: &Morphism<F>,
    levels: usize,
) -> Result<RelativeResolution<F>> {
    if !f.compose(g).is_zero() || !g.is_injective() || g.rank() + f.rank() != f.source().dim() {
        return Err(Error::Input("0 -> N -> M -> L is not exact at N and M".into()));
    }
    if let Some(w) = b_epi_witness(u, b, f)? {
        return Err(Error::Input(format!("f is not a B-epimorphism: a map from {w} does not factor")));
    }
    let quotient = cat.quotient_by_modules(&u.members(b))?;
    let gamma = CategoryAlgebra::new(&quotient)?;
    let rep = |x: &Module<F>| restricted_representable(&quotient, &gamma, x);
    let functor = cokernel_functor(&quotient, &gamma, f)?;
    let mut lv = Level { n: g.source().clone(), m: f.source().clone(), l: f.target().clone(), g: g.clone(), f: f.clone() };
    let mut terms: Vec<FunctorModule<F>> = Vec::new();
    let mut differentials = Vec::new();
    let mut complete = false;
    let mut pending_delta: Option<Morphism<F>> = None;
    for _ in 0..levels {
        let (tl, tm, tn) = (rep(&lv.l)?, rep(&lv.m)?, rep(&lv.n)?);
        if let Some(delta) = pending_delta.take() {
            let prev = terms.last().expect("a previous level exists");
            differentials.push(induced_map(&tl, prev, &delta)?);
        }
        differentials.push(induced_map(&tm, &tl, &lv.f)?);
        differentials.push(induced_map(&tn, &tm, &lv.g)?);
        let zero = tl.dim() == 0 && tm.dim() == 0 && tn.dim() == 0;
        terms.push(tl);
        terms.push(tm);
        terms.push(tn);
        if zero {
            complete = true;
            break;
        }
        let (next, delta) = next_level(u, b, &lv)?;
        pending_delta = Some(delta);
        lv = next;
    }
    // differentials[0] = d_1 (P_1 -> P_0), aligned with terms
    let homology = (1..terms.len().saturating_sub(1))
        .map(|i| homology_dim(&differentials[i], &differentials[i - 1]))
        .collect();
    let cokernel_matches = terms[0].dim() - differentials[0].rank() == functor.dim();
    Ok(RelativeResolution { quotient, gamma, functor, terms, differentials, homology, cokernel_matches, complete })
}

fn next_level<F: Field>(u: &Universe<F>, b: &SubcatSpec, lv: &Level<F>) -> Result<(Level<F>, Morphism<F>)> {
    let a = u.algebra();
    let al = right_approx(u, b, &lv.l, true)?;
    let an = right_approx(u, b, &lv.n, true)?;
    let beta = lift_through(&lv.f, &al.map)?
        .ok_or_else(|| Error::Internal("approximation of L does not lift along a B-epimorphism".into()))?;
    let sum = Module::direct_sum(a, &[al.object.clone(), an.object.clone()])?;
    let am = Morphism::from_columns(&sum.sum, &lv.m, &[beta.clone(), lv.g.compose(&an.map)]);
    let il = al.map.kernel()?;
    let in_ = an.map.kernel()?;
    let im = am.kernel()?;
    let og = lift_through(&im, &sum.injections[1].compose(&in_))?
        .ok_or_else(|| Error::Internal("Ω_B g does not exist".into()))?;
    let of = lift_through(&il, &sum.projections[0].compose(&im))?
        .ok_or_else(|| Error::Internal("Ω_B f does not exist".into()))?;
    let delta = lift_through(&lv.g, &beta.compose(&il))?
        .ok_or_else(|| Error::Internal("connecting map does not land in N".into()))?;
    let next = Level { n: in_.source().clone(), m: im.source().clone(), l: il.source().clone(), g: og, f: of };
    Ok((next, delta))
}
