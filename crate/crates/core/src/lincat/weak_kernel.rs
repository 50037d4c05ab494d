//! Weak kernels in an ideal quotient `A/[B]`.
//!
//! For `f: M -> L` take a right `B`-approximation `β: B_L -> L`; the kernel
//! `K` of `(f, β): M ⊕ B_L -> L` composed with the projection to `M` is a
//! weak kernel of `f` modulo `[B]` once `K` is replaced by its right
//! approximation from the category. Summands in `add B` are zero in the
//! quotient and are dropped.

use super::category::{ideal_rows, LinCat};
use crate::algebra::approx::right_approximation;
use crate::algebra::decompose::{decompose, HomDimMatrix};
use crate::algebra::{hom_basis, iso_test, Module, Morphism};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// `γ = Σ γ_k : ⊕ X_{objects[k]} -> M`.
#[derive(Debug, Clone)]
pub struct WeakKernel<F: Field> {
    /// Category object indices of the summands, with repetition.
    pub objects: Vec<usize>,
    /// One component `X_{objects[k]} -> M` per summand.
    pub components: Vec<Morphism<F>>,
}

/// Weak kernel of `f: cat(i) -> cat(j)` modulo `[base]`, with `K` decomposed
/// against `universe` (a complete list of indecomposables).
pub fn weak_kernel<F: Field>(
    cat: &LinCat<F>,
    f: &Morphism<F>,
    base: &[Module<F>],
    universe: &[Module<F>],
    hd: &HomDimMatrix,
) -> Result<WeakKernel<F>> {
    let m = f.source();
    let l = f.target();
    let a = m.algebra();
    let approx = right_approximation(base, l, true)?;
    let sum = Module::direct_sum(a, &[m.clone(), approx.object.clone()])?;
    let map = Morphism::from_columns(&sum.sum, l, &[f.clone(), approx.map.clone()]);
    let incl = map.kernel()?;
    let k0 = incl.source();
    if k0.is_zero() {
        return Ok(WeakKernel { objects: Vec::new(), components: Vec::new() });
    }
    // K need not lie in the category (e.g. in ⊥T); its approximation by the
    // objects and `base` has the same lifting property.
    let members: Vec<Module<F>> = cat.objects().iter().chain(base).cloned().collect();
    let cover = right_approximation(&members, k0, true)?;
    let gamma = sum.projections[0].compose(&incl).compose(&cover.map);
    let k = &cover.object;
    if k.is_zero() {
        return Ok(WeakKernel { objects: Vec::new(), components: Vec::new() });
    }
    let dec = decompose(k, universe, hd)?;
    let parts: Vec<Module<F>> = dec.summands.iter().map(|&u| universe[u].clone()).collect();
    let ds = Module::direct_sum(a, &parts)?;
    let through_k = gamma.compose(&dec.iso);
    let mut objects = Vec::new();
    let mut components = Vec::new();
    for (s, &u) in dec.summands.iter().enumerate() {
        let piece = &universe[u];
        if base.iter().chain(cat.ideal_modules()).any(|b| b.dims() == piece.dims() && iso_test(b, piece).map(|v| v.is_iso()).unwrap_or(false)) {
            continue;
        }
        let mut found = None;
        for (idx, obj) in cat.objects().iter().enumerate() {
            if obj.dims() != piece.dims() {
                continue;
            }
            if let Some(w) = iso_test(obj, piece)?.witness {
                found = Some((idx, w));
                break;
            }
        }
        let (idx, w) = found.ok_or_else(|| Error::KernelOutsideCategory { kernel: piece.name() })?;
        objects.push(idx);
        components.push(through_k.compose(&ds.injections[s]).compose(&w));
    }
    Ok(WeakKernel { objects, components })
}

/// Does every `h: X -> M` (object `X`, hom basis) with `f ∘ h ∈ [ideal]`
/// satisfy `h ≡ γ ∘ s (mod [ideal])` for some `s`? Returns the first
/// failing `(object, basis index)`.
pub fn check_weak_kernel<F: Field>(
    cat: &LinCat<F>,
    f: &Morphism<F>,
    wk: &WeakKernel<F>,
) -> Result<Option<(usize, usize)>> {
    let ideal = cat.ideal_modules();
    let m = f.source();
    for (x, obj) in cat.objects().iter().enumerate() {
        let hxm = hom_basis(obj, m)?;
        let hxl = hom_basis(obj, f.target())?;
        let killed = ideal_rows(&hxl, ideal)?;
        let ideal_m = ideal_rows(&hxm, ideal)?;
        // kernel of hxm -> hxl / ideal
        let img: Vec<Vec<F>> = hxm.basis().iter().map(|h| hxl.coords(&f.compose(h))).collect();
        let cands = annihilated(&img, &killed, hxl.dim());
        let mut span: Vec<Vec<F>> = ideal_m;
        for comp in &wk.components {
            for s in hom_basis(obj, comp.source())?.basis() {
                span.push(hxm.coords(&comp.compose(s)));
            }
        }
        for (b, h) in cands.iter().enumerate() {
            if !in_span(&span, h, hxm.dim()) {
                return Ok(Some((x, b)));
            }
        }
    }
    Ok(None)
}

/// Basis of `{c : Σ c_r img_r ∈ span(killed)}`.
fn annihilated<F: Field>(img: &[Vec<F>], killed: &[Vec<F>], d: usize) -> Vec<Vec<F>> {
    let n = img.len();
    if n == 0 {
        return Vec::new();
    }
    if d == 0 {
        return (0..n).map(|k| unit(n, k)).collect();
    }
    // columns: img rows then killed rows; kernel restricted to the first n
    let cols: Vec<Vec<F>> = img.iter().chain(killed).cloned().collect();
    let mat = Mat::from_cols(d, &cols);
    let ker = mat.kernel_rows();
    let proj: Vec<Vec<F>> = (0..ker.rows())
        .map(|r| ker.row(r)[..n].to_vec()).filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    if proj.is_empty() {
        return Vec::new();
    }
    let rr = Mat::from_rows(proj).rref();
    (0..rr.pivots.len()).map(|i| rr.reduced.row(i).to_vec()).collect()
}

fn unit<F: Field>(n: usize, k: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[k] = F::one();
    v
}

fn in_span<F: Field>(span: &[Vec<F>], v: &[F], d: usize) -> bool {
    let r0 = crate::linalg::rank_of_vectors(span, d);
    let mut all = span.to_vec();
    all.push(v.to_vec());
    crate::linalg::rank_of_vectors(&all, d) == r0
}
