//! Finitely presented contravariant functors on a [`LinCat`], realized as
//! right modules over its category algebra.
//!
//! The workhorse is [`hom_modulo`]: for an ambient module `N` and maps
//! `g_k: Z_k -> N` it builds
//! `Y ↦ Hom(M_Y, N) / (ideal part + Σ_k g_k ∘ Hom(M_Y, Z_k))`.
//! Representables, restricted representables, cokernel functors and
//! `Ext^1(-, M)` are all of this form.

use super::category::{ideal_rows, LinCat};
use super::gamma::CategoryAlgebra;
use crate::algebra::approx::left_approximation;
use crate::algebra::{hom_basis, HomSpace, Module, Morphism};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// Where a functor module came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Representable(String),
    Restricted { module: String, subcategory: String },
    Simple(String),
    Injective(String),
    Ext { degree: usize, module: String },
    Cokernel(String),
    Custom(String),
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Representable(m) => write!(f, "cat(-, {m})"),
            Provenance::Restricted { module, subcategory } => write!(f, "Hom(-, {module})|{subcategory}"),
            Provenance::Simple(m) => write!(f, "S({m})"),
            Provenance::Injective(m) => write!(f, "D cat({m}, -)"),
            Provenance::Ext { degree, module } => write!(f, "Ext^{degree}(-, {module})"),
            Provenance::Cokernel(m) => write!(f, "coker({m})"),
            Provenance::Custom(m) => f.write_str(m),
        }
    }
}

/// Per-object data of a functor of the form `Hom(-, N)` modulo a subfunctor.
#[derive(Debug, Clone)]
pub struct YonedaData<F: Field> {
    pub target: Module<F>,
    homs: Vec<HomSpace<F>>,
    /// Representatives of a basis of `F(Y)`, in coordinates of `homs[Y]`.
    reps: Vec<Vec<Vec<F>>>,
    /// Full coordinates (row) times this gives `F(Y)` coordinates.
    to_value: Vec<Mat<F>>,
}

impl<F: Field> YonedaData<F> {
    /// Coordinates in `F(Y)` of the class of `h: M_Y -> N`.
    pub fn class_of(&self, y: usize, h: &Morphism<F>) -> Vec<F> {
        let c = self.homs[y].coords(h);
        if c.is_empty() || self.to_value[y].cols() == 0 {
            return vec![F::zero(); self.to_value[y].cols()];
        }
        Mat::from_rows(vec![c]).mul(&self.to_value[y]).row(0).to_vec()
    }

    pub fn rep(&self, y: usize, k: usize) -> Morphism<F> {
        self.homs[y].combination(&self.reps[y][k])
    }
}

/// A Γ-module with its provenance.
#[derive(Debug, Clone)]
pub struct FunctorModule<F: Field> {
    pub module: Module<F>,
    pub provenance: Provenance,
    pub yoneda: Option<YonedaData<F>>,
}

impl<F: Field> FunctorModule<F> {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

fn complement_data<F: Field>(d: usize, sub: Vec<Vec<F>>) -> Result<(Vec<Vec<F>>, Mat<F>)> {
    let basis: Vec<Vec<F>> = if sub.is_empty() {
        Vec::new()
    } else {
        let rr = Mat::from_rows(sub).rref();
        (0..rr.pivots.len()).map(|i| rr.reduced.row(i).to_vec()).collect()
    };
    let r = basis.len();
    let mut rows = basis;
    let cols = Mat::from_rows(if rows.is_empty() { vec![vec![F::zero(); d]] } else { rows.clone() });
    let comp = if d == 0 { Vec::new() } else { cols.transpose().complement_indices() };
    let mut reps = Vec::new();
    for k in comp {
        let mut v = vec![F::zero(); d];
        v[k] = F::one();
        rows.push(v.clone());
        reps.push(v);
    }
    let to_value = if d == 0 {
        Mat::zeros(0, 0)
    } else {
        let inv = Mat::from_rows(rows).inverse().ok_or_else(|| Error::Internal("complement failed".into()))?;
        inv.submatrix(0..d, r..d)
    };
    Ok((reps, to_value))
}

/// `Y ↦ Hom(M_Y, N) / (maps through the ideal modules + Σ g_k ∘ Hom(M_Y, Z_k))`.
pub fn hom_modulo<F: Field>(
    cat: &LinCat<F>,
    gamma: &CategoryAlgebra<F>,
    n: &Module<F>,
    through: &[Morphism<F>],
    provenance: Provenance,
) -> Result<FunctorModule<F>> {
    let objs = cat.len();
    let mut homs = Vec::with_capacity(objs);
    let mut reps = Vec::with_capacity(objs);
    let mut to_value = Vec::with_capacity(objs);
    for y in 0..objs {
        let h = hom_basis(cat.object(y), n)?;
        let mut sub = ideal_rows(&h, cat.ideal_modules())?;
        for g in through {
            if g.target().dims() != n.dims() {
                return Err(Error::Input("through-map does not land in the target module".into()));
            }
            for s in hom_basis(cat.object(y), g.source())?.basis() {
                let c = h.coords(&g.compose(s));
                if c.iter().any(|x| !x.is_zero()) {
                    sub.push(c);
                }
            }
        }
        let (r, t) = complement_data(h.dim(), sub)?;
        homs.push(h);
        reps.push(r);
        to_value.push(t);
    }
    let data = YonedaData { target: n.clone(), homs, reps, to_value };
    let g = &gamma.gamma;
    let dims: Vec<usize> = (0..objs).map(|y| data.reps[y].len()).collect();
    let mut action = Vec::with_capacity(g.dim());
    for &(i, j, k) in &gamma.classes {
        // class f: X_i -> X_j acts F(X_j) -> F(X_i) by h ↦ h ∘ f
        let f = cat.hom(i, j).rep(k);
        let mut m = Mat::zeros(dims[i], dims[j]);
        for c in 0..dims[j] {
            let h = data.rep(j, c);
            let v = data.class_of(i, &h.compose(&f));
            for (r, x) in v.into_iter().enumerate() {
                m.set(r, c, x);
            }
        }
        action.push(m);
    }
    let module = Module::new(g, dims, action)?;
    Ok(FunctorModule { module, provenance, yoneda: Some(data) })
}

/// The natural transformation `F_N -> F_N'` induced by `u: N -> N'`.
pub fn induced_map<F: Field>(src: &FunctorModule<F>, tgt: &FunctorModule<F>, u: &Morphism<F>) -> Result<Morphism<F>> {
    let (ys, yt) = match (&src.yoneda, &tgt.yoneda) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Input("induced maps need functors of Yoneda type".into())),
    };
    let nv = src.module.dims().len();
    let blocks = (0..nv)
        .map(|y| {
            let (r, c) = (tgt.module.dims()[y], src.module.dims()[y]);
            let mut m = Mat::zeros(r, c);
            for k in 0..c {
                let h = ys.rep(y, k);
                let v = yt.class_of(y, &u.compose(&h));
                for (i, x) in v.into_iter().enumerate() {
                    m.set(i, k, x);
                }
            }
            m
        })
        .collect();
    Morphism::new(&src.module, &tgt.module, blocks)
}

/// Representable `cat(-, X)` built from Hom spaces.
pub fn representable<F: Field>(cat: &LinCat<F>, gamma: &CategoryAlgebra<F>, x: usize) -> Result<FunctorModule<F>> {
    let m = cat.object(x).clone();
    hom_modulo(cat, gamma, &m, &[], Provenance::Representable(m.name()))
}

/// `Hom(-, N)` on the category for an arbitrary ambient module `N`.
pub fn restricted_representable<F: Field>(
    cat: &LinCat<F>,
    gamma: &CategoryAlgebra<F>,
    n: &Module<F>,
) -> Result<FunctorModule<F>> {
    hom_modulo(
        cat,
        gamma,
        n,
        &[],
        Provenance::Restricted { module: n.name(), subcategory: cat.name().to_string() },
    )
}

/// Cokernel of `cat(-, M) -> cat(-, L)` induced by `f: M -> L`.
pub fn cokernel_functor<F: Field>(cat: &LinCat<F>, gamma: &CategoryAlgebra<F>, f: &Morphism<F>) -> Result<FunctorModule<F>> {
    let name = format!("{} -> {}", f.source().name(), f.target().name());
    hom_modulo(cat, gamma, f.target(), std::slice::from_ref(f), Provenance::Cokernel(name))
}

/// `Ext^1(-, M)` as `Hom(-, C)` modulo maps through `I -> C`, where
/// `0 -> M -> I -> C -> 0` is an injective envelope.
pub fn ext1_functor<F: Field>(cat: &LinCat<F>, gamma: &CategoryAlgebra<F>, m: &Module<F>) -> Result<FunctorModule<F>> {
    let (_, proj) = injective_envelope_sequence(m)?;
    hom_modulo(cat, gamma, proj.target(), &[proj.clone()], Provenance::Ext { degree: 1, module: m.name() })
}

/// `0 -> M -> I -> C -> 0` with `I` an injective envelope; returns the
/// embedding and the projection onto `C`.
pub fn injective_envelope_sequence<F: Field>(m: &Module<F>) -> Result<(Morphism<F>, Morphism<F>)> {
    let a = m.algebra();
    let injs: Vec<Module<F>> = (0..a.num_vertices()).map(|v| Module::injective(a, v)).collect();
    let ap = left_approximation(m, &injs, true)?;
    if !ap.map.is_injective() {
        return Err(Error::Internal("injective envelope is not a monomorphism".into()));
    }
    let proj = ap.map.cokernel()?;
    Ok((ap.map, proj))
}

/// Simple functor at object `x`: the top of `cat(-, X)`.
pub fn simple_functor<F: Field>(gamma: &CategoryAlgebra<F>, label: &str, x: usize) -> FunctorModule<F> {
    FunctorModule {
        module: Module::simple(&gamma.gamma, x),
        provenance: Provenance::Simple(label.to_string()),
        yoneda: None,
    }
}

/// Injective functor `D cat(X, -)`.
pub fn injective_functor<F: Field>(gamma: &CategoryAlgebra<F>, label: &str, x: usize) -> FunctorModule<F> {
    FunctorModule {
        module: Module::injective(&gamma.gamma, x),
        provenance: Provenance::Injective(label.to_string()),
        yoneda: None,
    }
}

