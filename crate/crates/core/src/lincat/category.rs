//! Finite k-linear categories realized by modules, and their ideal
//! quotients.
//!
//! Objects are pairwise non-isomorphic indecomposable modules. The Hom space
//! `cat(i, j)` is `Hom(M_i, M_j)` modulo the ideal of maps factoring through
//! the modules recorded in [`LinCat::ideal_modules`]. Each quotient space
//! carries a basis of representatives; for `i = j` the first one is the
//! identity and the rest lie in the radical of `End(M_i)`.

use std::collections::HashMap;

use crate::algebra::ar::radical_endomorphisms;
use crate::algebra::{hom_basis, iso_test, Algebra, HomSpace, Module, Morphism};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// `Hom(M_i, M_j)` modulo the ideal, with a chosen basis of classes.
#[derive(Debug, Clone)]
pub struct HomClasses<F: Field> {
    full: HomSpace<F>,
    /// Basis of the ideal part, in coordinates of `full`.
    ideal: Vec<Vec<F>>,
    /// Representatives of the class basis, in coordinates of `full`.
    reps: Vec<Vec<F>>,
    /// Row vector of full coordinates times this gives class coordinates.
    to_class: Mat<F>,
}

impl<F: Field> HomClasses<F> {
    fn new(full: HomSpace<F>, ideal_span: Vec<Vec<F>>, preferred: Vec<Vec<F>>) -> Result<Self> {
        let d = full.dim();
        let ideal: Vec<Vec<F>> = if ideal_span.is_empty() {
            Vec::new()
        } else {
            let rr = Mat::from_rows(ideal_span).rref();
            (0..rr.pivots.len()).map(|i| rr.reduced.row(i).to_vec()).collect()
        };
        let mut rows = ideal.clone();
        let mut rank = rows.len();
        let mut reps = Vec::new();
        let unit = |k: usize| {
            let mut v = vec![F::zero(); d];
            v[k] = F::one();
            v
        };
        for cand in preferred.into_iter().chain((0..d).map(unit)) {
            if rank == d {
                break;
            }
            rows.push(cand.clone());
            let r = crate::linalg::rank_of_vectors(&rows, d);
            if r > rank {
                rank = r;
                reps.push(cand);
            } else {
                rows.pop();
            }
        }
        let to_class = if d == 0 {
            Mat::zeros(0, 0)
        } else {
            let b = Mat::from_rows(rows);
            let inv = b.inverse().ok_or_else(|| Error::Internal("class basis is not a complement".into()))?;
            inv.submatrix(0..d, ideal.len()..d)
        };
        Ok(HomClasses { full, ideal, reps, to_class })
    }

    /// `Hom(m, n)` modulo maps factoring through `add(ideal)`, for arbitrary
    /// modules of the ambient category.
    pub fn modulo(m: &Module<F>, n: &Module<F>, ideal: &[Module<F>]) -> Result<Self> {
        let full = hom_basis(m, n)?;
        let span = ideal_rows(&full, ideal)?;
        Self::new(full, span, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.full.dim()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.len()
    }

    pub fn full(&self) -> &HomSpace<F> {
        &self.full
    }

    /// Representative of the `k`-th basis class.
    pub fn rep(&self, k: usize) -> Morphism<F> {
        self.full.combination(&self.reps[k])
    }

    /// Representative of a class given by coordinates.
    pub fn lift(&self, coords: &[F]) -> Morphism<F> {
        let mut full = vec![F::zero(); self.full.dim()];
        for (c, r) in coords.iter().zip(&self.reps) {
            for (x, y) in full.iter_mut().zip(r) {
                x.add_mul_assign(c, y);
            }
        }
        self.full.combination(&full)
    }

    /// Class coordinates of an ambient morphism `M_i -> M_j`.
    pub fn class_of(&self, f: &Morphism<F>) -> Vec<F> {
        let c = self.full.coords(f);
        if c.is_empty() {
            return Vec::new();
        }
        Mat::from_rows(vec![c]).mul(&self.to_class).row(0).to_vec()
    }
}

/// A finite k-linear category with module realizations.
#[derive(Debug, Clone)]
pub struct LinCat<F: Field> {
    name: String,
    objects: Vec<Module<F>>,
    homs: Vec<Vec<HomClasses<F>>>,
    ideal_modules: Vec<Module<F>>,
    ideal_labels: Vec<String>,
}

fn label_of<F: Field>(m: &Module<F>, i: usize) -> String {
    m.label().map(str::to_string).unwrap_or_else(|| format!("X{}", i + 1))
}

fn check_objects<F: Field>(objects: &[Module<F>]) -> Result<()> {
    if objects.is_empty() {
        return Err(Error::Input("a category needs at least one object".into()));
    }
    let a = objects[0].algebra();
    for m in objects {
        if m.algebra() != a {
            return Err(Error::Input("objects live over different algebras".into()));
        }
        if m.is_zero() {
            return Err(Error::Input("zero module is not an indecomposable object".into()));
        }
    }
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate().skip(i + 1) {
            if iso_test(x, y)?.is_iso() {
                return Err(Error::Input(format!(
                    "objects {} and {} are isomorphic",
                    label_of(x, i),
                    label_of(y, j)
                )));
            }
        }
    }
    Ok(())
}

impl<F: Field> LinCat<F> {
    /// Full subcategory of the module category on the given indecomposables.
    pub fn new(name: impl Into<String>, objects: Vec<Module<F>>) -> Result<Self> {
        check_objects(&objects)?;
        let objects: Vec<Module<F>> =
            objects.iter().enumerate().map(|(i, m)| m.with_label(label_of(m, i))).collect();
        let n = objects.len();
        let mut homs = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(Self::classes(&objects, i, j, &[], &[])?);
            }
            homs.push(row);
        }
        Ok(LinCat { name: name.into(), objects, homs, ideal_modules: Vec::new(), ideal_labels: Vec::new() })
    }

    fn classes(
        objects: &[Module<F>],
        i: usize,
        j: usize,
        old_ideal: &[Vec<F>],
        through: &[Module<F>],
    ) -> Result<HomClasses<F>> {
        let full = hom_basis(&objects[i], &objects[j])?;
        let mut span = old_ideal.to_vec();
        for w in through {
            let into = hom_basis(&objects[i], w)?;
            if into.dim() == 0 {
                continue;
            }
            let out = hom_basis(w, &objects[j])?;
            for g in out.basis() {
                for f in into.basis() {
                    let c = full.coords(&g.compose(f));
                    if c.iter().any(|x| !x.is_zero()) {
                        span.push(c);
                    }
                }
            }
        }
        let mut preferred = Vec::new();
        if i == j {
            preferred.push(full.coords(&Morphism::identity(&objects[i])));
            for r in radical_endomorphisms(&objects[i])? {
                preferred.push(full.coords(&r));
            }
        }
        HomClasses::new(full, span, preferred)
    }

    /// Ideal quotient by the maps factoring through `add(omega)`. Objects in
    /// `omega`, and any object whose identity falls in the ideal, are dropped.
    pub fn quotient_by(&self, omega: &[usize]) -> Result<Self> {
        for &w in omega {
            if w >= self.objects.len() {
                return Err(Error::Input(format!("object index {w} is not in the category")));
            }
        }
        let through: Vec<Module<F>> = omega.iter().map(|&w| self.objects[w].clone()).collect();
        self.quotient_by_modules(&through)
    }

    /// Quotient by maps factoring through arbitrary modules of the ambient
    /// module category.
    pub fn quotient_by_modules(&self, through: &[Module<F>]) -> Result<Self> {
        let n = self.objects.len();
        let mut ideal_modules = self.ideal_modules.clone();
        let mut ideal_labels = self.ideal_labels.clone();
        for w in through {
            ideal_modules.push(w.clone());
            ideal_labels.push(w.name());
        }
        // drop objects that become zero
        let mut keep = Vec::new();
        let mut homs_all: HashMap<(usize, usize), HomClasses<F>> = HashMap::new();
        for i in 0..n {
            let c = Self::classes(&self.objects, i, i, &self.homs[i][i].ideal, through)?;
            if c.dim() > 0 {
                keep.push(i);
                homs_all.insert((i, i), c);
            }
        }
        let objects: Vec<Module<F>> = keep.iter().map(|&i| self.objects[i].clone()).collect();
        let mut homs = Vec::with_capacity(keep.len());
        for &i in &keep {
            let mut row = Vec::with_capacity(keep.len());
            for &j in &keep {
                let c = match homs_all.remove(&(i, j)) {
                    Some(c) => c,
                    None => Self::classes(&self.objects, i, j, &self.homs[i][j].ideal, through)?,
                };
                row.push(c);
            }
            homs.push(row);
        }
        let name = format!("{}/[{}]", self.name, through.iter().map(Module::name).collect::<Vec<_>>().join(","));
        Ok(LinCat { name, objects, homs, ideal_modules, ideal_labels })
    }

    /// Full subcategory on the given objects, keeping the ideal.
    pub fn full_subcategory(&self, keep: &[usize]) -> Result<Self> {
        for &i in keep {
            if i >= self.objects.len() {
                return Err(Error::Input(format!("object index {i} is not in the category")));
            }
        }
        let objects = keep.iter().map(|&i| self.objects[i].clone()).collect();
        let homs = keep.iter().map(|&i| keep.iter().map(|&j| self.homs[i][j].clone()).collect()).collect();
        Ok(LinCat {
            name: format!("{}|sub", self.name),
            objects,
            homs,
            ideal_modules: self.ideal_modules.clone(),
            ideal_labels: self.ideal_labels.clone(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[Module<F>] {
        &self.objects
    }

    pub fn object(&self, i: usize) -> &Module<F> {
        &self.objects[i]
    }

    pub fn labels(&self) -> Vec<String> {
        self.objects.iter().map(Module::name).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|m| m.label() == Some(label))
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomClasses<F> {
        &self.homs[i][j]
    }

    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.homs[i][j].dim()
    }

    /// Modules whose maps were quotiented out.
    pub fn ideal_modules(&self) -> &[Module<F>] {
        &self.ideal_modules
    }

    pub fn ideal_labels(&self) -> &[String] {
        &self.ideal_labels
    }

    pub fn base_algebra(&self) -> &Algebra<F> {
        self.objects[0].algebra()
    }

    /// Class coordinates of `g ∘ f` for classes `f: i -> j`, `g: j -> k`.
    pub fn compose(&self, i: usize, j: usize, k: usize, g: &[F], f: &[F]) -> Vec<F> {
        let fr = self.homs[i][j].lift(f);
        let gr = self.homs[j][k].lift(g);
        self.homs[i][k].class_of(&gr.compose(&fr))
    }

    /// Is the ambient map `f: M_i -> M_j` zero in the quotient?
    pub fn is_zero_class(&self, i: usize, j: usize, f: &Morphism<F>) -> bool {
        self.homs[i][j].class_of(f).iter().all(F::is_zero)
    }

    /// Dimension of the subspace of `Hom(M, N)` (ambient modules, not
    /// necessarily objects) of maps factoring through the ideal modules.
    pub fn ideal_part_dim(&self, m: &Module<F>, n: &Module<F>) -> Result<usize> {
        let h = hom_basis(m, n)?;
        Ok(ideal_rows(&h, &self.ideal_modules)?.len())
    }
}

/// RREF basis (in coordinates of `h`) of maps factoring through `add(through)`.
pub(crate) fn ideal_rows<F: Field>(h: &HomSpace<F>, through: &[Module<F>]) -> Result<Vec<Vec<F>>> {
    let mut span = Vec::new();
    for w in through {
        let into = hom_basis(h.source(), w)?;
        if into.dim() == 0 {
            continue;
        }
        let out = hom_basis(w, h.target())?;
        for g in out.basis() {
            for f in into.basis() {
                let c = h.coords(&g.compose(f));
                if c.iter().any(|x| !x.is_zero()) {
                    span.push(c);
                }
            }
        }
    }
    if span.is_empty() {
        return Ok(span);
    }
    let rr = Mat::from_rows(span).rref();
    Ok((0..rr.pivots.len()).map(|i| rr.reduced.row(i).to_vec()).collect())
}
