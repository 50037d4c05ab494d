//! Approximation theory relative to a chain of subcategories
//! `A ⊇ X ⊇ ω` of a module category.
//!
//! Subcategories are `add` of a list of indecomposables taken from a
//! [`Universe`], a complete list of indecomposable modules up to
//! isomorphism.

mod adjoint;
mod approx;
mod conditions;
mod cotilting;
mod gorenstein;
mod presentation;
mod torsion;

pub use adjoint::{adjoint_r, AdjointWitness};
pub use approx::{omega_hat_resolve, relative_syzygy, right_approx, syzygy_stabilization, FiniteResolution};
pub use conditions::{check_conditions, AbParams, AbReport, Ab1Verdict, Ab2Verdict, Ab3Entry, ApproxTriple};
pub use cotilting::{cotilting_check, perp, CotiltingReport};
pub use gorenstein::{gp_mapping_cone_ab3, ig_certificate, IgCertificate};
pub use presentation::{vanishing_presentation, relative_syzygy_resolution, VanishingPresentation, RelativeResolution};
pub use torsion::{torsion_ab_check, TorsionReport};

use crate::algebra::decompose::{decompose, Decomposition, HomDimMatrix};
use crate::algebra::nakayama::enumerate_indecomposables;
use crate::algebra::{iso_test, Algebra, Module};
use crate::error::{Error, Result};
use crate::linalg::Field;

/// A complete list of pairwise non-isomorphic indecomposables.
#[derive(Debug, Clone)]
pub struct Universe<F: Field> {
    algebra: Algebra<F>,
    modules: Vec<Module<F>>,
    hd: HomDimMatrix,
}

impl<F: Field> Universe<F> {
    /// All indecomposables of a Nakayama algebra.
    pub fn of(algebra: &Algebra<F>) -> Result<Self> {
        Self::from_modules(algebra, enumerate_indecomposables(algebra)?)
    }

    pub fn from_modules(algebra: &Algebra<F>, modules: Vec<Module<F>>) -> Result<Self> {
        let modules: Vec<Module<F>> = modules
            .into_iter()
            .enumerate()
            .map(|(i, m)| if m.label().is_some() { m } else { m.with_label(format!("U{i}")) })
            .collect();
        let hd = HomDimMatrix::new(&modules)?;
        Ok(Universe { algebra: algebra.clone(), modules, hd })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn modules(&self) -> &[Module<F>] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &Module<F> {
        &self.modules[i]
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.modules.iter().map(Module::name).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.modules.iter().position(|m| m.name() == label)
    }

    /// Indices for a list of labels; unknown labels are an input error.
    pub fn indices(&self, labels: &[&str]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| self.index_of(l).ok_or_else(|| Error::Input(format!("unknown module label {l}"))))
            .collect()
    }

    pub fn decompose(&self, m: &Module<F>) -> Result<Decomposition<F>> {
        decompose(m, &self.modules, &self.hd)
    }

    /// Index of the indecomposable isomorphic to `m`.
    pub fn find(&self, m: &Module<F>) -> Result<Option<usize>> {
        for (i, u) in self.modules.iter().enumerate() {
            if u.dims() == m.dims() && iso_test(u, m)?.is_iso() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn projectives(&self) -> Result<SubcatSpec> {
        let members = (0..self.algebra.num_vertices())
            .map(|v| self.find(&Module::projective(&self.algebra, v))?.ok_or_else(|| missing("projective")))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubcatSpec::new("proj", members))
    }

    pub fn injectives(&self) -> Result<SubcatSpec> {
        let members = (0..self.algebra.num_vertices())
            .map(|v| self.find(&Module::injective(&self.algebra, v))?.ok_or_else(|| missing("injective")))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubcatSpec::new("inj", members))
    }

    pub fn everything(&self) -> SubcatSpec {
        SubcatSpec::new("mod", (0..self.len()).collect())
    }

    /// Is every indecomposable summand of `m` a member of `x`?
    pub fn in_add(&self, x: &SubcatSpec, m: &Module<F>) -> Result<bool> {
        if m.is_zero() {
            return Ok(true);
        }
        Ok(self.decompose(m)?.summands.iter().all(|s| x.contains(*s)))
    }

    pub fn members(&self, x: &SubcatSpec) -> Vec<Module<F>> {
        x.members.iter().map(|&i| self.modules[i].clone()).collect()
    }
}

fn missing(kind: &str) -> Error {
    Error::Validation(format!("universe lacks an indecomposable {kind} module"))
}

/// `add` of a set of universe members.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SubcatSpec {
    pub name: String,
    /// Sorted, duplicate-free universe indices.
    pub members: Vec<usize>,
}

impl SubcatSpec {
    pub fn new(name: impl Into<String>, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        SubcatSpec { name: name.into(), members }
    }

    /// Subcategory from module labels.
    pub fn from_labels<F: Field>(name: impl Into<String>, u: &Universe<F>, labels: &[&str]) -> Result<Self> {
        Ok(Self::new(name, u.indices(labels)?))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubcatSpec) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn labels<F: Field>(&self, u: &Universe<F>) -> Vec<String> {
        self.members.iter().map(|&i| u.module(i).name()).collect()
    }
}
