//! Minimal projective resolutions of functor modules, with terms labeled by
//! the objects of the category, and the global/Gorenstein report.

use rayon::prelude::*;

use super::category::LinCat;
use super::functor::FunctorModule;
use super::gamma::CategoryAlgebra;
use crate::algebra::homological::{resolve, syzygy_step, HomDim, Resolution, Termination};
use crate::algebra::{iso_test, Module};
use crate::error::{Error, Result};
use crate::linalg::Field;

/// A resolution with each term `P_i` written as a sorted multiset of object
/// labels (`cat(-, X)` for each label `X`).
#[derive(Debug, Clone)]
pub struct ResolutionTrace<F: Field> {
    pub resolution: Resolution<F>,
    pub terms: Vec<Vec<String>>,
    /// `Ω^i ≅ Ω^j` with `i < j`.
    pub period: Option<(usize, usize)>,
    pub truncated_at: Option<usize>,
}

impl<F: Field> ResolutionTrace<F> {
    fn from_resolution(resolution: Resolution<F>, labels: &[String]) -> Self {
        let terms = resolution
            .term_vertices()
            .into_iter()
            .map(|vs| {
                let mut t: Vec<String> = vs.into_iter().map(|v| labels[v].clone()).collect();
                t.sort();
                t
            })
            .collect();
        let (period, truncated_at) = match &resolution.termination {
            Termination::Periodic { first, second, .. } => (Some((*first, *second)), None),
            Termination::Truncated { cutoff } => (None, Some(*cutoff)),
            Termination::Finite { .. } => (None, None),
        };
        ResolutionTrace { resolution, terms, period, truncated_at }
    }

    pub fn projective_dimension(&self) -> HomDim {
        self.resolution.projective_dimension()
    }

    /// `Ω^i` of the resolved module.
    pub fn syzygy(&self, i: usize) -> &Module<F> {
        &self.resolution.syzygies[i]
    }
}

/// Minimal resolution stopping at the first zero or recurring syzygy.
pub fn minimal_resolution<F: Field>(
    gamma: &CategoryAlgebra<F>,
    f: &FunctorModule<F>,
    cutoff: usize,
) -> Result<ResolutionTrace<F>> {
    if cutoff == 0 {
        return Err(Error::Input("cutoff must be at least 1".into()));
    }
    let res = resolve(&f.module, cutoff)?;
    Ok(ResolutionTrace::from_resolution(res, &gamma.gamma.vertex_labels()))
}

/// Exactly `steps` terms of the minimal resolution (fewer if a syzygy
/// vanishes), without recurrence detection.
pub fn resolution_prefix<F: Field>(gamma: &CategoryAlgebra<F>, f: &FunctorModule<F>, steps: usize) -> Result<ResolutionTrace<F>> {
    let m = &f.module;
    let mut res = Resolution {
        covers: Vec::new(),
        syzygies: vec![m.clone()],
        inclusions: Vec::new(),
        termination: Termination::Truncated { cutoff: steps },
    };
    for step in 0..steps {
        let cur = res.syzygies[step].clone();
        if cur.is_zero() {
            res.termination = Termination::Finite { length: step };
            break;
        }
        let (cover, ses) = syzygy_step(&cur)?;
        res.covers.push(cover);
        res.syzygies.push(ses.inclusion.source().clone());
        res.inclusions.push(ses.inclusion);
    }
    let mut trace = ResolutionTrace::from_resolution(res, &gamma.gamma.vertex_labels());
    trace.truncated_at = None;
    Ok(trace)
}

/// One homological dimension with the data that decides it.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DimRecord {
    pub object: String,
    pub dim: HomDim,
    /// Recurrence `(i, j)` witnessing an infinite value.
    pub period: Option<(usize, usize)>,
    pub terms: Vec<Vec<String>>,
}

impl DimRecord {
    pub fn new<F: Field>(object: String, t: &ResolutionTrace<F>) -> Self {
        DimRecord { object, dim: t.projective_dimension(), period: t.period, terms: t.terms.clone() }
    }
}

/// Gorenstein verdict: `Some(true)` if every indecomposable projective has
/// finite injective dimension on both sides, `Some(false)` if one has an
/// infinite one, `None` if a computation was truncated.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IgReport {
    /// `id cat(-, X)` per object.
    pub right: Vec<DimRecord>,
    /// `id cat(X, -)` over the opposite category, computed as `pd D cat(X, -)`.
    pub left: Vec<DimRecord>,
    pub verdict: Option<bool>,
}

/// Global dimension and Gorenstein analysis of a category algebra.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HomologicalReport {
    pub gd: HomDim,
    /// `pd` of the simple functor at each object.
    pub simples: Vec<DimRecord>,
    pub ig: IgReport,
}

fn fold(records: &[DimRecord]) -> HomDim {
    records.iter().fold(HomDim::Finite(0), |acc, r| acc.max(r.dim))
}

pub fn homological_report<F: Field>(cat: &LinCat<F>, gamma: &CategoryAlgebra<F>, cutoff: usize) -> Result<HomologicalReport> {
    if cutoff == 0 {
        return Err(Error::Input("cutoff must be at least 1".into()));
    }
    let g = &gamma.gamma;
    let labels = cat.labels();
    let n = cat.len();
    let run = |m: Module<F>, label: String| -> Result<DimRecord> {
        let res = resolve(&m, cutoff)?;
        Ok(DimRecord::new(label, &ResolutionTrace::from_resolution(res, &labels)))
    };
    let simples = (0..n)
        .into_par_iter()
        .map(|v| run(Module::simple(g, v), labels[v].clone()))
        .collect::<Result<Vec<_>>>()?;
    let gop = g.opposite();
    let right = (0..n)
        .into_par_iter()
        .map(|v| run(Module::projective(g, v).dual(), labels[v].clone()))
        .collect::<Result<Vec<_>>>()?;
    let left = (0..n)
        .into_par_iter()
        .map(|v| run(Module::projective(&gop, v).dual(), labels[v].clone()))
        .collect::<Result<Vec<_>>>()?;
    let all = fold(&right).max(fold(&left));
    let verdict = match all {
        HomDim::Finite(_) => Some(true),
        HomDim::Infinite => Some(false),
        HomDim::Unknown => None,
    };
    Ok(HomologicalReport { gd: fold(&simples), simples, ig: IgReport { right, left, verdict } })
}

/// `Ω^i ≅ Ω^j` decided on an explicit prefix.
pub fn syzygies_isomorphic<F: Field>(trace: &ResolutionTrace<F>, i: usize, j: usize) -> Result<bool> {
    let s = &trace.resolution.syzygies;
    if j >= s.len() {
        return Err(Error::Input(format!("trace has only {} syzygies", s.len())));
    }
    Ok(iso_test(&s[i], &s[j])?.is_iso())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nakayama::{nakayama, Shape};
    use crate::lincat::functor::representable;
    use crate::linalg::Q;

    #[test]
    fn representable_has_length_one_trace() {
        let a = nakayama::<Q>(&[3, 2, 1], Shape::Linear).unwrap();
        let objs = (0..3).map(|v| Module::projective(&a, v)).collect();
        let cat = LinCat::new("proj", objs).unwrap();
        let g = CategoryAlgebra::new(&cat).unwrap();
        let f = representable(&cat, &g, 1).unwrap();
        let t = minimal_resolution(&g, &f, 10).unwrap();
        assert_eq!(t.projective_dimension(), HomDim::Finite(0));
        assert_eq!(t.terms.len(), 1);
    }

    #[test]
    fn projectives_of_hereditary_algebra_give_gd_one() {
        let a = nakayama::<Q>(&[3, 2, 1], Shape::Linear).unwrap();
        let objs = (0..3).map(|v| Module::projective(&a, v)).collect();
        let cat = LinCat::new("proj", objs).unwrap();
        let g = CategoryAlgebra::new(&cat).unwrap();
        let r = homological_report(&cat, &g, 20).unwrap();
        assert_eq!(r.gd, HomDim::Finite(1));
        assert_eq!(r.ig.verdict, Some(true));
    }
}
