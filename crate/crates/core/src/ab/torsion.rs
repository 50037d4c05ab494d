//! Torsion classes give the approximation conditions for free: the torsion
//! part `tM -> M` is a right `X`-approximation with zero kernel.

use super::conditions::Ab2Verdict;
use super::{SubcatSpec, Universe};
use crate::algebra::approx::right_approximation;
use crate::algebra::homological::{ext_dims_up_to, syzygy_step};
use crate::algebra::{hom_basis, Module, Morphism};
use crate::error::Result;
use crate::linalg::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionReport {
    /// `(source, quotient summand)` for an image leaving `X`.
    pub quotient_violation: Option<(String, String)>,
    /// `(X_1, X_2, middle summand)` for an extension leaving `X`.
    pub extension_violation: Option<(String, String, String)>,
    pub ext_vanishing: Ab2Verdict,
    /// Torsion part of each universe module, as universe indices.
    pub torsion_parts: Vec<(String, Vec<usize>)>,
    pub tested_quotients: usize,
    pub tested_extensions: usize,
}

impl TorsionReport {
    pub fn passed(&self) -> bool {
        self.quotient_violation.is_none()
            && self.extension_violation.is_none()
            && matches!(self.ext_vanishing, Ab2Verdict::HoldsUpTo(_))
    }
}

fn first_outside<F: Field>(u: &Universe<F>, x: &SubcatSpec, m: &Module<F>) -> Result<Option<String>> {
    if m.is_zero() {
        return Ok(None);
    }
    Ok(u.decompose(m)?.summands.into_iter().find(|s| !x.contains(*s)).map(|s| u.module(s).name()))
}

/// Checks that `X` is closed under quotients (images of hom-basis maps) and
/// extensions (pushouts along a basis of `Hom(Ω X_2, X_1)`), and that
/// `Ext^i(X, ω) = 0` for `i <= bound`.
pub fn torsion_ab_check<F: Field>(u: &Universe<F>, x: &SubcatSpec, omega: &SubcatSpec, bound: usize) -> Result<TorsionReport> {
    let a = u.algebra();
    let xs = u.members(x);
    let mut quotient_violation = None;
    let mut tested_quotients = 0;
    'q: for m in &xs {
        for t in u.modules() {
            for h in hom_basis(m, t)?.basis() {
                tested_quotients += 1;
                let img = h.image()?;
                if let Some(bad) = first_outside(u, x, img.source())? {
                    quotient_violation = Some((m.name(), bad));
                    break 'q;
                }
            }
        }
    }
    let mut extension_violation = None;
    let mut tested_extensions = 0;
    'e: for x2 in &xs {
        let (_, ses) = syzygy_step(x2)?;
        let iota = &ses.inclusion;
        let k = iota.source();
        if k.is_zero() {
            continue;
        }
        for x1 in &xs {
            for xi in hom_basis(k, x1)?.basis() {
                tested_extensions += 1;
                let sum = Module::direct_sum(a, &[x1.clone(), iota.target().clone()])?;
                let into = Morphism::from_rows(k, &sum.sum, &[xi.clone(), iota.neg()]);
                let e = into.cokernel()?;
                if let Some(bad) = first_outside(u, x, e.target())? {
                    extension_violation = Some((x1.name(), x2.name(), bad));
                    break 'e;
                }
            }
        }
    }
    let mut ext_vanishing = Ab2Verdict::HoldsUpTo(bound);
    'v: for m in &xs {
        for w in u.members(omega) {
            let d = ext_dims_up_to(m, &w, bound)?;
            if let Some(i) = d.iter().position(|&v| v > 0) {
                ext_vanishing = Ab2Verdict::Violation { x: m.name(), omega: w.name(), degree: i + 1, dim: d[i] };
                break 'v;
            }
        }
    }
    let mut torsion_parts = Vec::new();
    for m in u.modules() {
        let ap = right_approximation(&xs, m, false)?;
        let img = ap.map.image()?;
        let parts = if img.source().is_zero() { Vec::new() } else { u.decompose(img.source())?.summands };
        torsion_parts.push((m.name(), parts));
    }
    Ok(TorsionReport {
        quotient_violation,
        extension_violation,
        ext_vanishing,
        torsion_parts,
        tested_quotients,
        tested_extensions,
    })
}
