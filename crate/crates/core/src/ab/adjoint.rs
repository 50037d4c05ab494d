//! Right adjoint of the inclusion `X/[ω] -> A/[ω]`: `R(M) = X_M`, the source
//! of the right `X`-approximation, with the approximation as counit.

use super::approx::right_approx;
use super::{SubcatSpec, Universe};
use crate::algebra::{Module, Morphism};
use crate::error::Result;
use crate::lincat::HomClasses;
use crate::linalg::{Field, Mat};

#[derive(Debug, Clone)]
pub struct AdjointWitness<F: Field> {
    pub object: Module<F>,
    pub counit: Morphism<F>,
    /// Per member `X`: `(label, dim X̄(X, R M), dim Ā(X, M), bijective)`.
    pub checks: Vec<(String, usize, usize, bool)>,
}

impl<F: Field> AdjointWitness<F> {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.3)
    }
}

/// `R(M)` with the bijection `X̄(X, R M) -> Ā(X, M)`, `h ↦ counit ∘ h`,
/// checked on every member of `X`.
pub fn adjoint_r<F: Field>(u: &Universe<F>, x: &SubcatSpec, omega: &SubcatSpec, m: &Module<F>) -> Result<AdjointWitness<F>> {
    let ap = right_approx(u, x, m, true)?;
    let ideal = u.members(omega);
    let mut checks = Vec::new();
    for xm in u.members(x) {
        let left = HomClasses::modulo(&xm, &ap.object, &ideal)?;
        let right = HomClasses::modulo(&xm, m, &ideal)?;
        let (dl, dr) = (left.dim(), right.dim());
        let ok = if dl != dr {
            false
        } else if dl == 0 {
            true
        } else {
            let rows: Vec<Vec<F>> = (0..dl).map(|k| right.class_of(&ap.map.compose(&left.rep(k)))).collect();
            Mat::from_rows(rows).rank() == dl
        };
        checks.push((xm.name(), dl, dr, ok));
    }
    Ok(AdjointWitness { object: ap.object, counit: ap.map, checks })
}
