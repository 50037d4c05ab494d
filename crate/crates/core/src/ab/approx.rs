use super::{SubcatSpec, Universe};
use crate::algebra::approx::{is_right_approximation, right_approximation, Approximation};
use crate::algebra::{Module, Morphism};
use crate::error::{Error, Result};
use crate::linalg::Field;

/// Right `X`-approximation of `m`, verified before it is returned.
pub fn right_approx<F: Field>(u: &Universe<F>, x: &SubcatSpec, m: &Module<F>, minimal: bool) -> Result<Approximation<F>> {
    let members = u.members(x);
    let mut ap = right_approximation(&members, m, minimal)?;
    ap.summands = ap.summands.iter().map(|&k| x.members[k]).collect();
    if !is_right_approximation(&members, &ap.map)? {
        return Err(Error::Internal(format!("approximation of {} by {} fails to factor", m.name(), x.name)));
    }
    Ok(ap)
}

/// `Ω_B^k(m)`: iterated kernels of minimal right `B`-approximations.
pub fn relative_syzygy<F: Field>(u: &Universe<F>, b: &SubcatSpec, m: &Module<F>, k: usize) -> Result<Module<F>> {
    let mut cur = m.clone();
    for _ in 0..k {
        if cur.is_zero() {
            break;
        }
        let ap = right_approx(u, b, &cur, true)?;
        cur = ap.map.kernel()?.source().clone();
    }
    Ok(cur)
}

/// `0 -> X_n -> ... -> X_0 -> M -> 0` with every `X_i ∈ add ω`.
#[derive(Debug, Clone)]
pub struct FiniteResolution<F: Field> {
    /// Universe indices of the summands of each term.
    pub terms: Vec<Vec<usize>>,
    /// `X_0 -> M`, then `X_{i+1} -> X_i`.
    pub maps: Vec<Morphism<F>>,
}

impl<F: Field> FiniteResolution<F> {
    /// Number of nonzero terms minus one; `None` for `M = 0`.
    pub fn length(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }
}

/// Resolution of `m` by `add ω` along minimal right approximations, if one
/// of at most `bound + 1` terms exists this way.
pub fn omega_hat_resolve<F: Field>(
    u: &Universe<F>,
    omega: &SubcatSpec,
    m: &Module<F>,
    bound: usize,
) -> Result<Option<FiniteResolution<F>>> {
    let mut res = FiniteResolution { terms: Vec::new(), maps: Vec::new() };
    let mut cur = m.clone();
    let mut into: Option<Morphism<F>> = None;
    for _ in 0..=bound {
        if cur.is_zero() {
            return Ok(Some(res));
        }
        let ap = right_approx(u, omega, &cur, true)?;
        if !ap.map.is_surjective() {
            return Ok(None);
        }
        let inc = ap.map.kernel()?;
        let step = match &into {
            None => ap.map.clone(),
            Some(i) => i.compose(&ap.map),
        };
        res.terms.push(ap.summands.clone());
        res.maps.push(step);
        cur = inc.source().clone();
        into = Some(inc);
    }
    Ok(if cur.is_zero() { Some(res) } else { None })
}

/// Least `n <= bound` with `Ω_X^n(l) ∈ add X`.
pub fn syzygy_stabilization<F: Field>(u: &Universe<F>, x: &SubcatSpec, l: &Module<F>, bound: usize) -> Result<Option<usize>> {
    let mut cur = l.clone();
    for n in 0..=bound {
        if u.in_add(x, &cur)? {
            return Ok(Some(n));
        }
        cur = relative_syzygy(u, x, &cur, 1)?;
    }
    Ok(None)
}
