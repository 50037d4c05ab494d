//! Left perpendicular categories and cotilting verification.

use rayon::prelude::*;

use super::{SubcatSpec, Universe};
use crate::algebra::approx::left_approximation;
use crate::algebra::homological::{ext_dims_up_to, injective_dimension, HomDim};
use crate::error::Result;
use crate::linalg::Field;

/// `⊥T`: members `M` of the universe with `Ext^i(M, T) = 0` for
/// `1 <= i <= bound`. Complete once `bound >= id T`.
pub fn perp<F: Field>(u: &Universe<F>, t: &SubcatSpec, bound: usize) -> Result<SubcatSpec> {
    let tm = u.members(t);
    let keep: Vec<bool> = u
        .modules()
        .par_iter()
        .map(|m| -> Result<bool> {
            for x in &tm {
                if ext_dims_up_to(m, x, bound)?.iter().any(|&d| d > 0) {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect::<Result<Vec<_>>>()?;
    let members = (0..u.len()).filter(|&i| keep[i]).collect();
    Ok(SubcatSpec::new(format!("perp({})", t.name), members))
}

/// `0 -> M -> T_M -> M' -> 0` from a minimal left `add T`-approximation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coresolution {
    pub module: String,
    /// Universe indices of the summands of `T_M`.
    pub middle: Vec<usize>,
    /// Universe indices of the summands of `M'` (empty when the map is not mono).
    pub cokernel: Vec<usize>,
    pub mono: bool,
    pub cokernel_in_perp: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotiltingReport {
    /// `id` of each member of `T`.
    pub ids: Vec<(String, HomDim)>,
    pub id_bound: HomDim,
    /// First `(M, N, i)` with `Ext^i(M, N) != 0` among members.
    pub ext_violation: Option<(String, String, usize)>,
    pub perp: SubcatSpec,
    pub coresolutions: Vec<Coresolution>,
}

impl CotiltingReport {
    pub fn is_cotilting(&self) -> bool {
        self.id_bound.finite().is_some()
            && self.ext_violation.is_none()
            && self.coresolutions.iter().all(|c| c.mono && c.cokernel_in_perp)
    }

    pub fn first_failure(&self) -> Option<String> {
        if let HomDim::Infinite | HomDim::Unknown = self.id_bound {
            return Some(format!("injective dimension of T is {}", self.id_bound));
        }
        if let Some((m, n, i)) = &self.ext_violation {
            return Some(format!("Ext^{i}({m}, {n}) != 0"));
        }
        self.coresolutions.iter().find(|c| !(c.mono && c.cokernel_in_perp)).map(|c| {
            if c.mono {
                format!("cokernel of the T-approximation of {} is not in perp(T)", c.module)
            } else {
                format!("{} does not embed into add T", c.module)
            }
        })
    }
}

/// Checks the three cotilting conditions: finite `id`, self-orthogonality,
/// and a coresolving sequence for every member of `⊥T`.
pub fn cotilting_check<F: Field>(u: &Universe<F>, t: &SubcatSpec, cutoff: usize) -> Result<CotiltingReport> {
    let tm = u.members(t);
    let ids = tm
        .iter()
        .map(|m| Ok((m.name(), injective_dimension(m, cutoff)?)))
        .collect::<Result<Vec<_>>>()?;
    let id_bound = ids.iter().fold(HomDim::Finite(0), |acc, (_, d)| acc.max(*d));
    let bound = match id_bound {
        HomDim::Finite(d) => d.max(1),
        _ => {
            return Ok(CotiltingReport {
                ids,
                id_bound,
                ext_violation: None,
                perp: SubcatSpec::new("perp", Vec::new()),
                coresolutions: Vec::new(),
            })
        }
    };
    let mut ext_violation = None;
    'outer: for a in &tm {
        for b in &tm {
            let dims = ext_dims_up_to(a, b, bound)?;
            if let Some(i) = dims.iter().position(|&d| d > 0) {
                ext_violation = Some((a.name(), b.name(), i + 1));
                break 'outer;
            }
        }
    }
    let perp = perp(u, t, bound)?;
    let coresolutions = perp
        .members
        .par_iter()
        .map(|&i| {
            let m = u.module(i);
            let ap = left_approximation(m, &tm, true)?;
            let middle = ap.summands.iter().map(|&k| t.members[k]).collect();
            let mono = ap.map.is_injective();
            let (cokernel, cokernel_in_perp) = if mono {
                let c = ap.map.cokernel()?;
                let q = c.target();
                let summands = if q.is_zero() { Vec::new() } else { u.decompose(q)?.summands };
                let inside = summands.iter().all(|s| perp.contains(*s));
                (summands, inside)
            } else {
                (Vec::new(), false)
            };
            Ok(Coresolution { module: m.name(), middle, cokernel, mono, cokernel_in_perp })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CotiltingReport { ids, id_bound, ext_violation, perp, coresolutions })
}
