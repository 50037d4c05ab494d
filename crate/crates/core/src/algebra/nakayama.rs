//! Basic Nakayama algebras from a Kupisch series, and their uniserial
//! modules.
//!
//! Vertices are `0..v` with arrows `i -> i + 1` (indices mod `v` in the
//! cyclic case). The basis is the set of paths `(i, L)` starting at `i` of
//! length `L < c_i`; paths compose left to right, so `e_i A` is spanned by
//! the paths starting at `i` and has Loewy length `c_i`.

use std::collections::HashMap;

use super::algebra::{Algebra, NakayamaShape};
use super::module::Module;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Linear,
    Cyclic,
}

impl std::str::FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Shape::Linear),
            "cyclic" => Ok(Shape::Cyclic),
            other => Err(Error::Input(format!("shape must be linear or cyclic, got {other:?}"))),
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Shape::Linear => "linear",
            Shape::Cyclic => "cyclic",
        })
    }
}

fn step(v: usize, i: usize, len: usize, shape: Shape) -> usize {
    match shape {
        Shape::Linear => i + len,
        Shape::Cyclic => (i + len) % v,
    }
}

/// Checks that a Kupisch series defines an admissible Nakayama algebra.
pub fn check_kupisch(kupisch: &[usize], shape: Shape) -> Result<()> {
    let v = kupisch.len();
    if v == 0 {
        return Err(Error::Input("kupisch series is empty".into()));
    }
    if let Some(i) = kupisch.iter().position(|&c| c == 0) {
        return Err(Error::Input(format!("kupisch entries ≥ 1 (entry {} is 0)", i + 1)));
    }
    match shape {
        Shape::Linear => {
            if kupisch[v - 1] != 1 {
                return Err(Error::Input("linear kupisch series must end with 1".into()));
            }
            for i in 0..v - 1 {
                if kupisch[i] < 2 {
                    return Err(Error::Input(format!(
                        "kupisch entry {} must be >= 2 on a linear quiver (arrows are not relations)",
                        i + 1
                    )));
                }
                if kupisch[i] > kupisch[i + 1] + 1 {
                    return Err(Error::Input(format!(
                        "kupisch entry {} exceeds the next entry plus one",
                        i + 1
                    )));
                }
            }
        }
        Shape::Cyclic => {
            for i in 0..v {
                if kupisch[i] < 2 {
                    return Err(Error::Input(format!(
                        "kupisch entry {} must be >= 2 on a cyclic quiver",
                        i + 1
                    )));
                }
                if kupisch[i] > kupisch[(i + 1) % v] + 1 {
                    return Err(Error::Input(format!(
                        "kupisch entry {} exceeds the next entry plus one",
                        i + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

fn path_label(i: usize, len: usize, v: usize, shape: Shape) -> String {
    if len == 0 {
        return format!("e{}", i + 1);
    }
    (0..len).map(|k| format!("a{}", step(v, i, k, shape) + 1)).collect::<Vec<_>>().join("")
}

/// The Nakayama algebra with the given Kupisch series.
pub fn nakayama<F: Field>(kupisch: &[usize], shape: Shape) -> Result<Algebra<F>> {
    check_kupisch(kupisch, shape)?;
    let v = kupisch.len();
    // vertex idempotents first, then paths by start vertex and length
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut paths = Vec::new();
    for i in 0..v {
        index.insert((i, 0), paths.len());
        paths.push((i, 0));
    }
    for (i, &c) in kupisch.iter().enumerate() {
        for len in 1..c {
            index.insert((i, len), paths.len());
            paths.push((i, len));
        }
    }
    let labels = paths.iter().map(|&(i, l)| path_label(i, l, v, shape)).collect();
    let src: Vec<usize> = paths.iter().map(|&(i, _)| i).collect();
    let tgt: Vec<usize> = paths.iter().map(|&(i, l)| step(v, i, l, shape)).collect();
    let mut products = HashMap::new();
    for (p, &(i, l)) in paths.iter().enumerate() {
        let j = tgt[p];
        for m in 0..kupisch[j] {
            if l + m < kupisch[i] {
                products.insert((p, index[&(j, m)]), vec![(index[&(i, l + m)], F::one())]);
            }
        }
    }
    let name = format!("nakayama({shape}, {:?})", kupisch);
    let vertex_labels = (1..=v).map(|i| i.to_string()).collect();
    Algebra::from_graded_parts(
        name,
        labels,
        vertex_labels,
        src,
        tgt,
        (0..v).collect(),
        products,
        Some(NakayamaShape { kupisch: kupisch.to_vec(), cyclic: shape == Shape::Cyclic }),
    )
}

/// The family `Λ_n`: quiver `1 ⇄ 2` with `(αβ)^n α = 0`, Kupisch `[2n+1, 2n+2]`.
pub fn two_cycle_family<F: Field>(n: usize) -> Result<Algebra<F>> {
    if n == 0 {
        return Err(Error::Input("family parameter n must be >= 1".into()));
    }
    nakayama(&[2 * n + 1, 2 * n + 2], Shape::Cyclic)
}

fn shape_of<F: Field>(a: &Algebra<F>) -> Result<(Vec<usize>, Shape)> {
    let s = a.nakayama_shape().ok_or_else(|| {
        Error::Unsupported(format!(
            "{} is not a Nakayama algebra built by the Kupisch constructor; supply an explicit module list",
            a.name()
        ))
    })?;
    Ok((s.kupisch.clone(), if s.cyclic { Shape::Cyclic } else { Shape::Linear }))
}

/// Label `[m]_l` of the uniserial module with socle vertex `m`, length `l`.
pub fn uniserial_label<F: Field>(a: &Algebra<F>, socle: usize, len: usize) -> String {
    format!("[{}]_{}", a.vertex_label(socle), len)
}

/// Uniserial module `e_top A / (paths of length >= len)`.
pub fn uniserial<F: Field>(a: &Algebra<F>, top: usize, len: usize) -> Result<Module<F>> {
    let (kupisch, shape) = shape_of(a)?;
    let v = kupisch.len();
    if top >= v || len == 0 || len > kupisch[top] {
        return Err(Error::Input(format!("no uniserial module with top {} and length {len}", top + 1)));
    }
    let vertex_of = |l: usize| step(v, top, l, shape);
    let mut dims = vec![0; v];
    let mut slot = vec![0; len];
    for (l, s) in slot.iter_mut().enumerate() {
        *s = dims[vertex_of(l)];
        dims[vertex_of(l)] += 1;
    }
    let action = (0..a.dim())
        .map(|b| {
            let (s, t) = (a.src(b), a.tgt(b));
            let mut m = Mat::zeros(dims[t], dims[s]);
            let plen = path_length(&kupisch, b, a);
            for l in 0..len {
                if vertex_of(l) == s && l + plen < len {
                    m.set(slot[l + plen], slot[l], F::one());
                }
            }
            m
        })
        .collect();
    let socle = vertex_of(len - 1);
    Ok(Module::from_parts(a.clone(), dims, action, Some(uniserial_label(a, socle, len))))
}

/// Length of the basis path `b` in the ordering used by [`nakayama`].
fn path_length<F: Field>(kupisch: &[usize], b: usize, a: &Algebra<F>) -> usize {
    let v = kupisch.len();
    if b < v {
        return 0;
    }
    let i = a.src(b);
    let start: usize = v + kupisch[..i].iter().map(|c| c - 1).sum::<usize>();
    b - start + 1
}

/// All indecomposables `[m]_l`, sorted by socle vertex then length.
pub fn enumerate_indecomposables<F: Field>(a: &Algebra<F>) -> Result<Vec<Module<F>>> {
    let (kupisch, shape) = shape_of(a)?;
    let v = kupisch.len();
    let mut keyed = Vec::new();
    for (top, &c) in kupisch.iter().enumerate() {
        for len in 1..=c {
            keyed.push(((step(v, top, len - 1, shape), len), top));
        }
    }
    keyed.sort();
    keyed.into_iter().map(|((_, len), top)| uniserial(a, top, len)).collect()
}
