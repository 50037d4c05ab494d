//! The category algebra `Γ = ⊕ cat(X_i, X_j)`.
//!
//! The basis element of a class `f: X_i -> X_j` has source vertex `j` and
//! target vertex `i`, and `a · b = f_a ∘ f_b`. With this convention the
//! projective `e_X Γ` is the representable functor `cat(-, X)` and right
//! Γ-modules are contravariant functors on the category.

use std::collections::HashMap;

use super::category::LinCat;
use crate::algebra::ar::Quiver;
use crate::algebra::Algebra;
use crate::error::Result;
use crate::linalg::Field;

/// Γ together with the translation between its basis and hom classes.
#[derive(Debug, Clone)]
pub struct CategoryAlgebra<F: Field> {
    pub gamma: Algebra<F>,
    /// `(i, j, k)`: the `k`-th basis class of `cat(i, j)`, per Γ basis element.
    pub classes: Vec<(usize, usize, usize)>,
    index: HashMap<(usize, usize, usize), usize>,
}

impl<F: Field> CategoryAlgebra<F> {
    pub fn new(cat: &LinCat<F>) -> Result<Self> {
        let n = cat.len();
        let mut classes = Vec::new();
        for i in 0..n {
            classes.push((i, i, 0));
        }
        for i in 0..n {
            for j in 0..n {
                let start = usize::from(i == j);
                for k in start..cat.hom_dim(i, j) {
                    classes.push((i, j, k));
                }
            }
        }
        let index: HashMap<(usize, usize, usize), usize> =
            classes.iter().enumerate().map(|(b, &c)| (c, b)).collect();
        let labels: Vec<String> = classes
            .iter()
            .map(|&(i, j, k)| {
                let (li, lj) = (cat.object(i).name(), cat.object(j).name());
                if i == j && k == 0 {
                    format!("id{li}")
                } else {
                    format!("{li}->{lj}#{k}")
                }
            })
            .collect();
        let src = classes.iter().map(|&(_, j, _)| j).collect();
        let tgt = classes.iter().map(|&(i, _, _)| i).collect();
        let unit = |len: usize, k: usize| {
            let mut v = vec![F::zero(); len];
            v[k] = F::one();
            v
        };
        let mut products = HashMap::new();
        // a = (i -> j), b = (h -> i): a · b = a ∘ b : h -> j
        for (ai, &(i, j, ka)) in classes.iter().enumerate() {
            for h in 0..n {
                for kb in 0..cat.hom_dim(h, i) {
                    let bi = index[&(h, i, kb)];
                    let c = cat.compose(h, i, j, &unit(cat.hom_dim(i, j), ka), &unit(cat.hom_dim(h, i), kb));
                    let terms: Vec<(usize, F)> = c
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (index[&(h, j, k)], x))
                        .collect();
                    if !terms.is_empty() {
                        products.insert((ai, bi), terms);
                    }
                }
            }
        }
        let gamma = Algebra::from_graded_parts(
            format!("Γ({})", cat.name()),
            labels,
            cat.labels(),
            src,
            tgt,
            (0..n).collect(),
            products,
            None,
        )?;
        Ok(CategoryAlgebra { gamma, classes, index })
    }

    /// Irreducible maps of the category: `rad / rad²` of Γ counted per pair
    /// of objects. No mesh relations are recorded.
    pub fn quiver(&self) -> Quiver {
        let g = &self.gamma;
        let n = g.num_vertices();
        let mut mult = vec![vec![0usize; n]; n];
        for &b in g.generators() {
            mult[g.tgt(b)][g.src(b)] += 1;
        }
        let mut arrows = Vec::new();
        for (i, row) in mult.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    arrows.push((i, j, m));
                }
            }
        }
        Quiver { vertices: g.vertex_labels().to_vec(), arrows, mesh: Vec::new() }
    }

    /// Γ basis index of the `k`-th class of `cat(i, j)`.
    pub fn basis_index(&self, i: usize, j: usize, k: usize) -> usize {
        self.index[&(i, j, k)]
    }
}
