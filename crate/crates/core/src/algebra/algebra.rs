//! Finite-dimensional basic algebras presented by structure constants.
//!
//! Every algebra carries a complete set of orthogonal primitive idempotents
//! `e_1, ..., e_v` (one per vertex) and a basis in which each element `b`
//! satisfies `e_s b e_t = b` for a unique pair of vertices. The
//! non-idempotent basis elements span the Jacobson radical, which must be
//! nilpotent. Path algebras modulo admissible ideals and the category
//! algebras built in [`crate::lincat`] all have this shape.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// Structure-constant description accepted by [`Algebra::build`].
#[derive(Debug, Clone)]
pub struct AlgebraSpec<F: Field> {
    pub name: String,
    pub labels: Vec<String>,
    /// Basis indices of the vertex idempotents, in vertex order.
    pub idempotents: Vec<usize>,
    pub vertex_labels: Option<Vec<String>>,
    /// `(p, q, [(r, c), ...])` meaning `b_p * b_q = sum c * b_r`. Pairs not
    /// listed multiply to zero.
    pub table: Vec<(usize, usize, Vec<(usize, F)>)>,
}

/// Combinatorial data of a Nakayama algebra built by [`crate::algebra::nakayama`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NakayamaShape {
    pub kupisch: Vec<usize>,
    pub cyclic: bool,
}

#[derive(Debug)]
pub(crate) struct AlgebraData<F> {
    name: String,
    labels: Vec<String>,
    vertex_labels: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    idempotents: Vec<usize>,
    products: HashMap<(usize, usize), Vec<(usize, F)>>,
    right_partners: Vec<Vec<usize>>,
    between: Vec<Vec<Vec<usize>>>,
    pos: Vec<usize>,
    radical: Vec<bool>,
    generators: Vec<usize>,
    loewy_length: usize,
    nakayama: Option<NakayamaShape>,
}

/// Cheap handle to an algebra; the opposite algebra shares storage.
pub struct Algebra<F> {
    pair: Arc<[AlgebraData<F>; 2]>,
    side: usize,
}

impl<F> Clone for Algebra<F> {
    fn clone(&self) -> Self {
        Algebra { pair: Arc::clone(&self.pair), side: self.side }
    }
}

impl<F> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pair, &other.pair) && self.side == other.side
    }
}

impl<F> Eq for Algebra<F> {}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}{}, dim {})", self.d().name, if self.side == 1 { "^op" } else { "" }, self.dim())
    }
}

fn check_index(i: usize, dim: usize, what: &str) -> Result<()> {
    if i >= dim {
        return Err(Error::Input(format!("{what} index {i} out of range for dimension {dim}")));
    }
    Ok(())
}

impl<F: Field> AlgebraData<F> {
    fn product(&self, p: usize, q: usize) -> &[(usize, F)] {
        self.products.get(&(p, q)).map_or(&[], Vec::as_slice)
    }

    fn mul_vec(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); x.len()];
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for &q in &self.right_partners[p] {
                if y[q].is_zero() {
                    continue;
                }
                let c = xp.mul(&y[q]);
                for (r, k) in self.product(p, q) {
                    out[*r].add_mul_assign(&c, k);
                }
            }
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        name: String,
        labels: Vec<String>,
        vertex_labels: Vec<String>,
        src: Vec<usize>,
        tgt: Vec<usize>,
        idempotents: Vec<usize>,
        products: HashMap<(usize, usize), Vec<(usize, F)>>,
        nakayama: Option<NakayamaShape>,
    ) -> Result<Self> {
        let dim = labels.len();
        let nv = idempotents.len();
        let mut right_partners = vec![Vec::new(); dim];
        for &(p, q) in products.keys() {
            right_partners[p].push(q);
        }
        for v in &mut right_partners {
            v.sort_unstable();
        }
        let mut between = vec![vec![Vec::new(); nv]; nv];
        let mut pos = vec![0; dim];
        for b in 0..dim {
            let list = &mut between[src[b]][tgt[b]];
            pos[b] = list.len();
            list.push(b);
        }
        let mut radical = vec![true; dim];
        for &e in &idempotents {
            radical[e] = false;
        }
        let mut data = AlgebraData {
            name,
            labels,
            vertex_labels,
            src,
            tgt,
            idempotents,
            products,
            right_partners,
            between,
            pos,
            radical,
            generators: Vec::new(),
            loewy_length: 0,
            nakayama,
        };
        data.compute_radical_structure()?;
        Ok(data)
    }

    /// Checks the radical is a nilpotent ideal, records its generators
    /// (basis elements spanning rad / rad^2) and the Loewy length.
    fn compute_radical_structure(&mut self) -> Result<()> {
        let dim = self.labels.len();
        let rad: Vec<usize> = (0..dim).filter(|&b| self.radical[b]).collect();
        let unit = |b: usize| {
            let mut v = vec![F::zero(); dim];
            v[b] = F::one();
            v
        };
        for &p in &rad {
            for &q in &self.right_partners[p] {
                if !self.radical[q] {
                    continue;
                }
                if self.product(p, q).iter().any(|(r, _)| !self.radical[*r]) {
                    return Err(Error::Validation(format!(
                        "radical not closed: {} * {} has an idempotent component",
                        self.labels[p], self.labels[q]
                    )));
                }
            }
        }
        // rad^2 and generator choice
        let mut rad2: Vec<Vec<F>> = Vec::new();
        for &p in &rad {
            for &q in &self.right_partners[p] {
                if self.radical[q] {
                    rad2.push(self.mul_vec(&unit(p), &unit(q)));
                }
            }
        }
        let mut span = rad2.clone();
        let mut rank = crate::linalg::rank_of_vectors(&span, dim);
        let mut generators = Vec::new();
        for &b in &rad {
            span.push(unit(b));
            let r = crate::linalg::rank_of_vectors(&span, dim);
            if r > rank {
                rank = r;
                generators.push(b);
            } else {
                span.pop();
            }
        }
        self.generators = generators;

        // powers of the radical
        let mut layer: Vec<Vec<F>> = rad.iter().map(|&b| unit(b)).collect();
        let mut loewy = 1;
        let mut last_rank = layer.len();
        while last_rank > 0 {
            let mut next = Vec::new();
            for x in &layer {
                for &g in &rad {
                    let y = self.mul_vec(x, &unit(g));
                    if y.iter().any(|c| !c.is_zero()) {
                        next.push(y);
                    }
                }
            }
            let basis = if next.is_empty() {
                Vec::new()
            } else {
                let m = Mat::from_rows(next);
                let rr = m.rref();
                (0..rr.pivots.len()).map(|i| rr.reduced.row(i).to_vec()).collect()
            };
            let r = basis.len();
            if r >= last_rank && r > 0 {
                return Err(Error::Validation(
                    "radical is not nilpotent: the algebra is not basic and split over its vertices"
                        .into(),
                ));
            }
            loewy += 1;
            last_rank = r;
            layer = basis;
        }
        self.loewy_length = if rad.is_empty() { 1 } else { loewy - 1 };
        Ok(())
    }

    fn opposite(&self) -> Result<Self> {
        let products = self
            .products
            .iter()
            .map(|(&(p, q), v)| ((q, p), v.clone()))
            .collect();
        AlgebraData::assemble(
            self.name.clone(),
            self.labels.clone(),
            self.vertex_labels.clone(),
            self.tgt.clone(),
            self.src.clone(),
            self.idempotents.clone(),
            products,
            None,
        )
    }
}

impl<F: Field> Algebra<F> {
    fn d(&self) -> &AlgebraData<F> {
        &self.pair[self.side]
    }

    /// Validates a structure-constant description and builds the algebra.
    pub fn build(spec: AlgebraSpec<F>) -> Result<Self> {
        let dim = spec.labels.len();
        if dim == 0 {
            return Err(Error::Input("algebra dimension must be positive".into()));
        }
        let nv = spec.idempotents.len();
        if nv == 0 {
            return Err(Error::Input("at least one idempotent is required".into()));
        }
        for &e in &spec.idempotents {
            check_index(e, dim, "idempotent")?;
        }
        let mut seen = spec.idempotents.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != nv {
            return Err(Error::Validation("idempotent list has repeated entries".into()));
        }
        let mut products: HashMap<(usize, usize), Vec<(usize, F)>> = HashMap::new();
        for (p, q, terms) in spec.table {
            check_index(p, dim, "table")?;
            check_index(q, dim, "table")?;
            let entry = products.entry((p, q)).or_default();
            for (r, c) in terms {
                check_index(r, dim, "table")?;
                if let Some(slot) = entry.iter_mut().find(|(s, _)| *s == r) {
                    slot.1 = slot.1.add(&c);
                } else {
                    entry.push((r, c));
                }
            }
            entry.retain(|(_, c)| !c.is_zero());
            entry.sort_by_key(|(r, _)| *r);
        }
        products.retain(|_, v| !v.is_empty());
        let prod = |p: usize, q: usize| -> Vec<(usize, F)> {
            products.get(&(p, q)).cloned().unwrap_or_default()
        };
        let labels = &spec.labels;
        let single = |b: usize| vec![(b, F::one())];

        for (i, &ei) in spec.idempotents.iter().enumerate() {
            for (j, &ej) in spec.idempotents.iter().enumerate() {
                let expected = if i == j { single(ei) } else { Vec::new() };
                if prod(ei, ej) != expected {
                    return Err(Error::Validation(format!(
                        "idempotents not orthogonal: {} * {} is wrong",
                        labels[ei], labels[ej]
                    )));
                }
            }
        }
        // homogeneity and unit: every basis element sits in a unique e_s A e_t
        let mut src = vec![usize::MAX; dim];
        let mut tgt = vec![usize::MAX; dim];
        for b in 0..dim {
            for (v, &e) in spec.idempotents.iter().enumerate() {
                let left = prod(e, b);
                let right = prod(b, e);
                if left == single(b) {
                    if src[b] != usize::MAX {
                        return Err(Error::Validation(format!("{} has two source vertices", labels[b])));
                    }
                    src[b] = v;
                } else if !left.is_empty() {
                    return Err(Error::Validation(format!(
                        "{} is not homogeneous: {} * {} is neither it nor zero",
                        labels[b], labels[e], labels[b]
                    )));
                }
                if right == single(b) {
                    if tgt[b] != usize::MAX {
                        return Err(Error::Validation(format!("{} has two target vertices", labels[b])));
                    }
                    tgt[b] = v;
                } else if !right.is_empty() {
                    return Err(Error::Validation(format!(
                        "{} is not homogeneous: {} * {} is neither it nor zero",
                        labels[b], labels[b], labels[e]
                    )));
                }
            }
            if src[b] == usize::MAX || tgt[b] == usize::MAX {
                return Err(Error::Validation(format!(
                    "idempotents do not sum to the identity on {}",
                    labels[b]
                )));
            }
        }
        for (&(p, q), terms) in &products {
            if tgt[p] != src[q] || terms.iter().any(|(r, _)| src[*r] != src[p] || tgt[*r] != tgt[q]) {
                return Err(Error::Validation(format!(
                    "product {} * {} is incompatible with the vertex grading",
                    labels[p], labels[q]
                )));
            }
        }
        let vertex_labels = match spec.vertex_labels {
            Some(v) if v.len() == nv => v,
            Some(_) => return Err(Error::Input("vertex label count differs from idempotent count".into())),
            None => (1..=nv).map(|i| i.to_string()).collect(),
        };
        let data = AlgebraData::assemble(
            spec.name,
            spec.labels,
            vertex_labels,
            src,
            tgt,
            spec.idempotents,
            products,
            None,
        )?;
        data.check_associative()?;
        Self::from_data(data)
    }

    pub(crate) fn from_data(data: AlgebraData<F>) -> Result<Self> {
        let op = data.opposite()?;
        Ok(Algebra { pair: Arc::new([data, op]), side: 0 })
    }

    /// Internal constructor for algebras whose laws hold by construction.
    /// Associativity is still checked in debug builds.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_graded_parts(
        name: String,
        labels: Vec<String>,
        vertex_labels: Vec<String>,
        src: Vec<usize>,
        tgt: Vec<usize>,
        idempotents: Vec<usize>,
        products: HashMap<(usize, usize), Vec<(usize, F)>>,
        nakayama: Option<NakayamaShape>,
    ) -> Result<Self> {
        let data = AlgebraData::assemble(name, labels, vertex_labels, src, tgt, idempotents, products, nakayama)?;
        #[cfg(debug_assertions)]
        data.check_associative()?;
        Self::from_data(data)
    }

    pub fn opposite(&self) -> Self {
        Algebra { pair: Arc::clone(&self.pair), side: 1 - self.side }
    }

    pub fn is_opposite(&self) -> bool {
        self.side == 1
    }

    pub fn name(&self) -> &str {
        &self.d().name
    }

    pub fn dim(&self) -> usize {
        self.d().labels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.d().idempotents.len()
    }

    pub fn label(&self, b: usize) -> &str {
        &self.d().labels[b]
    }

    pub fn labels(&self) -> &[String] {
        &self.d().labels
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.d().vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.d().vertex_labels
    }

    pub fn vertex_of_label(&self, label: &str) -> Option<usize> {
        self.d().vertex_labels.iter().position(|l| l == label)
    }

    pub fn src(&self, b: usize) -> usize {
        self.d().src[b]
    }

    pub fn tgt(&self, b: usize) -> usize {
        self.d().tgt[b]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.d().idempotents[v]
    }

    pub fn is_radical(&self, b: usize) -> bool {
        self.d().radical[b]
    }

    /// Basis elements spanning rad modulo rad^2; together with the
    /// idempotents they generate the algebra.
    pub fn generators(&self) -> &[usize] {
        &self.d().generators
    }

    pub fn loewy_length(&self) -> usize {
        self.d().loewy_length
    }

    /// Basis elements `b` with `e_s b e_t = b`, in index order.
    pub fn between(&self, s: usize, t: usize) -> &[usize] {
        &self.d().between[s][t]
    }

    /// Position of `b` inside `between(src(b), tgt(b))`.
    pub fn position(&self, b: usize) -> usize {
        self.d().pos[b]
    }

    pub fn product(&self, p: usize, q: usize) -> &[(usize, F)] {
        self.d().product(p, q)
    }

    /// Basis elements `q` with `b_p * b_q != 0`.
    pub fn right_partners(&self, p: usize) -> &[usize] {
        &self.d().right_partners[p]
    }

    pub fn mul_vec(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.d().mul_vec(x, y)
    }

    pub fn nakayama_shape(&self) -> Option<&NakayamaShape> {
        self.d().nakayama.as_ref()
    }

    /// Number of nonzero structure constants.
    pub fn table_size(&self) -> usize {
        self.d().products.values().map(Vec::len).sum()
    }

    /// Table in the `(p, q, terms)` form of [`AlgebraSpec`], sorted.
    pub fn table(&self) -> Vec<(usize, usize, Vec<(usize, F)>)> {
        let mut t: Vec<_> = self.d().products.iter().map(|(&(p, q), v)| (p, q, v.clone())).collect();
        t.sort_by_key(|(p, q, _)| (*p, *q));
        t
    }
}

impl<F: Field> AlgebraData<F> {
    fn check_associative(&self) -> Result<()> {
        let dim = self.labels.len();
        for p in 0..dim {
            for q in self.between[self.tgt[p]].iter().flatten().copied() {
                for r in self.between[self.tgt[q]].iter().flatten().copied() {
                    let mut pq_r: HashMap<usize, F> = HashMap::new();
                    for (s, c) in self.product(p, q) {
                        for (t, d) in self.product(*s, r) {
                            let e = pq_r.entry(*t).or_insert_with(F::zero);
                            *e = e.add(&c.mul(d));
                        }
                    }
                    let mut p_qr: HashMap<usize, F> = HashMap::new();
                    for (s, c) in self.product(q, r) {
                        for (t, d) in self.product(p, *s) {
                            let e = p_qr.entry(*t).or_insert_with(F::zero);
                            *e = e.add(&c.mul(d));
                        }
                    }
                    pq_r.retain(|_, v| !v.is_zero());
                    p_qr.retain(|_, v| !v.is_zero());
                    if pq_r != p_qr {
                        return Err(Error::Validation(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[p], self.labels[q], self.labels[r]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Q;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    pub(crate) fn field_spec() -> AlgebraSpec<Q> {
        AlgebraSpec {
            name: "k".into(),
            labels: vec!["e".into()],
            idempotents: vec![0],
            vertex_labels: None,
            table: vec![(0, 0, vec![(0, q(1))])],
        }
    }

    #[test]
    fn field_has_one_idempotent() {
        let k = Algebra::build(field_spec()).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.num_vertices(), 1);
        assert!(k.generators().is_empty());
        assert_eq!(k.loewy_length(), 1);
    }

    #[test]
    fn product_of_two_fields() {
        let spec = AlgebraSpec {
            name: "kxk".into(),
            labels: vec!["e1".into(), "e2".into()],
            idempotents: vec![0, 1],
            vertex_labels: None,
            table: vec![(0, 0, vec![(0, q(1))]), (1, 1, vec![(1, q(1))])],
        };
        let a = Algebra::build(spec).unwrap();
        assert_eq!(a.num_vertices(), 2);
    }

    #[test]
    fn non_orthogonal_idempotents_rejected() {
        let spec = AlgebraSpec {
            name: "bad".into(),
            labels: vec!["e1".into(), "e2".into()],
            idempotents: vec![0, 1],
            vertex_labels: None,
            table: vec![
                (0, 0, vec![(0, q(1))]),
                (1, 1, vec![(1, q(1))]),
                (0, 1, vec![(0, q(1))]),
            ],
        };
        let err = Algebra::build(spec).unwrap_err();
        assert!(matches!(err, Error::Validation(ref m) if m.contains("orthogonal")), "{err}");
    }

    #[test]
    fn non_associative_table_names_the_triple() {
        // A2 quiver 1 -> 2 with arrow a, plus a bogus loop product
        let spec = AlgebraSpec {
            name: "bad".into(),
            labels: vec!["e1".into(), "e2".into(), "a".into(), "x".into()],
            idempotents: vec![0, 1],
            vertex_labels: None,
            table: vec![
                (0, 0, vec![(0, q(1))]),
                (1, 1, vec![(1, q(1))]),
                (0, 2, vec![(2, q(1))]),
                (2, 1, vec![(2, q(1))]),
                (0, 3, vec![(3, q(1))]),
                (3, 0, vec![(3, q(1))]),
                // x * x = x is not nilpotent
                (3, 3, vec![(3, q(1))]),
            ],
        };
        assert!(Algebra::build(spec).is_err());

        let spec = AlgebraSpec {
            name: "nonassoc".into(),
            labels: vec!["e1".into(), "x".into(), "y".into(), "z".into()],
            idempotents: vec![0],
            vertex_labels: None,
            table: vec![
                (0, 0, vec![(0, q(1))]),
                (0, 1, vec![(1, q(1))]),
                (1, 0, vec![(1, q(1))]),
                (0, 2, vec![(2, q(1))]),
                (2, 0, vec![(2, q(1))]),
                (0, 3, vec![(3, q(1))]),
                (3, 0, vec![(3, q(1))]),
                // (x x) x = y x = z but x (x x) = x y = 0
                (1, 1, vec![(2, q(1))]),
                (2, 1, vec![(3, q(1))]),
            ],
        };
        let err = Algebra::build(spec).unwrap_err();
        assert!(matches!(err, Error::Validation(ref m) if m.contains("associativity fails on (x, x, x)")), "{err}");
    }

    #[test]
    fn opposite_shares_storage_and_flips() {
        let k = Algebra::build(field_spec()).unwrap();
        let op = k.opposite();
        assert_ne!(k, op);
        assert_eq!(k, op.opposite());
    }
}
