use std::fmt;

use super::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of row reduction: the reduced echelon form and its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref<F: Field> {
    pub reduced: Mat<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries length must be rows * cols");
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect())
    }

    /// Builds a `len x n` matrix whose columns are the given vectors.
    pub fn from_cols(len: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(len, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), len);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul_assign(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn neg(&self) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(F::neg).collect() }
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(rhs.row(r));
        }
        Mat { rows: self.rows, cols, data }
    }

    /// `[self ; rhs]`
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Mat { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Mat { rows: rows.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, rhs: &Self) -> Self {
        let mut m = Self::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, rhs);
        m
    }

    pub fn paste(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    /// Reduced row echelon form. Pivoting picks the leftmost nonzero column
    /// and, within it, the topmost available row.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        Rref { reduced: m, pivots }
    }

    /// Row-reduces in place, choosing pivots only among the first
    /// `pivot_cols` columns. Returns the pivot columns.
    pub fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..pivot_cols {
            if prow == rows {
                break;
            }
            let Some(src) = (prow..rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if src != prow {
                for j in 0..cols {
                    self.data.swap(src * cols + j, prow * cols + j);
                }
            }
            let inv = self.get(prow, c).inv();
            if !inv.is_one() {
                for j in c..cols {
                    let v = self.get(prow, j);
                    if !v.is_zero() {
                        let nv = v.mul(&inv);
                        self.set(prow, j, nv);
                    }
                }
            }
            let support: Vec<usize> = (c..cols).filter(|&j| !self.get(prow, j).is_zero()).collect();
            let pivot_row: Vec<F> = support.iter().map(|&j| self.get(prow, j).clone()).collect();
            for r in 0..rows {
                if r == prow {
                    continue;
                }
                let factor = self.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                let factor = factor.neg();
                for (&j, pv) in support.iter().zip(&pivot_row) {
                    self.data[r * cols + j].add_mul_assign(&factor, pv);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space as the rows of a matrix in reduced echelon
    /// form.
    pub fn kernel_rows(&self) -> Mat<F> {
        let Rref { reduced, pivots } = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![None; n];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let free: Vec<usize> = (0..n).filter(|&c| is_pivot[c].is_none()).collect();
        let mut basis = Mat::zeros(free.len(), n);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, F::one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = reduced.get(i, fc);
                if !v.is_zero() {
                    basis.set(k, p, v.neg());
                }
            }
        }
        // free-variable vectors put in reduced echelon form
        let mut b = basis;
        b.rref_in_place(n);
        b
    }

    /// Kernel basis as columns (reduced echelon form when transposed).
    pub fn kernel(&self) -> Mat<F> {
        self.kernel_rows().transpose()
    }

    /// Image basis as columns: the pivot columns of `self`.
    pub fn image(&self) -> Mat<F> {
        let pivots = self.rref().pivots;
        self.select_cols(&pivots)
    }

    /// Solves `self * X = rhs`. Returns the particular solution with all free
    /// variables set to zero, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Mat<F>) -> Result<Option<Mat<F>>, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "A has {} rows but B has {}",
                self.rows, rhs.rows
            )));
        }
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref_in_place(self.cols);
        // inconsistent iff some zero row of the A-part has nonzero rhs
        for r in pivots.len()..self.rows {
            if (self.cols..aug.cols).any(|c| !aug.get(r, c).is_zero()) {
                return Ok(None);
            }
        }
        let mut x = Mat::zeros(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, aug.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat<F>> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Mat::identity(self.rows)).ok()??;
        (self.rank() == self.rows).then_some(x)
    }

    /// A left inverse `L` with `L * self = I`, for a matrix of full column rank.
    pub fn left_inverse(&self) -> Option<Mat<F>> {
        let t = self.transpose();
        // self^T has full row rank: pick pivot rows of self
        let pivots = t.rref().pivots;
        if pivots.len() != self.cols {
            return None;
        }
        let square = self.select_rows(&pivots);
        let inv = square.inverse()?;
        let mut l = Mat::zeros(self.cols, self.rows);
        for (j, &p) in pivots.iter().enumerate() {
            for i in 0..self.cols {
                l.set(i, p, inv.get(i, j).clone());
            }
        }
        Some(l)
    }

    /// Indices of standard basis vectors completing the column space of
    /// `self` to the whole space, chosen greedily in index order.
    pub fn complement_indices(&self) -> Vec<usize> {
        let aug = self.hstack(&Mat::identity(self.rows));
        let pivots = aug.rref().pivots;
        pivots.into_iter().filter(|&p| p >= self.cols).map(|p| p - self.cols).collect()
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Q;

    fn m(rows: &[&[i64]]) -> Mat<Q> {
        Mat::from_i64_rows(rows)
    }

    #[test]
    fn solve_identity() {
        let i3 = Mat::<Q>::identity(3);
        assert_eq!(i3.solve(&i3).unwrap(), Some(i3.clone()));
    }

    #[test]
    fn solve_rank_deficient_gives_reduced_particular_solution() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let b = m(&[&[3], &[6]]);
        assert_eq!(a.solve(&b).unwrap(), Some(m(&[&[3], &[0]])));
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 0], &[0, 0]]);
        let b = m(&[&[0], &[1]]);
        assert_eq!(a.solve(&b).unwrap(), None);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let b = m(&[&[1]]);
        assert!(a.solve(&b).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::<Q>::zeros(2, 3).kernel(), Mat::identity(3));
        assert_eq!(m(&[&[1, 1], &[0, 0]]).kernel_rows(), m(&[&[1, -1]]));
        assert_eq!(Mat::<Q>::identity(4).image(), Mat::identity(4));
        assert_eq!(Mat::<Q>::identity(4).kernel().cols(), 0);
    }

    #[test]
    fn left_inverse_and_complement() {
        let a = m(&[&[1, 0], &[2, 1], &[0, 3]]);
        let l = a.left_inverse().unwrap();
        assert_eq!(l.mul(&a), Mat::identity(2));
        let comp = a.complement_indices();
        assert_eq!(comp.len(), 1);
        assert!(m(&[&[1], &[1]]).left_inverse().is_some());
        assert!(m(&[&[1, 2], &[2, 4]]).left_inverse().is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
