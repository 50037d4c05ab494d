//! Deciding whether a span of square matrices contains an invertible one.
//!
//! The determinant of a generic combination `sum c_i B_i` is a polynomial of
//! total degree `d` (the matrix size). It is nonzero iff it is nonzero
//! somewhere on the grid `{0..=d}^h`. When that grid is small enough it is
//! searched exhaustively and the answer is exact either way. Otherwise a
//! deterministic sequence of pseudo-random points is tried: a hit is an
//! exact witness, a miss is a Schwartz-Zippel negative whose error bound is
//! reported alongside.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::mat::{LinalgError, Mat};

/// Largest exhaustive grid that is searched point by point.
pub const GRID_BUDGET: u64 = 4096;
/// Number of pseudo-random points tried when the grid is too large.
pub const RANDOM_TRIALS: usize = 24;
const COEFF_RANGE: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invertibility<F> {
    /// Coefficients of an invertible combination, if one was found.
    pub witness: Option<Vec<F>>,
    /// True when the answer is certain (a witness, or an exhausted grid).
    pub exact: bool,
}

impl<F> Invertibility<F> {
    pub fn invertible(&self) -> bool {
        self.witness.is_some()
    }
}

fn combine<F: Field>(basis: &[Vec<Mat<F>>], coeffs: &[F], block: usize) -> Mat<F> {
    let n = basis[0][block].rows();
    let mut acc = Mat::zeros(n, n);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&b[block].scale(c));
        }
    }
    acc
}

fn invertible_at<F: Field>(basis: &[Vec<Mat<F>>], coeffs: &[F]) -> bool {
    (0..basis[0].len()).all(|k| {
        let m = combine(basis, coeffs, k);
        m.rank() == m.rows()
    })
}

/// Block form: each basis element is a list of square blocks (a
/// block-diagonal matrix); a combination is invertible iff every block is.
pub fn find_invertible_combination<F: Field>(
    basis: &[Vec<Mat<F>>],
) -> Result<Invertibility<F>, LinalgError> {
    let Some(first) = basis.first() else {
        return Ok(Invertibility { witness: None, exact: true });
    };
    let sizes: Vec<usize> = first.iter().map(Mat::rows).collect();
    for b in basis {
        if b.len() != sizes.len()
            || b.iter().zip(&sizes).any(|(m, &s)| m.rows() != s || m.cols() != s)
        {
            return Err(LinalgError::DimensionMismatch(
                "generic invertibility needs square matrices of one common shape".into(),
            ));
        }
    }
    let h = basis.len();
    let degree: usize = sizes.iter().sum();
    if degree == 0 {
        return Ok(Invertibility { witness: Some(vec![F::zero(); h]), exact: true });
    }

    // cheap candidates first: single basis elements, then the all-ones point
    for i in 0..h {
        let mut c = vec![F::zero(); h];
        c[i] = F::one();
        if invertible_at(basis, &c) {
            return Ok(Invertibility { witness: Some(c), exact: true });
        }
    }
    let ones = vec![F::one(); h];
    if invertible_at(basis, &ones) {
        return Ok(Invertibility { witness: Some(ones), exact: true });
    }

    let side = degree as u64 + 1;
    let char_ok = F::characteristic() == 0 || F::characteristic() > degree as u64;
    let grid = side.checked_pow(h as u32).filter(|&g| g <= GRID_BUDGET);
    if let (Some(points), true) = (grid, char_ok) {
        for mut idx in 0..points {
            let mut c = Vec::with_capacity(h);
            for _ in 0..h {
                c.push(F::from_i64((idx % side) as i64));
                idx /= side;
            }
            if invertible_at(basis, &c) {
                return Ok(Invertibility { witness: Some(c), exact: true });
            }
        }
        return Ok(Invertibility { witness: None, exact: true });
    }

    let range = match F::characteristic() {
        0 => COEFF_RANGE,
        p => p.min(COEFF_RANGE),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_ab_ca7 ^ (h as u64) << 16 ^ degree as u64);
    for _ in 0..RANDOM_TRIALS {
        let c: Vec<F> = (0..h).map(|_| F::from_i64(rng.gen_range(0..range) as i64)).collect();
        if invertible_at(basis, &c) {
            return Ok(Invertibility { witness: Some(c), exact: true });
        }
    }
    Ok(Invertibility { witness: None, exact: false })
}

/// True iff some linear combination of the given square matrices is
/// invertible.
pub fn generic_invertibility<F: Field>(basis: &[Mat<F>]) -> Result<bool, LinalgError> {
    let blocks: Vec<Vec<Mat<F>>> = basis.iter().map(|m| vec![m.clone()]).collect();
    Ok(find_invertible_combination(&blocks)?.invertible())
}
