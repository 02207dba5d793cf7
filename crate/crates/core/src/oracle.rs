//! Brute-force reference computations.
//!
//! Nothing here touches the blade machinery: determinants come from the
//! Leibniz permutation sum, inverses from Gauss-Jordan elimination, and
//! compound matrices from explicit minors. The main code paths are checked
//! against these.

use itertools::Itertools;
use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Largest order accepted by the factorial-time oracles.
pub const MAX_LEIBNIZ: usize = 8;

fn square(m: &DMatrix<f64>) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::ShapeMismatch {
            expected: (m.nrows(), m.nrows()),
            found: m.shape(),
        });
    }
    Ok(m.nrows())
}

fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

/// `Σ_σ sign(σ) Π_i M[i][σ(i)]`.
pub fn oracle_det(m: &DMatrix<f64>) -> Result<f64> {
    let n = square(m)?;
    if n > MAX_LEIBNIZ {
        return Err(Error::TooLarge {
            entries: n,
            limit: MAX_LEIBNIZ,
        });
    }
    let mut total = 0.0;
    for perm in (0..n).permutations(n) {
        let sign = if inversions(&perm).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        let prod: f64 = perm.iter().enumerate().map(|(i, &j)| m[(i, j)]).product();
        total += sign * prod;
    }
    Ok(total)
}

/// Gauss-Jordan elimination with partial pivoting. Returns the inverse and
/// the determinant (product of pivots with row-swap signs).
pub fn gauss_jordan(m: &DMatrix<f64>) -> Result<(DMatrix<f64>, f64)> {
    let n = square(m)?;
    let scale = m.iter().fold(0.0f64, |s, x| s.max(x.abs()));
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| m[(i, j)]).collect())
        .collect();
    let mut inv: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        if a[pivot][col].abs() <= 1e-14 * scale || scale == 0.0 {
            return Err(Error::SingularMatrix);
        }
        if pivot != col {
            a.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != 0.0 {
                    for j in 0..n {
                        a[r][j] -= f * a[col][j];
                        inv[r][j] -= f * inv[col][j];
                    }
                }
            }
        }
    }
    Ok((DMatrix::from_fn(n, n, |i, j| inv[i][j]), det))
}

pub fn oracle_inverse(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    gauss_jordan(m).map(|(inv, _)| inv)
}

/// The `p`-th compound matrix: entry `(A, B)` is the minor of `M` on rows
/// `A` and columns `B`, with `p`-subsets in lexicographic order.
pub fn oracle_outermorphism_minor(m: &DMatrix<f64>, p: usize) -> Result<DMatrix<f64>> {
    let n = square(m)?;
    if n > MAX_LEIBNIZ {
        return Err(Error::TooLarge {
            entries: n,
            limit: MAX_LEIBNIZ,
        });
    }
    if p > n {
        return Err(Error::GradeOutOfRange { grade: p, dim: n });
    }
    let subsets: Vec<Vec<usize>> = (0..n).combinations(p).collect();
    let size = subsets.len();
    let mut out = DMatrix::zeros(size, size);
    for (r, rows) in subsets.iter().enumerate() {
        for (c, cols) in subsets.iter().enumerate() {
            let sub = DMatrix::from_fn(p, p, |i, j| m[(rows[i], cols[j])]);
            out[(r, c)] = if p == 0 { 1.0 } else { oracle_det(&sub)? };
        }
    }
    Ok(out)
}
