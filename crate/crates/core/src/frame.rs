//! Arbitrary bases `{e_j}` of `V` and their euclidean reciprocal bases.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::multivector::{check_dim, Multivector};
use crate::oracle;
use crate::tolerance::Tolerance;

/// An ordered basis of `n` vectors together with its Gram matrix
/// `gram[(j, k)] = e_j · e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    vectors: Vec<Multivector>,
    gram: DMatrix<f64>,
}

/// Relative threshold on `|det gram|` against `(max gram row norm)^n`.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

impl Frame {
    pub fn new(vectors: Vec<Multivector>) -> Result<Self> {
        let n = vectors.len();
        check_dim(n)?;
        for (j, v) in vectors.iter().enumerate() {
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.dim(),
                });
            }
            if v.is_zero() || !v.is_homogeneous(1, 0.0) {
                return Err(Error::NotAVector(j + 1));
            }
        }
        let gram = DMatrix::from_fn(n, n, |j, k| vectors[j].dot_unchecked(&vectors[k]));
        let max_row = gram.row_iter().map(|r| r.norm()).fold(0.0f64, f64::max);
        let det = match oracle::gauss_jordan(&gram) {
            Ok((_, det)) => det,
            Err(_) => return Err(Error::SingularFrame),
        };
        if det.abs() < SINGULAR_THRESHOLD * max_row.powi(n as i32) {
            return Err(Error::SingularFrame);
        }
        Ok(Frame { vectors, gram })
    }

    /// The canonical orthonormal frame `u_1, ..., u_n`.
    pub fn canonical(dim: usize) -> Self {
        let vectors = (1..=dim)
            .map(|i| Multivector::basis_vector(dim, i))
            .collect();
        Frame {
            vectors,
            gram: DMatrix::identity(dim, dim),
        }
    }

    /// Frame whose `j`-th vector has the components of row `j`.
    pub fn from_rows(rows: &DMatrix<f64>) -> Result<Self> {
        let vectors = rows
            .row_iter()
            .map(|r| Multivector::vector(&r.iter().copied().collect::<Vec<_>>()))
            .collect();
        Self::new(vectors)
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Multivector] {
        &self.vectors
    }

    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    /// Row `j` holds the components of `e_{j+1}` along `u_1..u_n`.
    pub fn component_matrix(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |j, i| self.vectors[j].get(1 << i))
    }

    /// `e^k = Σ_j (G^{-1})_{kj} e_j`, so that `e_j · e^k = δ_j^k`.
    pub fn reciprocal(&self) -> Result<Frame> {
        let inv = oracle::oracle_inverse(&self.gram).map_err(|_| Error::SingularFrame)?;
        let n = self.dim();
        let vectors: Vec<Multivector> = (0..n)
            .map(|k| {
                Multivector::linear_combination(n, (0..n).map(|j| (inv[(k, j)], &self.vectors[j])))
            })
            .collect();
        let gram = DMatrix::from_fn(n, n, |j, k| vectors[j].dot_unchecked(&vectors[k]));
        Ok(Frame { vectors, gram })
    }

    pub fn is_orthonormal(&self, tol: &Tolerance) -> bool {
        let n = self.dim();
        let id = DMatrix::<f64>::identity(n, n);
        tol.close_slices(self.gram.as_slice(), id.as_slice())
    }

    /// `e_{j_1} ∧ ... ∧ e_{j_k}` for 1-based strictly ascending indices.
    pub fn induced_blade(&self, indices: &[usize]) -> Result<Multivector> {
        let n = self.dim();
        let ascending = indices.windows(2).all(|w| w[0] < w[1]);
        if !ascending || indices.iter().any(|&j| j == 0 || j > n) {
            return Err(Error::InvalidIndices(indices.to_vec()));
        }
        Ok(indices.iter().fold(Multivector::scalar(n, 1.0), |acc, &j| {
            acc.wedge_unchecked(&self.vectors[j - 1])
        }))
    }

    /// Every induced blade, indexed by mask over the frame's indices:
    /// entry `J` is `e_J` (with `e_∅ = 1`).
    pub fn induced_blades(&self) -> Vec<Multivector> {
        let n = self.dim();
        let mut out = vec![Multivector::scalar(n, 1.0); 1 << n];
        for mask in 1..(1usize << n) {
            let high = usize::BITS - 1 - mask.leading_zeros();
            let rest = mask & !(1 << high);
            out[mask] = out[rest].wedge_unchecked(&self.vectors[high as usize]);
        }
        out
    }

    pub fn approx_eq(&self, other: &Frame, tol: &Tolerance) -> bool {
        self.dim() == other.dim()
            && self
                .vectors
                .iter()
                .zip(&other.vectors)
                .all(|(a, b)| tol.close_slices(a.coeffs(), b.coeffs()))
    }
}
