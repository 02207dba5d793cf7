//! Dense multivectors of the euclidean exterior/Clifford algebra.
//!
//! A [`Multivector`] over an `n`-dimensional space stores `2^n`
//! coefficients indexed by blade mask (see [`crate::blade`]). The scalar
//! product makes canonical blades orthonormal, so `u_A · u_B = δ_AB`, and
//! every product is evaluated blade by blade with the sign from
//! [`reorder_sign`].

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::blade::{self, grade, reorder_sign, Mask};
use crate::error::{Error, Result};
use crate::MAX_DIM;

#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    dim: usize,
    coeffs: Vec<f64>,
}

/// A subset of the grades `{0, ..., n}`, selecting a sum of homogeneous
/// subspaces. The empty set selects the trivial subspace `{0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradeSet {
    dim: usize,
    grades: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    /// `(-1)^k` on grade `k`.
    GradeInvolution,
    /// `(-1)^{k(k-1)/2}` on grade `k`.
    Reversion,
    /// `(-1)^{k(k+1)/2}` on grade `k`.
    Conjugation,
}

impl Involution {
    pub const ALL: [Involution; 3] = [
        Involution::GradeInvolution,
        Involution::Reversion,
        Involution::Conjugation,
    ];

    pub fn sign(self, k: usize) -> f64 {
        let e = match self {
            Involution::GradeInvolution => k,
            Involution::Reversion => k * k.saturating_sub(1) / 2,
            Involution::Conjugation => k * (k + 1) / 2,
        };
        if e % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(dim))
    }
}

#[inline]
fn same_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a,
            found: b,
        })
    }
}

impl Multivector {
    /// # Panics
    /// If `dim` is outside `1..=12`.
    pub fn zero(dim: usize) -> Self {
        check_dim(dim).expect("invalid dimension");
        Multivector {
            dim,
            coeffs: vec![0.0; 1 << dim],
        }
    }

    pub fn scalar(dim: usize, value: f64) -> Self {
        let mut m = Self::zero(dim);
        m.coeffs[0] = value;
        m
    }

    pub fn blade(dim: usize, mask: Mask) -> Self {
        let mut m = Self::zero(dim);
        m.coeffs[mask as usize] = 1.0;
        m
    }

    /// The canonical basis vector `u_i`, 1-based.
    pub fn basis_vector(dim: usize, i: usize) -> Self {
        assert!((1..=dim).contains(&i), "basis index {i} out of range");
        Self::blade(dim, 1 << (i - 1))
    }

    /// Grade-1 multivector with the given components along `u_1..u_n`.
    pub fn vector(components: &[f64]) -> Self {
        let mut m = Self::zero(components.len());
        for (i, &c) in components.iter().enumerate() {
            m.coeffs[1 << i] = c;
        }
        m
    }

    /// Build from a full coefficient array of length `2^dim`.
    pub fn from_coeffs(dim: usize, coeffs: Vec<f64>) -> Result<Self> {
        check_dim(dim)?;
        if coeffs.len() != 1 << dim {
            return Err(Error::BadLength {
                expected: 1 << dim,
                found: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Multivector { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn get(&self, mask: Mask) -> f64 {
        self.coeffs[mask as usize]
    }

    pub fn set(&mut self, mask: Mask, value: f64) {
        self.coeffs[mask as usize] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Components along `u_1..u_n`.
    pub fn vector_part(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.coeffs[1 << i]).collect()
    }

    /// Coordinates of the grade-`k` part in lexicographic blade order.
    pub fn grade_coords(&self, k: usize) -> Vec<f64> {
        blade::table(self.dim)
            .of_grade(k)
            .iter()
            .map(|&m| self.coeffs[m as usize])
            .collect()
    }

    /// Inverse of [`grade_coords`](Self::grade_coords).
    pub fn from_grade_coords(dim: usize, k: usize, coords: &[f64]) -> Self {
        let mut m = Self::zero(dim);
        for (&mask, &c) in blade::table(dim).of_grade(k).iter().zip(coords) {
            m.coeffs[mask as usize] = c;
        }
        m
    }

    pub fn max_abs(&self) -> f64 {
        crate::tolerance::max_abs(&self.coeffs)
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// True when every coefficient outside grade `k` is at most `eps`
    /// times the largest coefficient (or exactly zero for a zero input).
    pub fn is_homogeneous(&self, k: usize, eps: f64) -> bool {
        let bound = eps * self.max_abs();
        self.coeffs
            .iter()
            .enumerate()
            .all(|(m, c)| grade(m as Mask) == k || c.abs() <= bound)
    }

    /// Highest grade carrying a nonzero coefficient.
    pub fn max_grade(&self) -> Option<usize> {
        self.nonzero().map(|(m, _)| grade(m)).max()
    }

    fn nonzero(&self) -> impl Iterator<Item = (Mask, f64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(m, &c)| (m as Mask, c))
    }

    fn bilinear<F>(&self, rhs: &Self, rule: F) -> Self
    where
        F: Fn(Mask, Mask) -> Option<(Mask, f64)>,
    {
        let mut out = vec![0.0; self.coeffs.len()];
        for (a, x) in self.nonzero() {
            for (b, y) in rhs.nonzero() {
                if let Some((m, s)) = rule(a, b) {
                    out[m as usize] += s * x * y;
                }
            }
        }
        Multivector {
            dim: self.dim,
            coeffs: out,
        }
    }

    pub(crate) fn wedge_unchecked(&self, rhs: &Self) -> Self {
        self.bilinear(rhs, |a, b| {
            (a & b == 0).then(|| (a | b, reorder_sign(a, b)))
        })
    }

    pub(crate) fn clifford_unchecked(&self, rhs: &Self) -> Self {
        self.bilinear(rhs, |a, b| Some((a ^ b, reorder_sign(a, b))))
    }

    pub(crate) fn left_contraction_unchecked(&self, rhs: &Self) -> Self {
        self.bilinear(rhs, |a, b| {
            (a & !b == 0).then(|| (a ^ b, reorder_sign(a, b)))
        })
    }

    pub(crate) fn dot_unchecked(&self, rhs: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(x, y)| x * y)
            .sum()
    }

    /// Exterior product `X ∧ Y`.
    pub fn wedge(&self, rhs: &Self) -> Result<Self> {
        same_dim(self.dim, rhs.dim)?;
        Ok(self.wedge_unchecked(rhs))
    }

    /// Euclidean Clifford product `XY` (`u_i u_i = 1`).
    pub fn clifford_product(&self, rhs: &Self) -> Result<Self> {
        same_dim(self.dim, rhs.dim)?;
        Ok(self.clifford_unchecked(rhs))
    }

    /// Euclidean scalar product `X · Y`.
    pub fn scalar_product(&self, rhs: &Self) -> Result<f64> {
        same_dim(self.dim, rhs.dim)?;
        Ok(self.dot_unchecked(rhs))
    }

    /// Left contraction `X ⌟ Y`.
    pub fn left_contraction(&self, rhs: &Self) -> Result<Self> {
        same_dim(self.dim, rhs.dim)?;
        Ok(self.left_contraction_unchecked(rhs))
    }

    /// Commutator product `X × Y = (XY - YX) / 2`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        same_dim(self.dim, rhs.dim)?;
        let xy = self.clifford_unchecked(rhs);
        let yx = rhs.clifford_unchecked(self);
        Ok((&xy - &yx).scaled(0.5))
    }

    pub fn grade_part(&self, k: usize) -> Self {
        let mut out = Self::zero(self.dim);
        if k <= self.dim {
            for &m in blade::table(self.dim).of_grade(k) {
                out.coeffs[m as usize] = self.coeffs[m as usize];
            }
        }
        out
    }

    /// Projection `⟨X⟩_S` onto the grades in `S`; zero for the empty set.
    pub fn grade_project(&self, set: &GradeSet) -> Result<Self> {
        same_dim(self.dim, set.dim)?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, &c)| {
                if set.contains(grade(m as Mask)) {
                    c
                } else {
                    0.0
                }
            })
            .collect();
        Ok(Multivector {
            dim: self.dim,
            coeffs,
        })
    }

    pub fn involution(&self, kind: Involution) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, &c)| kind.sign(grade(m as Mask)) * c)
            .collect();
        Multivector {
            dim: self.dim,
            coeffs,
        }
    }

    pub fn reversion(&self) -> Self {
        self.involution(Involution::Reversion)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Multivector {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// `Σ_i w_i X_i` over equally dimensioned terms.
    pub fn linear_combination<'a, I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (f64, &'a Multivector)>,
    {
        let mut out = Self::zero(dim);
        for (w, x) in terms {
            debug_assert_eq!(x.dim, dim);
            if w != 0.0 {
                for (o, c) in out.coeffs.iter_mut().zip(&x.coeffs) {
                    *o += w * c;
                }
            }
        }
        out
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Multivector {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Multivector {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scaled(-1.0)
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs.scaled(self)
    }
}

impl GradeSet {
    pub fn new(dim: usize, grades: &[usize]) -> Result<Self> {
        let mut bits = 0;
        for &g in grades {
            if g > dim {
                return Err(Error::GradeOutOfRange { grade: g, dim });
            }
            bits |= 1 << g;
        }
        Ok(GradeSet { dim, grades: bits })
    }

    pub fn from_bits(dim: usize, bits: u32) -> Self {
        GradeSet {
            dim,
            grades: bits & ((1 << (dim + 1)) - 1),
        }
    }

    pub fn empty(dim: usize) -> Self {
        GradeSet { dim, grades: 0 }
    }

    pub fn full(dim: usize) -> Self {
        Self::from_bits(dim, u32::MAX)
    }

    pub fn single(dim: usize, k: usize) -> Self {
        Self::from_bits(dim, 1 << k)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bits(&self) -> u32 {
        self.grades
    }

    pub fn contains(&self, k: usize) -> bool {
        k <= self.dim && self.grades & (1 << k) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.grades == 0
    }

    pub fn grades(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.dim).filter(|&k| self.contains(k))
    }

    pub fn union(&self, other: &Self) -> Self {
        GradeSet {
            dim: self.dim,
            grades: self.grades | other.grades,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        GradeSet {
            dim: self.dim,
            grades: self.grades & other.grades,
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.grades & other.grades == 0
    }
}
