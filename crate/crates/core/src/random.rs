//! Seeded generators of random algebraic objects. Every generator draws from
//! a SplitMix64 stream, so a seed fixes the whole sequence.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::blade::binomial;
use crate::extensor::{ElementaryKExtensor, GeneralExtensor, PqExtensor};
use crate::frame::Frame;
use crate::multivector::{GradeSet, Multivector};

/// Singular values of generated nonsingular matrices lie in this range,
/// which bounds their condition number by 4.
const SINGULAR_VALUES: (f64, f64) = (0.5, 2.0);

#[derive(Debug, Clone)]
pub struct Gen {
    rng: SplitMix64,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    /// An independent stream for the labelled sub-task.
    pub fn fork(seed: u64, label: &str) -> Self {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        Gen::new(seed ^ h)
    }

    /// Uniform on `[-1, 1)`.
    pub fn coeff(&mut self) -> f64 {
        self.rng.random_range(-1.0..1.0)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        self.rng.random_range(0..bound)
    }

    pub fn multivector(&mut self, dim: usize) -> Multivector {
        let coeffs = (0..1usize << dim).map(|_| self.coeff()).collect();
        Multivector::from_coeffs(dim, coeffs).expect("finite")
    }

    pub fn homogeneous(&mut self, dim: usize, k: usize) -> Multivector {
        let coords: Vec<f64> = (0..binomial(dim, k)).map(|_| self.coeff()).collect();
        Multivector::from_grade_coords(dim, k, &coords)
    }

    pub fn vector(&mut self, dim: usize) -> Multivector {
        self.homogeneous(dim, 1)
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> DMatrix<f64> {
        DMatrix::from_fn(rows, cols, |_, _| self.coeff())
    }

    pub fn operator(&mut self, dim: usize) -> PqExtensor {
        PqExtensor::linear_operator(self.matrix(dim, dim)).expect("square")
    }

    pub fn pq_extensor(&mut self, dim: usize, p: usize, q: usize) -> PqExtensor {
        let m = self.matrix(binomial(dim, p), binomial(dim, q));
        PqExtensor::new(dim, p, q, m).expect("shape")
    }

    pub fn general_extensor(&mut self, dim: usize) -> GeneralExtensor {
        GeneralExtensor::new(dim, self.matrix(1 << dim, 1 << dim)).expect("shape")
    }

    pub fn elementary(&mut self, dim: usize, k: usize, q: usize) -> ElementaryKExtensor {
        let rows = dim.pow(k as u32);
        ElementaryKExtensor::new(dim, k, q, self.matrix(rows, binomial(dim, q))).expect("shape")
    }

    /// `U diag(s) V` with random orthogonal `U`, `V` and singular values
    /// drawn from a bounded range.
    pub fn well_conditioned(&mut self, dim: usize) -> DMatrix<f64> {
        let u = self.orthogonal(dim).matrix().clone();
        let v = self.orthogonal(dim).matrix().clone();
        let (lo, hi) = SINGULAR_VALUES;
        let s = DMatrix::from_fn(dim, dim, |i, j| {
            if i == j {
                self.rng.random_range(lo..hi)
            } else {
                0.0
            }
        });
        u * s * v
    }

    pub fn nonsingular_operator(&mut self, dim: usize) -> PqExtensor {
        PqExtensor::linear_operator(self.well_conditioned(dim)).expect("square")
    }

    pub fn frame(&mut self, dim: usize) -> Frame {
        Frame::from_rows(&self.well_conditioned(dim)).expect("well conditioned")
    }

    /// A product of plane rotations over every coordinate pair, optionally
    /// followed by a reflection.
    pub fn orthogonal(&mut self, dim: usize) -> PqExtensor {
        let mut m = DMatrix::<f64>::identity(dim, dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let a = self.coeff() * std::f64::consts::PI;
                let (s, c) = a.sin_cos();
                let mut g = DMatrix::<f64>::identity(dim, dim);
                g[(i, i)] = c;
                g[(j, j)] = c;
                g[(i, j)] = s;
                g[(j, i)] = -s;
                m = &m * &g;
            }
        }
        if self.rng.random_bool(0.5) {
            m.row_mut(0).neg_mut();
        }
        PqExtensor::linear_operator(m).expect("square")
    }

    pub fn orthonormal_frame(&mut self, dim: usize) -> Frame {
        Frame::from_rows(self.orthogonal(dim).matrix()).expect("orthonormal")
    }

    pub fn grade_set(&mut self, dim: usize) -> GradeSet {
        GradeSet::from_bits(dim, self.rng.random_range(0..1u32 << (dim + 1)))
    }

    /// Two grade sets with no grade in common.
    pub fn disjoint_grade_sets(&mut self, dim: usize) -> (GradeSet, GradeSet) {
        let mut a = 0u32;
        let mut b = 0u32;
        for k in 0..=dim {
            match self.below(3) {
                0 => a |= 1 << k,
                1 => b |= 1 << k,
                _ => {}
            }
        }
        (GradeSet::from_bits(dim, a), GradeSet::from_bits(dim, b))
    }
}
