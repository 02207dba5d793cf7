//! Extensors: (p,q)-extensors, general extensors on `⋀V`, and elementary
//! k-extensors, with their covariant/contravariant components relative to
//! an arbitrary frame.
//!
//! All three are stored by their values on the canonical orthonormal
//! blades. Rows index the input, columns the output:
//!
//! * [`PqExtensor`]: `matrix[(A, B)] = t(u_A) · u_B` with `A`, `B` running
//!   over the grade-p and grade-q blades in lexicographic order.
//! * [`GeneralExtensor`]: `matrix[(J, K)] = t(u_J) · u_K` indexed by mask.
//! * [`ElementaryKExtensor`]: row `(c_1, ..., c_k)` (first slot most
//!   significant) holds `t(u_{c_1}, ..., u_{c_k}) · u_K`.
//!
//! Components are kept over ascending multi-indices only, so the `1/p!`
//! style factors of the unrestricted expansions are already absorbed.

use itertools::Itertools;
use nalgebra::DMatrix;

use crate::blade::{self, binomial, Mask};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::multivector::{check_dim, GradeSet, Multivector};
use crate::tolerance::Tolerance;

/// Storage cap for elementary k-extensor component tensors.
pub const MAX_ELEMENTARY_ENTRIES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct PqExtensor {
    dim: usize,
    p: usize,
    q: usize,
    matrix: DMatrix<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralExtensor {
    dim: usize,
    matrix: DMatrix<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementaryKExtensor {
    dim: usize,
    k: usize,
    q: usize,
    components: DMatrix<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyExtensor {
    Pq(PqExtensor),
    General(GeneralExtensor),
    Elementary(ElementaryKExtensor),
}

fn check_shape(m: &DMatrix<f64>, expected: (usize, usize)) -> Result<()> {
    if m.shape() != expected {
        return Err(Error::ShapeMismatch {
            expected,
            found: m.shape(),
        });
    }
    if m.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

fn check_grade(grade: usize, dim: usize) -> Result<()> {
    if grade > dim {
        Err(Error::GradeOutOfRange { grade, dim })
    } else {
        Ok(())
    }
}

fn same_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl PqExtensor {
    pub fn new(dim: usize, p: usize, q: usize, matrix: DMatrix<f64>) -> Result<Self> {
        check_dim(dim)?;
        check_grade(p, dim)?;
        check_grade(q, dim)?;
        check_shape(&matrix, (binomial(dim, p), binomial(dim, q)))?;
        Ok(PqExtensor { dim, p, q, matrix })
    }

    /// (1,1)-extensor whose row `j` is the image of `u_{j+1}`.
    pub fn linear_operator(matrix: DMatrix<f64>) -> Result<Self> {
        let n = matrix.nrows();
        Self::new(n, 1, 1, matrix)
    }

    pub fn identity(dim: usize, p: usize) -> Self {
        let c = binomial(dim, p);
        PqExtensor {
            dim,
            p,
            q: p,
            matrix: DMatrix::identity(c, c),
        }
    }

    pub fn zero(dim: usize, p: usize, q: usize) -> Self {
        PqExtensor {
            dim,
            p,
            q,
            matrix: DMatrix::zeros(binomial(dim, p), binomial(dim, q)),
        }
    }

    /// Tabulate a map given on canonical p-blades. The grade-q part of each
    /// image is kept.
    pub fn from_fn<F>(dim: usize, p: usize, q: usize, f: F) -> Self
    where
        F: Fn(&Multivector) -> Multivector,
    {
        let table = blade::table(dim);
        let rows = table.of_grade(p);
        let mut matrix = DMatrix::zeros(rows.len(), binomial(dim, q));
        for (r, &mask) in rows.iter().enumerate() {
            let image = f(&Multivector::blade(dim, mask));
            for (c, v) in image.grade_coords(q).into_iter().enumerate() {
                matrix[(r, c)] = v;
            }
        }
        PqExtensor { dim, p, q, matrix }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn is_linear_operator(&self) -> bool {
        self.p == 1 && self.q == 1
    }

    pub(crate) fn require_linear_operator(&self) -> Result<()> {
        if self.is_linear_operator() {
            Ok(())
        } else {
            Err(Error::WrongKind { p: 1, q: 1 })
        }
    }

    /// `t(X)` for homogeneous `X` of grade `p`.
    pub fn apply(&self, x: &Multivector) -> Result<Multivector> {
        same_dim(self.dim, x.dim())?;
        if !x.is_homogeneous(self.p, 0.0) {
            return Err(Error::GradeMismatch { expected: self.p });
        }
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &Multivector) -> Multivector {
        let coords = x.grade_coords(self.p);
        let mut out = vec![0.0; self.matrix.ncols()];
        for (r, &c) in coords.iter().enumerate() {
            if c != 0.0 {
                for (o, m) in out.iter_mut().zip(self.matrix.row(r).iter()) {
                    *o += c * m;
                }
            }
        }
        Multivector::from_grade_coords(self.dim, self.q, &out)
    }

    /// Image of the canonical p-blade at lexicographic position `row`.
    pub fn image_of_basis(&self, row: usize) -> Multivector {
        let coords: Vec<f64> = self.matrix.row(row).iter().copied().collect();
        Multivector::from_grade_coords(self.dim, self.q, &coords)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PqExtensor) -> Result<PqExtensor> {
        same_dim(self.dim, inner.dim)?;
        if inner.q != self.p {
            return Err(Error::GradeMismatch { expected: self.p });
        }
        Ok(PqExtensor {
            dim: self.dim,
            p: inner.p,
            q: self.q,
            matrix: &inner.matrix * &self.matrix,
        })
    }

    pub fn scaled(&self, factor: f64) -> Self {
        PqExtensor {
            matrix: &self.matrix * factor,
            ..self.clone()
        }
    }

    pub fn add(&self, other: &PqExtensor) -> Result<PqExtensor> {
        same_dim(self.dim, other.dim)?;
        if (self.p, self.q) != (other.p, other.q) {
            return Err(Error::WrongKind {
                p: self.p,
                q: self.q,
            });
        }
        Ok(PqExtensor {
            matrix: &self.matrix + &other.matrix,
            ..self.clone()
        })
    }

    /// Lift to a general extensor acting as `t` on grade `p` and as zero
    /// elsewhere.
    pub fn to_general(&self) -> GeneralExtensor {
        let table = blade::table(self.dim);
        let n = 1 << self.dim;
        let mut matrix = DMatrix::zeros(n, n);
        for (r, &a) in table.of_grade(self.p).iter().enumerate() {
            for (c, &b) in table.of_grade(self.q).iter().enumerate() {
                matrix[(a as usize, b as usize)] = self.matrix[(r, c)];
            }
        }
        GeneralExtensor {
            dim: self.dim,
            matrix,
        }
    }

    pub fn approx_eq(&self, other: &PqExtensor, tol: &Tolerance) -> bool {
        self.dim == other.dim
            && self.p == other.p
            && self.q == other.q
            && tol.close_slices(self.matrix.as_slice(), other.matrix.as_slice())
    }

    pub fn components(&self, frame: &Frame, variance: Variance) -> Result<ComponentSet> {
        same_dim(self.dim, frame.dim())?;
        let basis = variance.basis_frame(frame)?;
        let bp = grade_coord_matrix(&basis, self.p);
        let bq = grade_coord_matrix(&basis, self.q);
        // t(b_A) · b_B for ascending A, B.
        let values = &bp * &self.matrix * bq.transpose();
        Ok(ComponentSet {
            family: Family::Pq {
                p: self.p,
                q: self.q,
            },
            variance,
            frame: frame.clone(),
            values,
        })
    }
}

impl GeneralExtensor {
    pub fn new(dim: usize, matrix: DMatrix<f64>) -> Result<Self> {
        check_dim(dim)?;
        check_shape(&matrix, (1 << dim, 1 << dim))?;
        Ok(GeneralExtensor { dim, matrix })
    }

    pub fn identity(dim: usize) -> Self {
        GeneralExtensor {
            dim,
            matrix: DMatrix::identity(1 << dim, 1 << dim),
        }
    }

    pub fn zero(dim: usize) -> Self {
        GeneralExtensor {
            dim,
            matrix: DMatrix::zeros(1 << dim, 1 << dim),
        }
    }

    /// The projector extensor `⟨ ⟩_S`.
    pub fn projector(set: &GradeSet) -> Self {
        let dim = set.dim();
        let n = 1 << dim;
        let mut matrix = DMatrix::zeros(n, n);
        for m in 0..n {
            if set.contains(blade::grade(m as Mask)) {
                matrix[(m, m)] = 1.0;
            }
        }
        GeneralExtensor { dim, matrix }
    }

    /// Tabulate a linear map given on canonical blades.
    pub fn from_fn<F>(dim: usize, f: F) -> Self
    where
        F: Fn(&Multivector) -> Multivector,
    {
        let n = 1 << dim;
        let mut matrix = DMatrix::zeros(n, n);
        for a in 0..n {
            let image = f(&Multivector::blade(dim, a as Mask));
            for (b, &v) in image.coeffs().iter().enumerate() {
                matrix[(a, b)] = v;
            }
        }
        GeneralExtensor { dim, matrix }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn apply(&self, x: &Multivector) -> Result<Multivector> {
        same_dim(self.dim, x.dim())?;
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &Multivector) -> Multivector {
        let mut out = vec![0.0; 1 << self.dim];
        for (r, &c) in x.coeffs().iter().enumerate() {
            if c != 0.0 {
                for (o, m) in out.iter_mut().zip(self.matrix.row(r).iter()) {
                    *o += c * m;
                }
            }
        }
        Multivector::from_coeffs(self.dim, out).expect("finite product")
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GeneralExtensor) -> Result<GeneralExtensor> {
        same_dim(self.dim, inner.dim)?;
        Ok(GeneralExtensor {
            dim: self.dim,
            matrix: &inner.matrix * &self.matrix,
        })
    }

    /// Restriction to the grade-p → grade-q block.
    pub fn block(&self, p: usize, q: usize) -> PqExtensor {
        let table = blade::table(self.dim);
        let rows = table.of_grade(p);
        let cols = table.of_grade(q);
        let matrix = DMatrix::from_fn(rows.len(), cols.len(), |r, c| {
            self.matrix[(rows[r] as usize, cols[c] as usize)]
        });
        PqExtensor {
            dim: self.dim,
            p,
            q,
            matrix,
        }
    }

    pub fn approx_eq(&self, other: &GeneralExtensor, tol: &Tolerance) -> bool {
        self.dim == other.dim && tol.close_slices(self.matrix.as_slice(), other.matrix.as_slice())
    }

    pub fn components(&self, frame: &Frame, variance: Variance) -> Result<ComponentSet> {
        same_dim(self.dim, frame.dim())?;
        let basis = variance.basis_frame(frame)?;
        let b = full_coord_matrix(&basis);
        // t(b_J) · b_K over collective indices.
        let values = &b * &self.matrix * b.transpose();
        Ok(ComponentSet {
            family: Family::General,
            variance,
            frame: frame.clone(),
            values,
        })
    }
}

fn tuple_count(dim: usize, k: usize) -> Option<usize> {
    dim.checked_pow(k as u32)
}

/// Decode row `index` into slot indices (0-based), first slot most significant.
fn decode_tuple(mut index: usize, dim: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in (0..k).rev() {
        out[slot] = index % dim;
        index /= dim;
    }
    out
}

fn encode_tuple(tuple: &[usize], dim: usize) -> usize {
    tuple.iter().fold(0, |acc, &j| acc * dim + j)
}

/// Contract every slot of a `dim^k`-row tensor with `mat`:
/// `out[(a_1..a_k), c] = Σ_b Π_i mat[a_i, b_i] · values[(b_1..b_k), c]`.
fn transform_slots(
    values: &DMatrix<f64>,
    dim: usize,
    k: usize,
    mat: &DMatrix<f64>,
) -> DMatrix<f64> {
    let cols = values.ncols();
    let rows = values.nrows();
    let mut cur = values.clone();
    for slot in 0..k {
        let stride = dim.pow((k - 1 - slot) as u32);
        let mut next = DMatrix::zeros(rows, cols);
        for r in 0..rows {
            let digit = (r / stride) % dim;
            let base = r - digit * stride;
            for b in 0..dim {
                let w = mat[(digit, b)];
                if w != 0.0 {
                    let src = base + b * stride;
                    for c in 0..cols {
                        next[(r, c)] += w * cur[(src, c)];
                    }
                }
            }
        }
        cur = next;
    }
    cur
}

impl ElementaryKExtensor {
    pub fn new(dim: usize, k: usize, q: usize, components: DMatrix<f64>) -> Result<Self> {
        check_dim(dim)?;
        check_grade(q, dim)?;
        if k == 0 {
            return Err(Error::Arity {
                expected: 1,
                found: 0,
            });
        }
        let rows = Self::guard(dim, k, q)?;
        check_shape(&components, (rows, binomial(dim, q)))?;
        Ok(ElementaryKExtensor {
            dim,
            k,
            q,
            components,
        })
    }

    fn guard(dim: usize, k: usize, q: usize) -> Result<usize> {
        let rows = tuple_count(dim, k);
        let entries = rows.and_then(|r| r.checked_mul(binomial(dim, q)));
        match (rows, entries) {
            (Some(r), Some(e)) if e <= MAX_ELEMENTARY_ENTRIES => Ok(r),
            _ => Err(Error::TooLarge {
                entries: entries.unwrap_or(usize::MAX),
                limit: MAX_ELEMENTARY_ENTRIES,
            }),
        }
    }

    /// Tabulate a multilinear map given on canonical vectors.
    pub fn from_fn<F>(dim: usize, k: usize, q: usize, f: F) -> Result<Self>
    where
        F: Fn(&[Multivector]) -> Multivector,
    {
        let rows = Self::guard(dim, k, q)?;
        let mut components = DMatrix::zeros(rows, binomial(dim, q));
        for r in 0..rows {
            let args: Vec<Multivector> = decode_tuple(r, dim, k)
                .into_iter()
                .map(|j| Multivector::basis_vector(dim, j + 1))
                .collect();
            for (c, v) in f(&args).grade_coords(q).into_iter().enumerate() {
                components[(r, c)] = v;
            }
        }
        Self::new(dim, k, q, components)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn components_matrix(&self) -> &DMatrix<f64> {
        &self.components
    }

    /// `t(v_1, ..., v_k)`.
    pub fn eval(&self, args: &[Multivector]) -> Result<Multivector> {
        if args.len() != self.k {
            return Err(Error::Arity {
                expected: self.k,
                found: args.len(),
            });
        }
        for a in args {
            same_dim(self.dim, a.dim())?;
            if !a.is_homogeneous(1, 0.0) {
                return Err(Error::GradeMismatch { expected: 1 });
            }
        }
        let vs: Vec<Vec<f64>> = args.iter().map(|a| a.vector_part()).collect();
        let mut out = vec![0.0; self.components.ncols()];
        for r in 0..self.components.nrows() {
            let w: f64 = decode_tuple(r, self.dim, self.k)
                .iter()
                .zip(&vs)
                .map(|(&j, v)| v[j])
                .product();
            if w != 0.0 {
                for (o, m) in out.iter_mut().zip(self.components.row(r).iter()) {
                    *o += w * m;
                }
            }
        }
        Ok(Multivector::from_grade_coords(self.dim, self.q, &out))
    }

    /// Complete skew-symmetry in the vector slots; always true for `k ≤ 1`.
    pub fn is_exform(&self, tol: &Tolerance) -> bool {
        if self.k <= 1 {
            return true;
        }
        let scale = crate::tolerance::max_abs(self.components.as_slice());
        let bound = tol.bound(scale);
        for r in 0..self.components.nrows() {
            let tuple = decode_tuple(r, self.dim, self.k);
            for i in 0..self.k {
                for j in i + 1..self.k {
                    let mut swapped = tuple.clone();
                    swapped.swap(i, j);
                    let s = encode_tuple(&swapped, self.dim);
                    for c in 0..self.components.ncols() {
                        if (self.components[(r, c)] + self.components[(s, c)]).abs() > bound {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn approx_eq(&self, other: &ElementaryKExtensor, tol: &Tolerance) -> bool {
        (self.dim, self.k, self.q) == (other.dim, other.k, other.q)
            && tol.close_slices(self.components.as_slice(), other.components.as_slice())
    }

    pub fn components(&self, frame: &Frame, variance: Variance) -> Result<ComponentSet> {
        same_dim(self.dim, frame.dim())?;
        let basis = variance.basis_frame(frame)?;
        let b1 = grade_coord_matrix(&basis, 1);
        let bq = grade_coord_matrix(&basis, self.q);
        // t(b_{j_1}, ..., b_{j_k}) · b_K.
        let values = transform_slots(&self.components, self.dim, self.k, &b1) * bq.transpose();
        Ok(ComponentSet {
            family: Family::Elementary {
                k: self.k,
                q: self.q,
            },
            variance,
            frame: frame.clone(),
            values,
        })
    }
}

impl AnyExtensor {
    pub fn dim(&self) -> usize {
        match self {
            AnyExtensor::Pq(t) => t.dim(),
            AnyExtensor::General(t) => t.dim(),
            AnyExtensor::Elementary(t) => t.dim(),
        }
    }

    pub fn components(&self, frame: &Frame, variance: Variance) -> Result<ComponentSet> {
        match self {
            AnyExtensor::Pq(t) => t.components(frame, variance),
            AnyExtensor::General(t) => t.components(frame, variance),
            AnyExtensor::Elementary(t) => t.components(frame, variance),
        }
    }

    /// Entries of the canonical storage, flattened column-major.
    pub fn flat(&self) -> &[f64] {
        match self {
            AnyExtensor::Pq(t) => t.matrix.as_slice(),
            AnyExtensor::General(t) => t.matrix.as_slice(),
            AnyExtensor::Elementary(t) => t.components.as_slice(),
        }
    }

    pub fn approx_eq(&self, other: &AnyExtensor, tol: &Tolerance) -> bool {
        match (self, other) {
            (AnyExtensor::Pq(a), AnyExtensor::Pq(b)) => a.approx_eq(b, tol),
            (AnyExtensor::General(a), AnyExtensor::General(b)) => a.approx_eq(b, tol),
            (AnyExtensor::Elementary(a), AnyExtensor::Elementary(b)) => a.approx_eq(b, tol),
            _ => false,
        }
    }
}

/// Component variance. Covariant components evaluate the extensor on the
/// frame `{e_j}`; contravariant ones on the reciprocal frame `{e^j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Variance {
    fn basis_frame(self, frame: &Frame) -> Result<Frame> {
        match self {
            Variance::Covariant => Ok(frame.clone()),
            Variance::Contravariant => frame.reciprocal(),
        }
    }

    /// Frame carrying the basis extensors of the matching expansion.
    fn expansion_frame(self, frame: &Frame) -> Result<Frame> {
        match self {
            Variance::Covariant => frame.reciprocal(),
            Variance::Contravariant => Ok(frame.clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Pq { p: usize, q: usize },
    General,
    Elementary { k: usize, q: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    PqCovariant,
    PqContravariant,
    GeneralCovariant,
    GeneralContravariant,
    ElementaryCovariant,
    ElementaryContravariant,
}

impl ComponentKind {
    pub const ALL: [ComponentKind; 6] = [
        ComponentKind::PqCovariant,
        ComponentKind::PqContravariant,
        ComponentKind::GeneralCovariant,
        ComponentKind::GeneralContravariant,
        ComponentKind::ElementaryCovariant,
        ComponentKind::ElementaryContravariant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ComponentKind::PqCovariant => "pq_covariant",
            ComponentKind::PqContravariant => "pq_contravariant",
            ComponentKind::GeneralCovariant => "general_covariant",
            ComponentKind::GeneralContravariant => "general_contravariant",
            ComponentKind::ElementaryCovariant => "elementary_covariant",
            ComponentKind::ElementaryContravariant => "elementary_contravariant",
        }
    }
}

/// Components of an extensor relative to a frame.
///
/// Rows index the input multi-index (ascending p-tuples, masks, or all
/// k-tuples), columns the output multi-index (ascending q-tuples or masks).
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentSet {
    pub family: Family,
    pub variance: Variance,
    pub frame: Frame,
    pub values: DMatrix<f64>,
}

impl ComponentSet {
    pub fn kind(&self) -> ComponentKind {
        use ComponentKind::*;
        match (self.family, self.variance) {
            (Family::Pq { .. }, Variance::Covariant) => PqCovariant,
            (Family::Pq { .. }, Variance::Contravariant) => PqContravariant,
            (Family::General, Variance::Covariant) => GeneralCovariant,
            (Family::General, Variance::Contravariant) => GeneralContravariant,
            (Family::Elementary { .. }, Variance::Covariant) => ElementaryCovariant,
            (Family::Elementary { .. }, Variance::Contravariant) => ElementaryContravariant,
        }
    }

    pub fn expected_shape(&self) -> Result<(usize, usize)> {
        let n = self.frame.dim();
        Ok(match self.family {
            Family::Pq { p, q } => {
                check_grade(p, n)?;
                check_grade(q, n)?;
                (binomial(n, p), binomial(n, q))
            }
            Family::General => (1 << n, 1 << n),
            Family::Elementary { k, q } => {
                check_grade(q, n)?;
                (ElementaryKExtensor::guard(n, k, q)?, binomial(n, q))
            }
        })
    }

    /// Expand over the basis extensors built from the dual frame, e.g.
    /// `t = Σ t_{A;B} ε^{A;B}` with `ε^{A;B}(X) = (e^A · X) e^B`.
    pub fn reconstruct(&self) -> Result<AnyExtensor> {
        let expected = self.expected_shape()?;
        if self.values.shape() != expected {
            return Err(Error::MalformedComponents(format!(
                "{} values have shape {:?}, expected {:?}",
                self.kind().name(),
                self.values.shape(),
                expected
            )));
        }
        let n = self.frame.dim();
        let dual = self.variance.expansion_frame(&self.frame)?;
        Ok(match self.family {
            Family::Pq { p, q } => {
                let dp = grade_coord_matrix(&dual, p);
                let dq = grade_coord_matrix(&dual, q);
                let matrix = dp.transpose() * &self.values * dq;
                AnyExtensor::Pq(PqExtensor::new(n, p, q, matrix)?)
            }
            Family::General => {
                let d = full_coord_matrix(&dual);
                let matrix = d.transpose() * &self.values * d;
                AnyExtensor::General(GeneralExtensor::new(n, matrix)?)
            }
            Family::Elementary { k, q } => {
                let d1 = grade_coord_matrix(&dual, 1);
                let dq = grade_coord_matrix(&dual, q);
                let components = transform_slots(&self.values, n, k, &d1.transpose()) * dq;
                AnyExtensor::Elementary(ElementaryKExtensor::new(n, k, q, components)?)
            }
        })
    }
}

/// Row `A` holds the canonical grade-`k` coordinates of the induced blade
/// `e_A` (ascending `A` in lexicographic order).
fn grade_coord_matrix(frame: &Frame, k: usize) -> DMatrix<f64> {
    let n = frame.dim();
    let blades = frame.induced_blades();
    let masks = blade::table(n).of_grade(k);
    let mut out = DMatrix::zeros(masks.len(), masks.len());
    for (r, &a) in masks.iter().enumerate() {
        for (c, v) in blades[a as usize].grade_coords(k).into_iter().enumerate() {
            out[(r, c)] = v;
        }
    }
    out
}

/// Row `J` holds the full canonical coordinates of `e_J`.
fn full_coord_matrix(frame: &Frame) -> DMatrix<f64> {
    let n = 1 << frame.dim();
    let blades = frame.induced_blades();
    DMatrix::from_fn(n, n, |j, c| blades[j].coeffs()[c])
}

/// Free function form of component extraction.
pub fn components(t: &AnyExtensor, frame: &Frame, variance: Variance) -> Result<ComponentSet> {
    t.components(frame, variance)
}

pub fn reconstruct(c: &ComponentSet) -> Result<AnyExtensor> {
    c.reconstruct()
}

/// Parameterised extensor spaces for dimension counting.
#[derive(Debug, Clone, PartialEq)]
pub enum SpaceDescriptor {
    /// `ext_p^q(V)`.
    Pq { dim: usize, p: usize, q: usize },
    /// `ext(V)`.
    General { dim: usize },
    /// `k-ext^q(V)`.
    Elementary { dim: usize, k: usize, q: usize },
    /// `k-exf^p(V)`.
    Exform { dim: usize, k: usize, p: usize },
    /// `k-ext(⋀_1◇V, ..., ⋀_k◇V; ⋀◇V)` with each subspace given by grades.
    GeneralK {
        dim: usize,
        domains: Vec<GradeSet>,
        codomain: GradeSet,
    },
}

fn subspace_dim(set: &GradeSet) -> usize {
    set.grades().map(|p| binomial(set.dim(), p)).sum()
}

pub fn dim_of(desc: &SpaceDescriptor) -> Result<usize> {
    match desc {
        SpaceDescriptor::Pq { dim, p, q } => {
            check_dim(*dim)?;
            check_grade(*p, *dim)?;
            check_grade(*q, *dim)?;
            Ok(binomial(*dim, *p) * binomial(*dim, *q))
        }
        SpaceDescriptor::General { dim } => {
            check_dim(*dim)?;
            Ok((1usize << dim) * (1usize << dim))
        }
        SpaceDescriptor::Elementary { dim, k, q } => {
            check_dim(*dim)?;
            check_grade(*q, *dim)?;
            tuple_count(*dim, *k)
                .and_then(|r| r.checked_mul(binomial(*dim, *q)))
                .ok_or(Error::TooLarge {
                    entries: usize::MAX,
                    limit: usize::MAX,
                })
        }
        SpaceDescriptor::Exform { dim, k, p } => {
            check_dim(*dim)?;
            check_grade(*p, *dim)?;
            Ok(binomial(*dim, *k) * binomial(*dim, *p))
        }
        SpaceDescriptor::GeneralK {
            dim,
            domains,
            codomain,
        } => {
            check_dim(*dim)?;
            for s in domains.iter().chain(std::iter::once(codomain)) {
                same_dim(*dim, s.dim())?;
            }
            Ok(domains.iter().map(subspace_dim).product::<usize>() * subspace_dim(codomain))
        }
    }
}

/// The covariant basis extensors of a space relative to `frame`, e.g.
/// `ε^{A;B}(X) = (e^A · X) e^B`. Exform bases are the alternations
/// `Σ_σ sign(σ) ε^{σ(j);K}` over ascending `j`.
pub fn basis(desc: &SpaceDescriptor, frame: &Frame) -> Result<Vec<AnyExtensor>> {
    let n = frame.dim();
    let recip = frame.reciprocal()?;
    let blades = recip.induced_blades();
    let table = blade::table(n);
    match *desc {
        SpaceDescriptor::Pq { dim, p, q } => {
            same_dim(n, dim)?;
            dim_of(desc)?;
            let mut out = Vec::new();
            for &a in table.of_grade(p) {
                let left = blades[a as usize].grade_coords(p);
                for &b in table.of_grade(q) {
                    let right = blades[b as usize].grade_coords(q);
                    let m = DMatrix::from_fn(left.len(), right.len(), |r, c| left[r] * right[c]);
                    out.push(AnyExtensor::Pq(PqExtensor::new(n, p, q, m)?));
                }
            }
            Ok(out)
        }
        SpaceDescriptor::General { dim } => {
            same_dim(n, dim)?;
            let size = 1 << n;
            let mut out = Vec::with_capacity(size * size);
            for bj in &blades {
                let left = bj.coeffs();
                for bk in &blades {
                    let right = bk.coeffs();
                    let m = DMatrix::from_fn(size, size, |r, c| left[r] * right[c]);
                    out.push(AnyExtensor::General(GeneralExtensor::new(n, m)?));
                }
            }
            Ok(out)
        }
        SpaceDescriptor::Elementary { dim, k, q } => {
            same_dim(n, dim)?;
            let rows = ElementaryKExtensor::guard(n, k, q)?;
            let vectors: Vec<Vec<f64>> = recip.vectors().iter().map(|v| v.vector_part()).collect();
            let mut out = Vec::with_capacity(rows * binomial(n, q));
            for jt in 0..rows {
                let js = decode_tuple(jt, n, k);
                let slot_weights: Vec<f64> = (0..rows)
                    .map(|ct| {
                        decode_tuple(ct, n, k)
                            .iter()
                            .zip(&js)
                            .map(|(&c, &j)| vectors[j][c])
                            .product()
                    })
                    .collect();
                for &b in table.of_grade(q) {
                    let right = blades[b as usize].grade_coords(q);
                    let m = DMatrix::from_fn(rows, right.len(), |r, c| slot_weights[r] * right[c]);
                    out.push(AnyExtensor::Elementary(ElementaryKExtensor::new(
                        n, k, q, m,
                    )?));
                }
            }
            Ok(out)
        }
        SpaceDescriptor::Exform { dim, k, p } => {
            same_dim(n, dim)?;
            if k == 0 {
                return Err(Error::Arity {
                    expected: 1,
                    found: 0,
                });
            }
            let elementary = basis(&SpaceDescriptor::Elementary { dim, k, q: p }, frame)?;
            let per_tuple = binomial(n, p);
            let mut out = Vec::new();
            for js in (0..n).combinations(k) {
                for kk in 0..per_tuple {
                    let mut acc = DMatrix::zeros(n.pow(k as u32), per_tuple);
                    for (perm, sign) in permutations_with_sign(&js) {
                        let idx = encode_tuple(&perm, n) * per_tuple + kk;
                        if let AnyExtensor::Elementary(e) = &elementary[idx] {
                            acc += &e.components * sign;
                        }
                    }
                    out.push(AnyExtensor::Elementary(ElementaryKExtensor::new(
                        n, k, p, acc,
                    )?));
                }
            }
            Ok(out)
        }
        SpaceDescriptor::GeneralK { .. } => Err(Error::MalformedComponents(
            "basis enumeration is only available for the named extensor spaces".into(),
        )),
    }
}

fn permutations_with_sign(items: &[usize]) -> Vec<(Vec<usize>, f64)> {
    (0..items.len())
        .permutations(items.len())
        .map(|perm| {
            let mut inv = 0;
            for i in 0..perm.len() {
                for j in i + 1..perm.len() {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            let sign = if inv % 2 == 0 { 1.0 } else { -1.0 };
            (perm.iter().map(|&i| items[i]).collect(), sign)
        })
        .collect()
}
