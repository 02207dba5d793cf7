//! Determinant and inversion of (1,1)-extensors through the pseudoscalar,
//! changing-basis extensors, and transport of reciprocal frame pairs.

use crate::blade::pseudoscalar_mask;
use crate::error::{Error, Result};
use crate::extensor::PqExtensor;
use crate::frame::Frame;
use crate::multivector::Multivector;
use crate::operators::{self, Adjoint, FrameFormula};

/// Relative singularity threshold for `|det t|` against
/// `(max_j |t(u_j)|)^n`.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

/// A nonzero element of the top grade `⋀ⁿV`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pseudoscalar {
    value: Multivector,
}

impl Pseudoscalar {
    pub fn new(value: Multivector) -> Result<Self> {
        let n = value.dim();
        if value.is_zero() || !value.is_homogeneous(n, 0.0) {
            return Err(Error::InvalidPseudoscalar);
        }
        Ok(Pseudoscalar { value })
    }

    /// `u_1 ∧ ... ∧ u_n`.
    pub fn unit(dim: usize) -> Self {
        Pseudoscalar {
            value: Multivector::blade(dim, pseudoscalar_mask(dim)),
        }
    }

    pub fn scaled(dim: usize, factor: f64) -> Result<Self> {
        Self::new(Multivector::blade(dim, pseudoscalar_mask(dim)).scaled(factor))
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn dim(&self) -> usize {
        self.value.dim()
    }

    /// `I / |I|`. For a top-grade element this is `±u_1∧...∧u_n` exactly,
    /// since `sqrt(x²) = |x|` and `x / |x| = ±1` in binary floating point.
    pub fn normalized(&self) -> Pseudoscalar {
        let norm = self.value.norm();
        let coeffs = self.value.coeffs().iter().map(|c| c / norm).collect();
        Pseudoscalar {
            value: Multivector::from_coeffs(self.dim(), coeffs).expect("finite"),
        }
    }

    /// `I⁻¹ = Ĩ / (I · I)`.
    pub fn inverse(&self) -> Multivector {
        let sq = self.value.dot_unchecked(&self.value);
        self.value.reversion().scaled(1.0 / sq)
    }
}

fn image_scale(t: &PqExtensor) -> f64 {
    (0..t.dim())
        .map(|j| t.image_of_basis(j).norm())
        .fold(0.0, f64::max)
}

fn singularity_threshold(t: &PqExtensor) -> f64 {
    SINGULAR_THRESHOLD * image_scale(t).powi(t.dim() as i32)
}

/// `det[t] = t̲(u_1∧...∧u_n) · (u^1∧...∧u^n)` over the canonical frame.
pub fn det(t: &PqExtensor) -> Result<f64> {
    t.require_linear_operator()?;
    let n = t.dim();
    let top = (0..n).fold(Multivector::scalar(n, 1.0), |acc, j| {
        acc.wedge_unchecked(&t.image_of_basis(j))
    });
    Ok(top.get(pseudoscalar_mask(n)))
}

/// `det[t] = t̲(e_1∧...∧e_n) · (e^1∧...∧e^n)`, or with the frame and its
/// reciprocal exchanged for [`FrameFormula::Contravariant`].
pub fn det_in_frame(t: &PqExtensor, frame: &Frame, formula: FrameFormula) -> Result<f64> {
    t.require_linear_operator()?;
    let recip = frame.reciprocal()?;
    let (mapped, paired) = match formula {
        FrameFormula::Covariant => (frame, &recip),
        FrameFormula::Contravariant => (&recip, frame),
    };
    let all: Vec<usize> = (1..=t.dim()).collect();
    let top = mapped.induced_blade(&all)?;
    let image = operators::extend_apply(t, &top)?;
    Ok(image.dot_unchecked(&paired.induced_blade(&all)?))
}

/// The scalar with `t̲(I) = det[t] I`, read off as
/// `(t̲(I) · I) / (I · I)` for the normalized `I`.
pub fn det_with(t: &PqExtensor, pseudoscalar: &Pseudoscalar) -> Result<f64> {
    t.require_linear_operator()?;
    let unit = pseudoscalar.normalized();
    let i = unit.value();
    let image = operators::extend_apply(t, i)?;
    Ok(image.dot_unchecked(i) / i.dot_unchecked(i))
}

/// `t⁻¹(v) = det⁻¹[t] t̲†(vI) I⁻¹` with `I = u_1∧...∧u_n`.
pub fn invert(t: &PqExtensor) -> Result<PqExtensor> {
    invert_with(t, &Pseudoscalar::unit(t.dim()))
}

/// Inversion through an arbitrary nonzero pseudoscalar. `I` enters after
/// normalization, which leaves the formula unchanged.
pub fn invert_with(t: &PqExtensor, pseudoscalar: &Pseudoscalar) -> Result<PqExtensor> {
    t.require_linear_operator()?;
    let n = t.dim();
    if pseudoscalar.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: pseudoscalar.dim(),
        });
    }
    let d = det(t)?;
    let threshold = singularity_threshold(t);
    if d.abs() <= threshold || d == 0.0 {
        return Err(Error::SingularExtensor { det: d, threshold });
    }
    let unit = pseudoscalar.normalized();
    let i = unit.value();
    let i_inv = unit.inverse();
    let adj = t.adjoint();
    Ok(PqExtensor::from_fn(n, 1, 1, |v| {
        let vi = v.clifford_unchecked(i);
        let lifted = operators::extend_apply(&adj, &vi).expect("checked");
        lifted
            .clifford_unchecked(&i_inv)
            .grade_part(1)
            .scaled(1.0 / d)
    }))
}

/// `t* = (t†)⁻¹`.
pub fn star(t: &PqExtensor) -> Result<PqExtensor> {
    invert(&t.adjoint())
}

/// The (1,1)-extensor `v ↦ Σ_s (left_s · v) right_s`.
fn outer_sum(left: &[Multivector], right: &[Multivector]) -> PqExtensor {
    let n = left.len();
    PqExtensor::from_fn(n, 1, 1, |v| {
        Multivector::linear_combination(n, left.iter().map(|l| l.dot_unchecked(v)).zip(right))
    })
}

fn same_frame_dim(a: &Frame, b: &Frame) -> Result<()> {
    if a.dim() == b.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        })
    }
}

/// Changing-basis extensor from `({e_k}, {e^k})` to `({e'_k}, {e^k'})`:
/// `ε(v) = (e^s · v) e'_s`.
pub fn changing_basis(from: &Frame, to: &Frame) -> Result<PqExtensor> {
    same_frame_dim(from, to)?;
    Ok(outer_sum(from.reciprocal()?.vectors(), to.vectors()))
}

/// Closed forms for the inverse, adjoint and `*` of a changing-basis
/// extensor.
#[derive(Debug, Clone, PartialEq)]
pub struct ChangingBasisForms {
    /// `ε⁻¹(v) = (e^s' · v) e_s`
    pub inverse: PqExtensor,
    /// `ε†(v) = (e'_s · v) e^s`
    pub adjoint: PqExtensor,
    /// `ε*(v) = (e_s · v) e^s'`
    pub star: PqExtensor,
}

pub fn changing_basis_forms(from: &Frame, to: &Frame) -> Result<ChangingBasisForms> {
    same_frame_dim(from, to)?;
    let from_r = from.reciprocal()?;
    let to_r = to.reciprocal()?;
    Ok(ChangingBasisForms {
        inverse: outer_sum(to_r.vectors(), from.vectors()),
        adjoint: outer_sum(to.vectors(), from_r.vectors()),
        star: outer_sum(from.vectors(), to_r.vectors()),
    })
}

/// Transport a reciprocal pair by an invertible `f`: returns
/// `(E, R)` with `e_k = f(b_k)` and `r_k = f*(b^k)`.
pub fn frame_transport(f: &PqExtensor, base: &Frame) -> Result<(Frame, Frame)> {
    f.require_linear_operator()?;
    if f.dim() != base.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: base.dim(),
        });
    }
    let f_star = star(f)?;
    let recip = base.reciprocal()?;
    let e = Frame::new(
        base.vectors()
            .iter()
            .map(|b| f.apply_unchecked(b))
            .collect(),
    )?;
    let r = Frame::new(
        recip
            .vectors()
            .iter()
            .map(|b| f_star.apply_unchecked(b))
            .collect(),
    )?;
    Ok((e, r))
}

/// The unique `f` with `f(b_k) = e_k`: `f(v) = Σ_j (b^j · v) e_j`.
pub fn recover_transport(base: &Frame, image: &Frame) -> Result<PqExtensor> {
    same_frame_dim(base, image)?;
    Ok(outer_sum(base.reciprocal()?.vectors(), image.vectors()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::Tolerance;
    use nalgebra::DMatrix;

    fn op(rows: &[&[f64]]) -> PqExtensor {
        PqExtensor::linear_operator(DMatrix::from_fn(rows.len(), rows[0].len(), |i, j| {
            rows[i][j]
        }))
        .unwrap()
    }

    fn diag(d: &[f64]) -> PqExtensor {
        PqExtensor::linear_operator(DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(
            d,
        )))
        .unwrap()
    }

    fn v(c: &[f64]) -> Multivector {
        Multivector::vector(c)
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&PqExtensor::identity(4, 1)).unwrap(), 1.0);
        assert_eq!(det(&diag(&[2.0, 3.0, 4.0])).unwrap(), 24.0);
        let singular = op(&[&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0], &[0.0, 1.0, 1.0]]);
        assert_eq!(det(&singular).unwrap(), 0.0);
    }

    #[test]
    fn invert_examples() {
        let id = PqExtensor::identity(3, 1);
        assert_eq!(invert(&id).unwrap(), id);
        let inv = invert(&diag(&[2.0, 3.0])).unwrap();
        assert!(inv.approx_eq(&diag(&[0.5, 1.0 / 3.0]), &Tolerance::default()));
        let singular = op(&[&[1.0, 0.0], &[1.0, 0.0]]);
        assert!(matches!(
            invert(&singular),
            Err(Error::SingularExtensor { .. })
        ));
        assert!(matches!(
            invert(&PqExtensor::zero(2, 1, 1)),
            Err(Error::SingularExtensor { .. })
        ));
    }

    #[test]
    fn pseudoscalar_validation() {
        assert!(Pseudoscalar::new(Multivector::zero(3)).is_err());
        assert!(Pseudoscalar::new(Multivector::blade(3, 0b011)).is_err());
        let i = Pseudoscalar::scaled(3, -7.0).unwrap();
        assert_eq!(i.normalized(), Pseudoscalar::scaled(3, -1.0).unwrap());
        let prod = i.value().clifford_product(&i.inverse()).unwrap();
        assert!((prod.scalar_part() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn det_and_inverse_ignore_pseudoscalar_scale() {
        let t = op(&[&[1.0, 2.0, 0.5], &[-1.0, 0.3, 2.0], &[0.7, 0.1, -1.2]]);
        let i1 = Pseudoscalar::unit(3);
        let i7 = Pseudoscalar::scaled(3, 7.0).unwrap();
        let im = Pseudoscalar::scaled(3, -0.3).unwrap();
        assert_eq!(det_with(&t, &i1).unwrap(), det(&t).unwrap());
        assert_eq!(det_with(&t, &i7).unwrap(), det_with(&t, &i1).unwrap());
        assert_eq!(det_with(&t, &im).unwrap(), det_with(&t, &i1).unwrap());
        assert_eq!(invert_with(&t, &i7).unwrap(), invert_with(&t, &i1).unwrap());
        assert_eq!(invert_with(&t, &im).unwrap(), invert_with(&t, &i1).unwrap());
    }

    #[test]
    fn changing_basis_examples() {
        let tol = Tolerance::default();
        let e = Frame::new(vec![v(&[1.0, 0.0]), v(&[1.0, 1.0])]).unwrap();
        assert!(changing_basis(&e, &e)
            .unwrap()
            .approx_eq(&PqExtensor::identity(2, 1), &tol));

        let c = Frame::canonical(3);
        let doubled = Frame::new(c.vectors().iter().map(|x| x.scaled(2.0)).collect()).unwrap();
        let eps = changing_basis(&c, &doubled).unwrap();
        assert!(eps.approx_eq(&PqExtensor::identity(3, 1).scaled(2.0), &tol));
        let forms = changing_basis_forms(&c, &doubled).unwrap();
        assert!(forms
            .star
            .approx_eq(&PqExtensor::identity(3, 1).scaled(0.5), &tol));
        assert!(star(&eps).unwrap().approx_eq(&forms.star, &tol));
    }

    #[test]
    fn transport_examples() {
        let tol = Tolerance::default();
        let b = Frame::new(vec![v(&[1.0, 0.5]), v(&[0.0, 2.0])]).unwrap();
        let (e, r) = frame_transport(&PqExtensor::identity(2, 1), &b).unwrap();
        assert!(e.approx_eq(&b, &tol));
        assert!(r.approx_eq(&b.reciprocal().unwrap(), &tol));

        let a = std::f64::consts::PI / 5.0;
        let rot = op(&[&[a.cos(), a.sin()], &[-a.sin(), a.cos()]]);
        let (e, _) = frame_transport(&rot, &Frame::canonical(2)).unwrap();
        assert!(e.is_orthonormal(&tol));

        let (e, r) = frame_transport(&diag(&[2.0, 3.0]), &Frame::canonical(2)).unwrap();
        assert!(e.approx_eq(
            &Frame::new(vec![v(&[2.0, 0.0]), v(&[0.0, 3.0])]).unwrap(),
            &tol
        ));
        assert!(r.approx_eq(
            &Frame::new(vec![v(&[0.5, 0.0]), v(&[0.0, 1.0 / 3.0])]).unwrap(),
            &tol
        ));
        assert!(matches!(
            frame_transport(&op(&[&[1.0, 0.0], &[1.0, 0.0]]), &b),
            Err(Error::SingularExtensor { .. })
        ));
    }

    #[test]
    fn recovered_transport_needs_reciprocal_pairing() {
        // f(v) = Σ (b^j · v) e_j recovers f for any base frame, while the
        // variant Σ (b_j · v) e_j only does so when the base is orthonormal.
        let tol = Tolerance::default();
        let f = op(&[&[1.0, 0.4], &[-0.3, 1.5]]);
        let b = Frame::new(vec![v(&[1.0, 0.5]), v(&[0.0, 2.0])]).unwrap();
        let (e, _) = frame_transport(&f, &b).unwrap();
        assert!(recover_transport(&b, &e).unwrap().approx_eq(&f, &tol));
        let naive = outer_sum(b.vectors(), e.vectors());
        assert!(!naive.approx_eq(&f, &tol));
        let c = Frame::canonical(2);
        let (e, _) = frame_transport(&f, &c).unwrap();
        assert!(outer_sum(c.vectors(), e.vectors()).approx_eq(&f, &tol));
    }
}
