//! Extension, standard adjoint and generalization of extensors, the
//! bivector of a (1,1)-extensor, and its symmetric/skew decomposition.
//!
//! The operator maps `t ↦ t̲` and `t ↦ t̰` are not linear in `t`, so they are
//! exposed only through their applications (`extend_apply`,
//! `generalize_apply`) and materializations (`extend_matrix`,
//! `generalize_matrix`).

use crate::error::{Error, Result};
use crate::extensor::{GeneralExtensor, PqExtensor};
use crate::frame::Frame;
use crate::multivector::{GradeSet, Multivector};

/// Which of the two equivalent frame expansions to evaluate.
///
/// `Covariant` pairs `e^J · X` with images of `e_j` (and the mirror choice
/// for the adjoint formulas); `Contravariant` swaps the roles of the frame
/// and its reciprocal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameFormula {
    Covariant,
    Contravariant,
}

fn same_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `images[J] = t(v_{j_1}) ∧ ... ∧ t(v_{j_k})` for every mask `J`.
fn wedge_images(t: &PqExtensor, vectors: &[Multivector]) -> Vec<Multivector> {
    let n = t.dim();
    let mapped: Vec<Multivector> = vectors.iter().map(|v| t.apply_unchecked(v)).collect();
    let mut out = vec![Multivector::scalar(n, 1.0); 1 << n];
    for mask in 1..(1usize << n) {
        let high = (usize::BITS - 1 - mask.leading_zeros()) as usize;
        out[mask] = out[mask & !(1 << high)].wedge_unchecked(&mapped[high]);
    }
    out
}

/// `t̲(X) = Σ_J (e^J · X) t(e_{j_1}) ∧ ... ∧ t(e_{j_k})` over ascending `J`,
/// or the same with `e_J`, `e^j` exchanged for
/// [`FrameFormula::Contravariant`].
pub fn extend_apply_in_frame(
    t: &PqExtensor,
    x: &Multivector,
    frame: &Frame,
    formula: FrameFormula,
) -> Result<Multivector> {
    t.require_linear_operator()?;
    same_dim(t.dim(), x.dim())?;
    same_dim(t.dim(), frame.dim())?;
    let recip = frame.reciprocal()?;
    let (image_frame, pairing_frame) = match formula {
        FrameFormula::Covariant => (frame, &recip),
        FrameFormula::Contravariant => (&recip, frame),
    };
    let images = wedge_images(t, image_frame.vectors());
    let pairing = pairing_frame.induced_blades();
    let n = t.dim();
    let weights: Vec<f64> = pairing.iter().map(|b| b.dot_unchecked(x)).collect();
    Ok(Multivector::linear_combination(
        n,
        weights.into_iter().zip(images.iter()),
    ))
}

/// The extended (outermorphism) of a (1,1)-extensor applied to `X`,
/// evaluated over the canonical orthonormal frame.
pub fn extend_apply(t: &PqExtensor, x: &Multivector) -> Result<Multivector> {
    t.require_linear_operator()?;
    same_dim(t.dim(), x.dim())?;
    let basis: Vec<Multivector> = (1..=t.dim())
        .map(|i| Multivector::basis_vector(t.dim(), i))
        .collect();
    let images = wedge_images(t, &basis);
    Ok(Multivector::linear_combination(
        t.dim(),
        x.coeffs().iter().copied().zip(images.iter()),
    ))
}

/// `t̲` as a general extensor; the grade-k block is the k-th compound of `t`.
pub fn extend_matrix(t: &PqExtensor) -> Result<GeneralExtensor> {
    t.require_linear_operator()?;
    let n = t.dim();
    let basis: Vec<Multivector> = (1..=n).map(|i| Multivector::basis_vector(n, i)).collect();
    let images = wedge_images(t, &basis);
    let size = 1 << n;
    let matrix = nalgebra::DMatrix::from_fn(size, size, |a, b| images[a].coeffs()[b]);
    GeneralExtensor::new(n, matrix)
}

/// The standard adjoint. Over the orthonormal canonical blades this is the
/// transpose with the grades exchanged.
pub trait Adjoint {
    fn adjoint(&self) -> Self;
}

impl Adjoint for PqExtensor {
    fn adjoint(&self) -> Self {
        PqExtensor::new(self.dim(), self.q(), self.p(), self.matrix().transpose())
            .expect("transpose has the swapped shape")
    }
}

impl Adjoint for GeneralExtensor {
    fn adjoint(&self) -> Self {
        GeneralExtensor::new(self.dim(), self.matrix().transpose()).expect("square")
    }
}

pub fn adjoint<T: Adjoint>(t: &T) -> T {
    t.adjoint()
}

/// `t†(Y) = Σ_J (t(e_J) · Y) e^J` over ascending p-tuples `J`
/// (`Contravariant` exchanges `e_J` and `e^J`).
pub fn adjoint_in_frame(
    t: &PqExtensor,
    frame: &Frame,
    formula: FrameFormula,
) -> Result<PqExtensor> {
    same_dim(t.dim(), frame.dim())?;
    let recip = frame.reciprocal()?;
    let (eval_frame, out_frame) = match formula {
        FrameFormula::Covariant => (frame, &recip),
        FrameFormula::Contravariant => (&recip, frame),
    };
    let table = crate::blade::table(t.dim());
    let eval_blades = eval_frame.induced_blades();
    let out_blades = out_frame.induced_blades();
    let images: Vec<(Multivector, &Multivector)> = table
        .of_grade(t.p())
        .iter()
        .map(|&m| {
            (
                t.apply_unchecked(&eval_blades[m as usize]),
                &out_blades[m as usize],
            )
        })
        .collect();
    Ok(PqExtensor::from_fn(t.dim(), t.q(), t.p(), |y| {
        Multivector::linear_combination(
            t.dim(),
            images.iter().map(|(img, out)| (img.dot_unchecked(y), *out)),
        )
    }))
}

/// Adjoint of a general extensor through the collective-index sum
/// `t†(Y) = Σ_J (t(⟨e^J⟩_S) · Y) e_J`, where `S` is the domain grade set
/// (the full space when `None`).
pub fn general_adjoint_in_frame(
    t: &GeneralExtensor,
    frame: &Frame,
    domain: Option<&GradeSet>,
    formula: FrameFormula,
) -> Result<GeneralExtensor> {
    let n = t.dim();
    same_dim(n, frame.dim())?;
    let full = GradeSet::full(n);
    let domain = domain.unwrap_or(&full);
    same_dim(n, domain.dim())?;
    let recip = frame.reciprocal()?;
    let (eval_frame, out_frame) = match formula {
        FrameFormula::Covariant => (&recip, frame),
        FrameFormula::Contravariant => (frame, &recip),
    };
    let eval_blades = eval_frame.induced_blades();
    let out_blades = out_frame.induced_blades();
    let images: Vec<Multivector> = eval_blades
        .iter()
        .map(|b| t.apply_unchecked(&b.grade_project(domain).expect("same dim")))
        .collect();
    Ok(GeneralExtensor::from_fn(n, |y| {
        Multivector::linear_combination(
            n,
            images
                .iter()
                .zip(&out_blades)
                .map(|(img, out)| (img.dot_unchecked(y), out)),
        )
    }))
}

/// `t̰(X) = Σ_k t(e^k) ∧ (e_k ⌟ X)`, or `Σ_k t(e_k) ∧ (e^k ⌟ X)` for
/// [`FrameFormula::Contravariant`].
pub fn generalize_apply_in_frame(
    t: &PqExtensor,
    x: &Multivector,
    frame: &Frame,
    formula: FrameFormula,
) -> Result<Multivector> {
    t.require_linear_operator()?;
    same_dim(t.dim(), x.dim())?;
    same_dim(t.dim(), frame.dim())?;
    let recip = frame.reciprocal()?;
    let (mapped, contracting) = match formula {
        FrameFormula::Covariant => (&recip, frame),
        FrameFormula::Contravariant => (frame, &recip),
    };
    let mut out = Multivector::zero(t.dim());
    for (m, c) in mapped.vectors().iter().zip(contracting.vectors()) {
        out += &t
            .apply_unchecked(m)
            .wedge_unchecked(&c.left_contraction_unchecked(x));
    }
    Ok(out)
}

/// The generalized of `t` applied to `X`, over the canonical frame.
pub fn generalize_apply(t: &PqExtensor, x: &Multivector) -> Result<Multivector> {
    t.require_linear_operator()?;
    same_dim(t.dim(), x.dim())?;
    let n = t.dim();
    let mut out = Multivector::zero(n);
    for k in 0..n {
        let u = Multivector::basis_vector(n, k + 1);
        out += &t
            .image_of_basis(k)
            .wedge_unchecked(&u.left_contraction_unchecked(x));
    }
    Ok(out)
}

pub fn generalize_matrix(t: &PqExtensor) -> Result<GeneralExtensor> {
    t.require_linear_operator()?;
    Ok(GeneralExtensor::from_fn(t.dim(), |b| {
        generalize_apply(t, b).expect("checked")
    }))
}

/// The bivector of `t`: `biv[t] = Σ_k t(e^k) ∧ e_k`.
pub fn biv(t: &PqExtensor) -> Result<Multivector> {
    biv_in_frame(t, &Frame::canonical(t.dim()))
}

pub fn biv_in_frame(t: &PqExtensor, frame: &Frame) -> Result<Multivector> {
    t.require_linear_operator()?;
    same_dim(t.dim(), frame.dim())?;
    let recip = frame.reciprocal()?;
    let mut out = Multivector::zero(t.dim());
    for (up, down) in recip.vectors().iter().zip(frame.vectors()) {
        out += &t.apply_unchecked(up).wedge_unchecked(down);
    }
    Ok(out)
}

/// `(t₊, t₋) = ((t + t†)/2, (t - t†)/2)`.
pub fn sym_skew_parts(t: &PqExtensor) -> Result<(PqExtensor, PqExtensor)> {
    t.require_linear_operator()?;
    let adj = t.adjoint();
    let sym = t.add(&adj)?.scaled(0.5);
    let skew = t.add(&adj.scaled(-1.0))?.scaled(0.5);
    Ok((sym, skew))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::tolerance::Tolerance;
    use nalgebra::DMatrix;

    fn mat(rows: &[&[f64]]) -> DMatrix<f64> {
        DMatrix::from_fn(rows.len(), rows[0].len(), |i, j| rows[i][j])
    }

    fn op(rows: &[&[f64]]) -> PqExtensor {
        PqExtensor::linear_operator(mat(rows)).unwrap()
    }

    fn sample3() -> PqExtensor {
        op(&[&[1.0, 2.0, 0.5], &[-1.0, 0.3, 2.0], &[0.7, 0.1, -1.2]])
    }

    #[test]
    fn extension_examples() {
        let t = sample3();
        let five = Multivector::scalar(3, 5.0);
        assert_eq!(extend_apply(&t, &five).unwrap(), five);
        let x = Multivector::from_coeffs(3, (0..8).map(|i| i as f64 - 3.5).collect()).unwrap();
        assert_eq!(extend_apply(&PqExtensor::identity(3, 1), &x).unwrap(), x);
        let d = op(&[&[2.0, 0.0], &[0.0, 3.0]]);
        let b = Multivector::blade(2, 0b11);
        assert_eq!(extend_apply(&d, &b).unwrap(), b.scaled(6.0));
    }

    #[test]
    fn extension_matrix_blocks() {
        assert_eq!(
            extend_matrix(&PqExtensor::identity(3, 1)).unwrap(),
            GeneralExtensor::identity(3)
        );
        let d = op(&[&[2.0, 0.0], &[0.0, 3.0]]);
        let m = extend_matrix(&d).unwrap();
        assert_eq!(m.block(0, 0).matrix(), &mat(&[&[1.0]]));
        assert_eq!(m.block(1, 1).matrix(), d.matrix());
        assert_eq!(m.block(2, 2).matrix(), &mat(&[&[6.0]]));
        let t = sample3();
        let m = extend_matrix(&t).unwrap();
        let c2 = oracle::oracle_outermorphism_minor(t.matrix(), 2).unwrap();
        assert!((m.block(2, 2).matrix() - c2).abs().max() < 1e-14);
        // off-diagonal grade blocks vanish
        assert!(m.block(1, 2).matrix().abs().max() == 0.0);
    }

    #[test]
    fn extension_requires_linear_operator() {
        let t = PqExtensor::identity(3, 2);
        assert_eq!(
            extend_apply(&t, &Multivector::zero(3)),
            Err(Error::WrongKind { p: 1, q: 1 })
        );
        assert!(extend_matrix(&t).is_err());
        assert!(generalize_apply(&t, &Multivector::zero(3)).is_err());
        assert!(biv(&t).is_err());
        assert!(extend_apply(&sample3(), &Multivector::zero(2)).is_err());
    }

    #[test]
    fn adjoint_examples() {
        let s = op(&[&[1.0, 2.0], &[2.0, -3.0]]);
        assert_eq!(s.adjoint(), s);
        let t = op(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let a = t.adjoint();
        assert_eq!(a.matrix(), &mat(&[&[0.0, 0.0], &[1.0, 0.0]]));
        // X · t†(Y) = t(X) · Y over basis vectors.
        for i in 1..=2 {
            for j in 1..=2 {
                let x = Multivector::basis_vector(2, i);
                let y = Multivector::basis_vector(2, j);
                let lhs = x.scalar_product(&a.apply(&y).unwrap()).unwrap();
                let rhs = t.apply(&x).unwrap().scalar_product(&y).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(a.adjoint(), t);
    }

    #[test]
    fn adjoint_of_pq_swaps_grades() {
        let t =
            PqExtensor::new(3, 1, 2, DMatrix::from_fn(3, 3, |i, j| (i * 3 + j) as f64)).unwrap();
        let a = t.adjoint();
        assert_eq!((a.p(), a.q()), (2, 1));
        let f = Frame::new(vec![
            Multivector::vector(&[1.0, 0.2, 0.0]),
            Multivector::vector(&[0.3, 1.0, -0.4]),
            Multivector::vector(&[0.0, 0.5, 2.0]),
        ])
        .unwrap();
        for formula in [FrameFormula::Covariant, FrameFormula::Contravariant] {
            let b = adjoint_in_frame(&t, &f, formula).unwrap();
            assert!(b.approx_eq(&a, &Tolerance::default()));
        }
    }

    #[test]
    fn generalization_examples() {
        let t = sample3();
        assert!(generalize_apply(&t, &Multivector::scalar(3, 2.0))
            .unwrap()
            .is_zero());
        let v = Multivector::vector(&[0.4, -1.0, 2.0]);
        let g = generalize_apply(&t, &v).unwrap();
        assert!(Tolerance::default().close_slices(g.coeffs(), t.apply(&v).unwrap().coeffs()));
        let b = Multivector::blade(3, 0b011);
        assert_eq!(
            generalize_apply(&PqExtensor::identity(3, 1), &b).unwrap(),
            b.scaled(2.0)
        );
    }

    #[test]
    fn bivector_examples() {
        assert!(biv(&PqExtensor::identity(3, 1)).unwrap().is_zero());
        let s = op(&[&[1.0, 2.0], &[2.0, -3.0]]);
        assert!(biv(&s).unwrap().is_zero());
        let r = op(&[&[0.0, 1.0], &[-1.0, 0.0]]);
        assert_eq!(biv(&r).unwrap(), Multivector::blade(2, 0b11).scaled(-2.0));
    }

    #[test]
    fn sym_skew_examples() {
        let s = op(&[&[1.0, 2.0], &[2.0, -3.0]]);
        let (p, m) = sym_skew_parts(&s).unwrap();
        assert_eq!(p, s);
        assert!(m.matrix().abs().max() == 0.0);
        let k = op(&[&[0.0, 1.0], &[-1.0, 0.0]]);
        let (p, m) = sym_skew_parts(&k).unwrap();
        assert_eq!(m, k);
        assert!(p.matrix().abs().max() == 0.0);
        let t = sample3();
        let (p, m) = sym_skew_parts(&t).unwrap();
        let tm = t.matrix();
        assert_eq!(p.matrix(), &((tm + tm.transpose()) * 0.5));
        assert_eq!(m.matrix(), &((tm - tm.transpose()) * 0.5));
    }
}
