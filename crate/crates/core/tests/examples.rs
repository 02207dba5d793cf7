//! Small worked examples with values checked by hand.

use extensor_core::extensor::{basis, dim_of};
use extensor_core::{
    invariants, operators, oracle, Adjoint, AnyExtensor, ElementaryKExtensor, Error, Frame,
    GeneralExtensor, GradeSet, Involution, Multivector, PqExtensor, SpaceDescriptor, Tolerance,
    Variance,
};
use nalgebra::{dmatrix, DMatrix};

const E1: u32 = 0b01;
const E2: u32 = 0b10;
const E12: u32 = 0b11;

fn mv(dim: usize, terms: &[(u32, f64)]) -> Multivector {
    let mut x = Multivector::zero(dim);
    for &(m, c) in terms {
        x.set(m as _, x.get(m as _) + c);
    }
    x
}

fn blade(dim: usize, m: u32) -> Multivector {
    Multivector::blade(dim, m as _)
}

fn op(m: DMatrix<f64>) -> PqExtensor {
    PqExtensor::linear_operator(m).unwrap()
}

#[track_caller]
fn same(a: &Multivector, b: &Multivector) {
    assert!(
        Tolerance::default().close_slices_scaled(a.coeffs(), b.coeffs(), 1.0),
        "{:?} vs {:?}",
        a.coeffs(),
        b.coeffs()
    );
}

#[track_caller]
fn same_mat(a: &DMatrix<f64>, b: &DMatrix<f64>) {
    assert_eq!(a.shape(), b.shape());
    assert!(
        Tolerance::default().close_slices_scaled(a.as_slice(), b.as_slice(), 1.0),
        "{a} vs {b}"
    );
}

#[test]
fn products_of_basis_blades() {
    let (u1, u2, u12) = (blade(2, E1), blade(2, E2), blade(2, E12));
    same(&u1.wedge(&u2).unwrap(), &u12);
    same(&u1.wedge(&u1).unwrap(), &Multivector::zero(2));
    same(&(&u1 + &u2).wedge(&u2).unwrap(), &u12);

    same(
        &u1.clifford_product(&u1).unwrap(),
        &Multivector::scalar(2, 1.0),
    );
    same(&u1.clifford_product(&u2).unwrap(), &u12);
    same(&u12.clifford_product(&u2).unwrap(), &u1);

    assert_eq!(u12.scalar_product(&u12).unwrap(), 1.0);
    assert_eq!(u1.scalar_product(&u12).unwrap(), 0.0);
    let a = Multivector::vector(&[2.0, 3.0]);
    let b = Multivector::vector(&[1.0, -1.0]);
    assert_eq!(a.scalar_product(&b).unwrap(), -1.0);

    same(&u1.left_contraction(&u12).unwrap(), &u2);
    same(&u2.left_contraction(&u12).unwrap(), &u1.scaled(-1.0));
    let x = mv(2, &[(0, 1.0), (E1, 2.0), (E12, -3.0)]);
    let alpha = Multivector::scalar(2, 2.5);
    same(&alpha.left_contraction(&x).unwrap(), &x.scaled(2.5));
}

#[test]
fn projections_and_involutions() {
    let x = mv(2, &[(0, 1.0), (E1, 1.0), (E12, 1.0)]);
    same(
        &x.grade_project(&GradeSet::single(2, 1)).unwrap(),
        &blade(2, E1),
    );
    same(&x.grade_project(&GradeSet::full(2)).unwrap(), &x);
    same(
        &x.grade_project(&GradeSet::empty(2)).unwrap(),
        &Multivector::zero(2),
    );

    same(&blade(2, E12).reversion(), &blade(2, E12).scaled(-1.0));
    same(
        &blade(2, E1).involution(Involution::GradeInvolution),
        &blade(2, E1).scaled(-1.0),
    );
    let conj = mv(2, &[(0, 1.0), (E1, -1.0), (E12, -1.0)]);
    same(&x.involution(Involution::Conjugation), &conj);
}

#[test]
fn commutator_examples() {
    let x = mv(2, &[(0, 1.0), (E1, 2.0), (E12, -3.0)]);
    same(&x.commutator(&x).unwrap(), &Multivector::zero(2));
    same(
        &blade(2, E12).commutator(&blade(2, E1)).unwrap(),
        &blade(2, E2).scaled(-1.0),
    );
    same(
        &blade(2, E1).commutator(&blade(2, E12)).unwrap(),
        &blade(2, E2),
    );
    let s = Multivector::scalar(2, 4.0);
    same(&s.commutator(&x).unwrap(), &Multivector::zero(2));
}

#[test]
fn reciprocal_frames_and_induced_blades() {
    let tol = Tolerance::default();
    let canonical = Frame::canonical(3);
    assert!(canonical.reciprocal().unwrap().approx_eq(&canonical, &tol));
    assert!(canonical.is_orthonormal(&tol));

    let b = Frame::new(vec![
        Multivector::vector(&[1.0, 0.0]),
        Multivector::vector(&[1.0, 1.0]),
    ])
    .unwrap();
    let r = b.reciprocal().unwrap();
    same(&r.vectors()[0], &Multivector::vector(&[1.0, -1.0]));
    same(&r.vectors()[1], &Multivector::vector(&[0.0, 1.0]));
    same(&b.induced_blade(&[1, 2]).unwrap(), &blade(2, E12));
    same(
        &Frame::canonical(2).induced_blade(&[1, 2]).unwrap(),
        &blade(2, E12),
    );
    same(&b.induced_blade(&[]).unwrap(), &Multivector::scalar(2, 1.0));

    let dependent = Frame::new(vec![
        Multivector::vector(&[1.0, 2.0]),
        Multivector::vector(&[2.0, 4.0]),
    ]);
    assert!(matches!(dependent, Err(Error::SingularFrame)));

    let scaled = Frame::from_rows(&dmatrix![2.0, 0.0; 0.0, 2.0]).unwrap();
    assert!(!scaled.is_orthonormal(&tol));
    let a = std::f64::consts::PI / 7.0;
    let rotated = Frame::from_rows(&dmatrix![a.cos(), a.sin(); -a.sin(), a.cos()]).unwrap();
    assert!(rotated.is_orthonormal(&tol));
}

#[test]
fn applying_extensors() {
    let x = Multivector::vector(&[3.0, 0.0]);
    same(&PqExtensor::identity(2, 1).apply(&x).unwrap(), &x);
    same(
        &PqExtensor::zero(2, 1, 1).apply(&x).unwrap(),
        &Multivector::zero(2),
    );

    let t = PqExtensor::new(2, 1, 2, dmatrix![1.0; 0.0]).unwrap();
    let v = Multivector::vector(&[1.0, 1.0]);
    same(&t.apply(&v).unwrap(), &blade(2, E12));
}

#[test]
fn components_of_simple_extensors() {
    let id = PqExtensor::identity(3, 1);
    let c = id
        .components(&Frame::canonical(3), Variance::Covariant)
        .unwrap();
    same_mat(&c.values, &DMatrix::identity(3, 3));

    let f = Frame::from_rows(&dmatrix![1.0, 2.0, 0.0; 0.0, 1.0, 0.0; 0.5, 0.0, 3.0]).unwrap();
    for variance in [Variance::Covariant, Variance::Contravariant] {
        match id.components(&f, variance).unwrap().reconstruct().unwrap() {
            AnyExtensor::Pq(back) => same_mat(back.matrix(), &DMatrix::identity(3, 3)),
            other => panic!("wrong family {other:?}"),
        }
        let general = GeneralExtensor::identity(3);
        match general
            .components(&f, variance)
            .unwrap()
            .reconstruct()
            .unwrap()
        {
            AnyExtensor::General(back) => same_mat(back.matrix(), &DMatrix::identity(8, 8)),
            other => panic!("wrong family {other:?}"),
        }
    }

    let t = PqExtensor::new(2, 1, 2, dmatrix![1.0; 0.0]).unwrap();
    let c = t
        .components(&Frame::canonical(2), Variance::Covariant)
        .unwrap();
    same_mat(&c.values, &dmatrix![1.0; 0.0]);

    let p = GeneralExtensor::projector(&GradeSet::single(2, 0));
    let c = p
        .components(&Frame::canonical(2), Variance::Covariant)
        .unwrap();
    let mut expected = DMatrix::zeros(4, 4);
    expected[(0, 0)] = 1.0;
    same_mat(&c.values, &expected);
}

#[test]
fn round_trips_through_components() {
    let t = op(dmatrix![0.3, -1.2, 0.5; 2.0, 0.1, -0.7; 0.4, 0.9, 1.1]);
    let f = Frame::from_rows(&dmatrix![1.0, 0.2, 0.0; -0.3, 1.0, 0.5; 0.1, 0.0, 2.0]).unwrap();
    let c = t.components(&f, Variance::Covariant).unwrap();
    match c.reconstruct().unwrap() {
        AnyExtensor::Pq(back) => same_mat(back.matrix(), t.matrix()),
        other => panic!("wrong family {other:?}"),
    }

    let g = GeneralExtensor::new(
        3,
        DMatrix::from_fn(8, 8, |i, j| ((3 * i + 5 * j) % 7) as f64 - 3.0),
    )
    .unwrap();
    let c = g.components(&f, Variance::Contravariant).unwrap();
    match c.reconstruct().unwrap() {
        AnyExtensor::General(back) => same_mat(back.matrix(), g.matrix()),
        other => panic!("wrong family {other:?}"),
    }
}

#[test]
fn elementary_extensors() {
    let components = dmatrix![1.0; 2.0; 3.0; 4.0];
    let t = ElementaryKExtensor::new(2, 2, 0, components).unwrap();
    let (u1, u2) = (blade(2, E1), blade(2, E2));
    assert_eq!(
        t.eval(&[u1.clone(), u2.clone()]).unwrap().scalar_part(),
        2.0
    );
    same(
        &t.eval(&[u1.clone(), Multivector::zero(2)]).unwrap(),
        &Multivector::zero(2),
    );

    let one = ElementaryKExtensor::new(2, 1, 2, dmatrix![1.0; 0.0]).unwrap();
    let pq = PqExtensor::new(2, 1, 2, dmatrix![1.0; 0.0]).unwrap();
    let v = Multivector::vector(&[0.7, -0.2]);
    same(
        &one.eval(std::slice::from_ref(&v)).unwrap(),
        &pq.apply(&v).unwrap(),
    );

    let tol = Tolerance::default();
    let skew = ElementaryKExtensor::new(2, 2, 0, dmatrix![0.0; 1.5; -1.5; 0.0]).unwrap();
    assert!(skew.is_exform(&tol));
    let sym = ElementaryKExtensor::new(2, 2, 0, dmatrix![1.0; 1.0; 1.0; 1.0]).unwrap();
    assert!(!sym.is_exform(&tol));
    assert!(one.is_exform(&tol));
}

#[test]
fn space_dimensions() {
    assert_eq!(
        dim_of(&SpaceDescriptor::Pq { dim: 3, p: 1, q: 1 }).unwrap(),
        9
    );
    assert_eq!(dim_of(&SpaceDescriptor::General { dim: 2 }).unwrap(), 16);
    assert_eq!(
        dim_of(&SpaceDescriptor::Elementary { dim: 2, k: 2, q: 1 }).unwrap(),
        8
    );
    assert_eq!(
        dim_of(&SpaceDescriptor::Exform { dim: 4, k: 2, p: 1 }).unwrap(),
        24
    );
    let f = Frame::canonical(2);
    assert_eq!(
        basis(&SpaceDescriptor::Elementary { dim: 2, k: 2, q: 1 }, &f)
            .unwrap()
            .len(),
        8
    );
}

#[test]
fn extension_examples() {
    let t = op(dmatrix![0.3, -1.2; 2.0, 0.1]);
    same(
        &operators::extend_apply(&t, &Multivector::scalar(2, 5.0)).unwrap(),
        &Multivector::scalar(2, 5.0),
    );
    let x = mv(2, &[(0, 1.0), (E1, 2.0), (E12, -3.0)]);
    same(
        &operators::extend_apply(&PqExtensor::identity(2, 1), &x).unwrap(),
        &x,
    );

    let d = op(dmatrix![2.0, 0.0; 0.0, 3.0]);
    same(
        &operators::extend_apply(&d, &blade(2, E12)).unwrap(),
        &blade(2, E12).scaled(6.0),
    );
    let ext = operators::extend_matrix(&d).unwrap();
    same_mat(
        ext.matrix(),
        &DMatrix::from_diagonal(&nalgebra::dvector![1.0, 2.0, 3.0, 6.0]),
    );
    same_mat(
        operators::extend_matrix(&PqExtensor::identity(3, 1))
            .unwrap()
            .matrix(),
        &DMatrix::identity(8, 8),
    );
}

#[test]
fn adjoint_examples() {
    let s = op(dmatrix![1.0, 2.0; 2.0, -1.0]);
    same_mat(s.adjoint().matrix(), s.matrix());
    let n = op(dmatrix![0.0, 1.0; 0.0, 0.0]);
    same_mat(n.adjoint().matrix(), &dmatrix![0.0, 0.0; 1.0, 0.0]);
    same_mat(n.adjoint().adjoint().matrix(), n.matrix());
}

#[test]
fn generalization_examples() {
    let t = op(dmatrix![0.3, -1.2, 0.5; 2.0, 0.1, -0.7; 0.4, 0.9, 1.1]);
    let alpha = Multivector::scalar(3, 2.0);
    same(
        &operators::generalize_apply(&t, &alpha).unwrap(),
        &Multivector::zero(3),
    );
    let v = Multivector::vector(&[1.0, -2.0, 0.5]);
    same(
        &operators::generalize_apply(&t, &v).unwrap(),
        &t.apply(&v).unwrap(),
    );
    let id = PqExtensor::identity(3, 1);
    same(
        &operators::generalize_apply(&id, &blade(3, E12)).unwrap(),
        &blade(3, E12).scaled(2.0),
    );
}

#[test]
fn bivector_examples() {
    same(
        &operators::biv(&PqExtensor::identity(2, 1)).unwrap(),
        &Multivector::zero(2),
    );
    let s = op(dmatrix![1.0, 2.0; 2.0, -1.0]);
    same(&operators::biv(&s).unwrap(), &Multivector::zero(2));
    let r = op(dmatrix![0.0, 1.0; -1.0, 0.0]);
    same(&operators::biv(&r).unwrap(), &blade(2, E12).scaled(-2.0));
}

#[test]
fn symmetric_and_skew_parts() {
    let s = op(dmatrix![1.0, 2.0; 2.0, -1.0]);
    let (sym, skew) = operators::sym_skew_parts(&s).unwrap();
    same_mat(sym.matrix(), s.matrix());
    same_mat(skew.matrix(), &DMatrix::zeros(2, 2));

    let k = op(dmatrix![0.0, 1.0; -1.0, 0.0]);
    let (sym, skew) = operators::sym_skew_parts(&k).unwrap();
    same_mat(sym.matrix(), &DMatrix::zeros(2, 2));
    same_mat(skew.matrix(), k.matrix());

    let m = dmatrix![0.3, -1.2, 0.5; 2.0, 0.1, -0.7; 0.4, 0.9, 1.1];
    let (sym, skew) = operators::sym_skew_parts(&op(m.clone())).unwrap();
    same_mat(sym.matrix(), &((&m + m.transpose()) * 0.5));
    same_mat(skew.matrix(), &((&m - m.transpose()) * 0.5));
}

#[test]
fn determinants() {
    assert_eq!(invariants::det(&PqExtensor::identity(4, 1)).unwrap(), 1.0);
    let d = op(DMatrix::from_diagonal(&nalgebra::dvector![2.0, 3.0, 4.0]));
    assert!(Tolerance::default().close(invariants::det(&d).unwrap(), 24.0));
    let singular = op(dmatrix![1.0, 2.0; 2.0, 4.0]);
    assert_eq!(invariants::det(&singular).unwrap(), 0.0);
}

#[test]
fn inverses() {
    same_mat(
        invariants::invert(&PqExtensor::identity(3, 1))
            .unwrap()
            .matrix(),
        &DMatrix::identity(3, 3),
    );
    let d = op(dmatrix![2.0, 0.0; 0.0, 3.0]);
    same_mat(
        invariants::invert(&d).unwrap().matrix(),
        &dmatrix![0.5, 0.0; 0.0, 1.0 / 3.0],
    );
    let collapse = op(dmatrix![1.0, 0.0; 1.0, 0.0]);
    assert!(matches!(
        invariants::invert(&collapse),
        Err(Error::SingularExtensor { .. })
    ));
}

#[test]
fn changing_basis_examples() {
    let e = Frame::from_rows(&dmatrix![1.0, 0.2, 0.0; -0.3, 1.0, 0.5; 0.1, 0.0, 2.0]).unwrap();
    same_mat(
        invariants::changing_basis(&e, &e).unwrap().matrix(),
        &DMatrix::identity(3, 3),
    );

    let o = Frame::canonical(3);
    let doubled = Frame::from_rows(&(DMatrix::identity(3, 3) * 2.0)).unwrap();
    let eps = invariants::changing_basis(&o, &doubled).unwrap();
    same_mat(eps.matrix(), &(DMatrix::identity(3, 3) * 2.0));
    same_mat(
        invariants::star(&eps).unwrap().matrix(),
        &(DMatrix::identity(3, 3) * 0.5),
    );

    let e2 = Frame::from_rows(&dmatrix![0.5, 1.0, 0.0; 0.0, -1.0, 1.0; 1.0, 0.0, 1.0]).unwrap();
    let eps = invariants::changing_basis(&e, &e2).unwrap();
    for (ek, ek2) in e.vectors().iter().zip(e2.vectors()) {
        same(&eps.apply(ek).unwrap(), ek2);
    }
}

#[test]
fn frame_transport_examples() {
    let tol = Tolerance::default();
    let b = Frame::from_rows(&dmatrix![1.0, 0.5; 0.0, 1.0]).unwrap();
    let (e, r) = invariants::frame_transport(&PqExtensor::identity(2, 1), &b).unwrap();
    assert!(e.approx_eq(&b, &tol));
    assert!(r.approx_eq(&b.reciprocal().unwrap(), &tol));

    let a = std::f64::consts::PI / 5.0;
    let rot = op(dmatrix![a.cos(), a.sin(); -a.sin(), a.cos()]);
    let (e, _) = invariants::frame_transport(&rot, &Frame::canonical(2)).unwrap();
    assert!(e.is_orthonormal(&tol));

    let d = op(dmatrix![2.0, 0.0; 0.0, 3.0]);
    let (e, r) = invariants::frame_transport(&d, &Frame::canonical(2)).unwrap();
    assert!(e.approx_eq(
        &Frame::from_rows(&dmatrix![2.0, 0.0; 0.0, 3.0]).unwrap(),
        &tol
    ));
    assert!(r.approx_eq(
        &Frame::from_rows(&dmatrix![0.5, 0.0; 0.0, 1.0 / 3.0]).unwrap(),
        &tol
    ));
}

#[test]
fn oracle_examples() {
    assert_eq!(oracle::oracle_det(&DMatrix::identity(3, 3)).unwrap(), 1.0);
    assert_eq!(
        oracle::oracle_det(&dmatrix![2.0, 0.0; 0.0, 3.0]).unwrap(),
        6.0
    );
    assert_eq!(
        oracle::oracle_det(&dmatrix![0.0, 1.0; 1.0, 0.0]).unwrap(),
        -1.0
    );

    same_mat(
        &oracle::oracle_inverse(&DMatrix::identity(3, 3)).unwrap(),
        &DMatrix::identity(3, 3),
    );
    same_mat(
        &oracle::oracle_inverse(&dmatrix![2.0, 0.0; 0.0, 3.0]).unwrap(),
        &dmatrix![0.5, 0.0; 0.0, 1.0 / 3.0],
    );
    same_mat(
        &oracle::oracle_inverse(&dmatrix![1.0, 1.0; 0.0, 1.0]).unwrap(),
        &dmatrix![1.0, -1.0; 0.0, 1.0],
    );

    let m = dmatrix![0.3, -1.2, 0.5; 2.0, 0.1, -0.7; 0.4, 0.9, 1.1];
    same_mat(&oracle::oracle_outermorphism_minor(&m, 1).unwrap(), &m);
    let top = oracle::oracle_outermorphism_minor(&m, 3).unwrap();
    same_mat(&top, &dmatrix![oracle::oracle_det(&m).unwrap()]);
    let d = DMatrix::from_diagonal(&nalgebra::dvector![2.0, 3.0, 4.0]);
    same_mat(
        &oracle::oracle_outermorphism_minor(&d, 2).unwrap(),
        &DMatrix::from_diagonal(&nalgebra::dvector![6.0, 8.0, 12.0]),
    );
}
