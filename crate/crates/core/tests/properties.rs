//! Property tests. Inputs come from proptest strategies. Reference values
//! come from implementations local to this file, written without bit masks
//! or the library's own oracles.

use extensor_core::laws::{self, Config, LAWS};
use extensor_core::{invariants, operators, Adjoint, GradeSet, Multivector, PqExtensor, Tolerance};
use nalgebra::DMatrix;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = f64> {
    -1.0..1.0f64
}

fn multivector(n: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(coeff(), 1 << n)
        .prop_map(move |c| Multivector::from_coeffs(n, c).unwrap())
}

fn matrix(n: usize) -> impl Strategy<Value = DMatrix<f64>> {
    prop::collection::vec(coeff(), n * n).prop_map(move |c| DMatrix::from_row_slice(n, n, &c))
}

fn dim_and<S, F>(max: usize, f: F) -> impl Strategy<Value = (usize, S::Value)>
where
    S: Strategy,
    F: Fn(usize) -> S + Clone + 'static,
{
    (1..=max).prop_flat_map(move |n| (Just(n), f(n)))
}

/// Blade product of index lists by sorting with adjacent swaps, squaring
/// repeated indices away.
fn ref_blade_product(a: &[usize], b: &[usize]) -> (f64, Vec<usize>) {
    let mut list: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut sign = 1.0;
    let mut swapped = true;
    while swapped {
        swapped = false;
        for i in 0..list.len().saturating_sub(1) {
            if list[i] > list[i + 1] {
                list.swap(i, i + 1);
                sign = -sign;
                swapped = true;
            }
        }
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < list.len() {
        if i + 1 < list.len() && list[i] == list[i + 1] {
            i += 2;
        } else {
            out.push(list[i]);
            i += 1;
        }
    }
    (sign, out)
}

fn indices(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize)
        .filter(|i| mask >> i & 1 == 1)
        .collect()
}

fn ref_clifford(x: &Multivector, y: &Multivector) -> Vec<f64> {
    let n = x.dim();
    let mut out = vec![0.0; 1 << n];
    for (a, &xa) in x.coeffs().iter().enumerate() {
        for (b, &yb) in y.coeffs().iter().enumerate() {
            let (s, idx) = ref_blade_product(&indices(a), &indices(b));
            let m: usize = idx.iter().map(|i| 1 << i).sum();
            out[m] += s * xa * yb;
        }
    }
    out
}

/// Wedge keeps only products of blades with no index in common.
fn ref_wedge(x: &Multivector, y: &Multivector) -> Vec<f64> {
    let n = x.dim();
    let mut out = vec![0.0; 1 << n];
    for (a, &xa) in x.coeffs().iter().enumerate() {
        for (b, &yb) in y.coeffs().iter().enumerate() {
            if a & b == 0 {
                let (s, _) = ref_blade_product(&indices(a), &indices(b));
                out[a | b] += s * xa * yb;
            }
        }
    }
    out
}

/// Cofactor expansion along the first row.
fn ref_det(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    if n == 1 {
        return m[(0, 0)];
    }
    (0..n)
        .map(|j| {
            let minor = m.clone().remove_row(0).remove_column(j);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign * m[(0, j)] * ref_det(&minor)
        })
        .sum()
}

fn close(a: &[f64], b: &[f64]) -> bool {
    Tolerance::default().close_slices(a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clifford_product_matches_reference(
        (_, (x, y)) in dim_and(5, |n| (multivector(n), multivector(n)))
    ) {
        let got = x.clifford_product(&y).unwrap();
        prop_assert!(close(got.coeffs(), &ref_clifford(&x, &y)));
    }

    #[test]
    fn wedge_matches_reference(
        (_, (x, y)) in dim_and(5, |n| (multivector(n), multivector(n)))
    ) {
        let got = x.wedge(&y).unwrap();
        prop_assert!(close(got.coeffs(), &ref_wedge(&x, &y)));
    }

    #[test]
    fn clifford_product_is_associative(
        (_, (x, y, z)) in dim_and(4, |n| (multivector(n), multivector(n), multivector(n)))
    ) {
        let left = x.clifford_product(&y).unwrap().clifford_product(&z).unwrap();
        let right = x.clifford_product(&y.clifford_product(&z).unwrap()).unwrap();
        prop_assert!(close(left.coeffs(), right.coeffs()));
    }

    #[test]
    fn reversion_reverses_products(
        (_, (x, y)) in dim_and(4, |n| (multivector(n), multivector(n)))
    ) {
        let left = x.clifford_product(&y).unwrap().reversion();
        let right = y.reversion().clifford_product(&x.reversion()).unwrap();
        prop_assert!(close(left.coeffs(), right.coeffs()));
    }

    #[test]
    fn determinant_matches_cofactor_expansion((_, m) in dim_and(6, matrix)) {
        let t = PqExtensor::linear_operator(m.clone()).unwrap();
        let d = invariants::det(&t).unwrap();
        prop_assert!(Tolerance::default().close(d, ref_det(&m)));
    }

    #[test]
    fn extension_of_pseudoscalar_scales_by_det((n, m) in dim_and(5, matrix)) {
        let t = PqExtensor::linear_operator(m.clone()).unwrap();
        let top = Multivector::blade(n, (1 << n) - 1);
        let image = operators::extend_apply(&t, &top).unwrap();
        let expected = top.scaled(ref_det(&m));
        prop_assert!(Tolerance::default().close_slices_scaled(image.coeffs(), expected.coeffs(), 1.0));
    }

    #[test]
    fn inverse_agrees_with_lu(seed in any::<u64>(), n in 1..=5usize) {
        let mut g = extensor_core::random::Gen::new(seed);
        let t = g.nonsingular_operator(n);
        let inv = invariants::invert(&t).unwrap();
        let lu = t.matrix().clone().lu().try_inverse().unwrap();
        prop_assert!(close(inv.matrix().as_slice(), lu.as_slice()));
    }

    #[test]
    fn adjoint_is_dual_under_scalar_product(
        (n, (m, x, y)) in dim_and(5, |n| (matrix(n), multivector(n), multivector(n)))
    ) {
        let t = PqExtensor::linear_operator(m).unwrap();
        let ext = operators::extend_matrix(&t).unwrap();
        let adj = ext.adjoint();
        let lhs = x.scalar_product(&adj.apply(&y).unwrap()).unwrap();
        let rhs = ext.apply(&x).unwrap().scalar_product(&y).unwrap();
        let scale = (1usize << n) as f64;
        prop_assert!((lhs - rhs).abs() <= Tolerance::default().bound(scale));
    }

    #[test]
    fn grade_projection_is_idempotent(
        (n, (x, bits)) in dim_and(5, |n| (multivector(n), 0..1u32 << (n + 1)))
    ) {
        let s = GradeSet::from_bits(n, bits);
        let once = x.grade_project(&s).unwrap();
        let twice = once.grade_project(&s).unwrap();
        prop_assert_eq!(once.coeffs(), twice.coeffs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn every_law_holds_for_any_seed(seed in any::<u64>(), n in 1..=4usize) {
        let cfg = Config::new(n, 2);
        for law in LAWS {
            let out = law.run(seed, &cfg);
            prop_assert!(out.passed(), "{} n={}: {:?}", out.name, n, out.verdict);
        }
    }
}

#[test]
fn law_runs_are_deterministic() {
    let cfg = Config::new(3, 3);
    assert_eq!(laws::run_all(9, &cfg), laws::run_all(9, &cfg));
}
