//! Executable catalogue of the algebraic laws the library must satisfy.
//!
//! Each law draws its own random inputs from a stream forked off the suite
//! seed, so outcomes do not depend on the order laws are run in.

use nalgebra::DMatrix;

use crate::blade::{self, Mask};
use crate::extensor::{
    basis, dim_of, AnyExtensor, GeneralExtensor, PqExtensor, SpaceDescriptor, Variance,
};
use crate::frame::Frame;
use crate::invariants::{self, Pseudoscalar};
use crate::multivector::{Involution, Multivector};
use crate::operators::{self, Adjoint, FrameFormula};
use crate::oracle;
use crate::random::Gen;
use crate::tolerance::Tolerance;

/// Dimensions up to which blade-pair checks run exhaustively.
pub const EXHAUSTIVE_DIM: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub dim: usize,
    pub trials: usize,
    pub tol: Tolerance,
}

impl Config {
    pub fn new(dim: usize, trials: usize) -> Self {
        Config {
            dim,
            trials,
            tol: Tolerance::default(),
        }
    }

    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        self.tol = tol;
        self
    }
}

pub type Verdict = std::result::Result<(), String>;

pub struct Law {
    pub name: &'static str,
    pub summary: &'static str,
    check: fn(&mut Gen, &Config) -> Verdict,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub name: &'static str,
    pub summary: &'static str,
    pub verdict: Verdict,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.verdict.is_ok()
    }
}

impl Law {
    pub const fn new(
        name: &'static str,
        summary: &'static str,
        check: fn(&mut Gen, &Config) -> Verdict,
    ) -> Self {
        Law {
            name,
            summary,
            check,
        }
    }

    pub fn run(&self, seed: u64, cfg: &Config) -> Outcome {
        let mut g = Gen::fork(seed, self.name);
        Outcome {
            name: self.name,
            summary: self.summary,
            verdict: (self.check)(&mut g, cfg),
        }
    }
}

pub fn find(name: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.name == name)
}

pub fn run_all(seed: u64, cfg: &Config) -> Vec<Outcome> {
    LAWS.iter().map(|l| l.run(seed, cfg)).collect()
}

trait Ctx<T> {
    fn ctx(self, what: &str) -> std::result::Result<T, String>;
}

impl<T> Ctx<T> for crate::Result<T> {
    fn ctx(self, what: &str) -> std::result::Result<T, String> {
        self.map_err(|e| format!("{what}: {e}"))
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn same_mv(tol: &Tolerance, a: &Multivector, b: &Multivector, what: &str) -> Verdict {
    ensure(tol.close_slices(a.coeffs(), b.coeffs()), || {
        format!(
            "{what}: multivectors differ by {:.3e}",
            crate::tolerance::max_abs_diff(a.coeffs(), b.coeffs())
        )
    })
}

fn same_mat(tol: &Tolerance, a: &DMatrix<f64>, b: &DMatrix<f64>, what: &str) -> Verdict {
    if a.shape() != b.shape() {
        return Err(format!(
            "{what}: shapes {:?} and {:?}",
            a.shape(),
            b.shape()
        ));
    }
    ensure(tol.close_slices(a.as_slice(), b.as_slice()), || {
        format!(
            "{what}: matrices differ by {:.3e}",
            crate::tolerance::max_abs_diff(a.as_slice(), b.as_slice())
        )
    })
}

fn same_scalar(tol: &Tolerance, a: f64, b: f64, what: &str) -> Verdict {
    ensure(tol.close(a, b), || format!("{what}: {a:e} vs {b:e}"))
}

fn all_blades(n: usize) -> impl Iterator<Item = Mask> {
    0..(1 as Mask) << n
}

fn blades_of_grade(n: usize, k: usize) -> Vec<Multivector> {
    blade::table(n)
        .of_grade(k)
        .iter()
        .map(|&m| Multivector::blade(n, m))
        .collect()
}

fn involutions() -> [Involution; 3] {
    Involution::ALL
}

// ---- multivector algebra ----

fn contraction_duality(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let (x, y, a) = (g.multivector(n), g.multivector(n), g.vector(n));
        let lhs = x
            .scalar_product(&a.left_contraction(&y).ctx("contract")?)
            .ctx("dot")?;
        let rhs = a.wedge(&x).ctx("wedge")?.scalar_product(&y).ctx("dot")?;
        same_scalar(&c.tol, lhs, rhs, "X·(a⌟Y) = (a∧X)·Y")?;
        let lhs = x.scalar_product(&a.wedge(&y).ctx("wedge")?).ctx("dot")?;
        let rhs = a
            .left_contraction(&x)
            .ctx("contract")?
            .scalar_product(&y)
            .ctx("dot")?;
        same_scalar(&c.tol, lhs, rhs, "X·(a∧Y) = (a⌟X)·Y")?;
    }
    Ok(())
}

fn clifford_of_vectors(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let (a, b) = (g.vector(n), g.vector(n));
        let ab = a.clifford_product(&b).ctx("clifford")?;
        let sum = &Multivector::scalar(n, a.scalar_product(&b).ctx("dot")?)
            + &a.wedge(&b).ctx("wedge")?;
        ensure(ab == sum, || "ab differs from a·b + a∧b".into())?;
    }
    Ok(())
}

fn commutator_derivation(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    type Product = fn(&Multivector, &Multivector) -> crate::Result<Multivector>;
    let products: [(&str, Product); 3] = [
        ("∧", Multivector::wedge),
        ("Clifford", Multivector::clifford_product),
        ("⌟", Multivector::left_contraction),
    ];
    for _ in 0..c.trials {
        let b = g.homogeneous(n, 2.min(n));
        let (x, y) = (g.multivector(n), g.multivector(n));
        for (name, prod) in products {
            let lhs = b.commutator(&prod(&x, &y).ctx(name)?).ctx("commutator")?;
            let rhs = &prod(&b.commutator(&x).ctx("commutator")?, &y).ctx(name)?
                + &prod(&x, &b.commutator(&y).ctx("commutator")?).ctx(name)?;
            same_mv(&c.tol, &lhs, &rhs, &format!("B×(X{name}Y)"))?;
        }
    }
    Ok(())
}

// ---- projectors ----

fn projector_intersection(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let x = g.multivector(n);
        let (s1, s2) = (g.grade_set(n), g.grade_set(n));
        let lhs = x
            .grade_project(&s1)
            .ctx("project")?
            .grade_project(&s2)
            .ctx("project")?;
        let rhs = x.grade_project(&s1.intersection(&s2)).ctx("project")?;
        ensure(lhs == rhs, || {
            "nested projection differs from intersection".into()
        })?;
    }
    Ok(())
}

fn projector_union(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let x = g.multivector(n);
        let (s1, s2) = g.disjoint_grade_sets(n);
        let lhs = &x.grade_project(&s1).ctx("project")? + &x.grade_project(&s2).ctx("project")?;
        let rhs = x.grade_project(&s1.union(&s2)).ctx("project")?;
        ensure(lhs == rhs, || {
            "sum of projections differs from union".into()
        })?;
        let as_operator = GeneralExtensor::projector(&s1.union(&s2))
            .apply(&x)
            .ctx("apply")?;
        ensure(as_operator == rhs, || "projector extensor disagrees".into())?;
    }
    Ok(())
}

fn projector_symmetry(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let (x, y) = (g.multivector(n), g.multivector(n));
        let s = g.grade_set(n);
        let lhs = x
            .grade_project(&s)
            .ctx("project")?
            .scalar_product(&y)
            .ctx("dot")?;
        let rhs = x
            .scalar_product(&y.grade_project(&s).ctx("project")?)
            .ctx("dot")?;
        same_scalar(&c.tol, lhs, rhs, "⟨X⟩_S·Y = X·⟨Y⟩_S")?;
    }
    Ok(())
}

// ---- frames and oracles ----

fn frame_laws(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let f = g.frame(n);
        let r = f.reciprocal().ctx("reciprocal")?;
        ensure(
            f.approx_eq(&r.reciprocal().ctx("reciprocal")?, &c.tol),
            || "double reciprocal differs from the frame".into(),
        )?;
        let v = g.vector(n);
        let expanded = Multivector::linear_combination(
            n,
            r.vectors()
                .iter()
                .map(|ek| v.dot_unchecked(ek))
                .zip(f.vectors()),
        );
        same_mv(&c.tol, &expanded, &v, "Σ (v·e^k) e_k = v")?;
        let down = f.induced_blades();
        let up = r.induced_blades();
        for j in all_blades(n) {
            for i in all_blades(n) {
                let expected = if i == j { 1.0 } else { 0.0 };
                let got = down[j as usize].dot_unchecked(&up[i as usize]);
                ensure((got - expected).abs() <= c.tol.bound(1.0), || {
                    format!("e_J·e^I = {got} for J={j:b}, I={i:b}")
                })?;
            }
        }
    }
    Ok(())
}

fn cauchy_binet(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim.min(oracle::MAX_LEIBNIZ);
    for _ in 0..c.trials {
        let (a, b) = (g.matrix(n, n), g.matrix(n, n));
        for p in 0..=n {
            let ab = oracle::oracle_outermorphism_minor(&(&a * &b), p).ctx("minor")?;
            let prod = oracle::oracle_outermorphism_minor(&a, p).ctx("minor")?
                * oracle::oracle_outermorphism_minor(&b, p).ctx("minor")?;
            same_mat(&c.tol, &ab, &prod, &format!("compound of AB, p={p}"))?;
        }
    }
    Ok(())
}

// ---- extension ----

fn e1_grade_preserving(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        for m in all_blades(n) {
            let image = operators::extend_apply(&t, &Multivector::blade(n, m)).ctx("extend")?;
            let k = blade::grade(m);
            ensure(image.is_homogeneous(k, 0.0), || {
                format!("image of blade {m:b} leaves grade {k}")
            })?;
        }
    }
    Ok(())
}

fn e2_generators(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        let alpha = Multivector::scalar(n, g.coeff());
        ensure(
            operators::extend_apply(&t, &alpha).ctx("extend")? == alpha,
            || "scalars are not fixed".into(),
        )?;
        let v = g.vector(n);
        same_mv(
            &c.tol,
            &operators::extend_apply(&t, &v).ctx("extend")?,
            &t.apply(&v).ctx("apply")?,
            "vectors",
        )?;
        let k = 1 + g.below(n);
        let vs: Vec<Multivector> = (0..k).map(|_| g.vector(n)).collect();
        let wedge = vs
            .iter()
            .fold(Multivector::scalar(n, 1.0), |acc, v| acc.wedge_unchecked(v));
        let images = vs.iter().fold(Multivector::scalar(n, 1.0), |acc, v| {
            acc.wedge_unchecked(&t.apply_unchecked(v))
        });
        same_mv(
            &c.tol,
            &operators::extend_apply(&t, &wedge).ctx("extend")?,
            &images,
            "simple k-vectors",
        )?;
    }
    Ok(())
}

fn e3_outermorphism(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        let (x, y) = (g.multivector(n), g.multivector(n));
        let lhs = operators::extend_apply(&t, &x.wedge(&y).ctx("wedge")?).ctx("extend")?;
        let rhs = operators::extend_apply(&t, &x)
            .ctx("extend")?
            .wedge(&operators::extend_apply(&t, &y).ctx("extend")?)
            .ctx("wedge")?;
        same_mv(&c.tol, &lhs, &rhs, "t̲(X∧Y) = t̲(X)∧t̲(Y)")?;
    }
    Ok(())
}

fn e4_composition(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let (s, t) = (g.operator(n), g.operator(n));
        let lhs = operators::extend_matrix(&s.compose(&t).ctx("compose")?).ctx("extend")?;
        let rhs = operators::extend_matrix(&s)
            .ctx("extend")?
            .compose(&operators::extend_matrix(&t).ctx("extend")?)
            .ctx("compose")?;
        same_mat(&c.tol, lhs.matrix(), rhs.matrix(), "extension of s∘t")?;
    }
    Ok(())
}

fn e5_inverse(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.nonsingular_operator(n);
        let ext = operators::extend_matrix(&t).ctx("extend")?;
        let ext_inv =
            operators::extend_matrix(&invariants::invert(&t).ctx("invert")?).ctx("extend")?;
        let oracle_inv = oracle::oracle_inverse(ext.matrix()).ctx("oracle inverse")?;
        same_mat(
            &c.tol,
            ext_inv.matrix(),
            &oracle_inv,
            "extension of the inverse",
        )?;
        let id = GeneralExtensor::identity(n);
        same_mat(
            &c.tol,
            ext.compose(&ext_inv).ctx("compose")?.matrix(),
            id.matrix(),
            "t̲∘t̲⁻¹",
        )?;
    }
    Ok(())
}

fn e6_frame_independence(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let f = g.frame(n);
        let t = g.operator(n);
        let x = g.multivector(n);
        let reference = operators::extend_apply(&t, &x).ctx("extend")?;
        for formula in [FrameFormula::Covariant, FrameFormula::Contravariant] {
            let got =
                operators::extend_apply_in_frame(&t, &x, &f, formula).ctx("extend in frame")?;
            same_mv(
                &c.tol,
                &got,
                &reference,
                &format!("{formula:?} frame formula"),
            )?;
        }
    }
    Ok(())
}

fn e_compound_blocks(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim.min(oracle::MAX_LEIBNIZ);
    for _ in 0..c.trials {
        let t = g.operator(n);
        let ext = operators::extend_matrix(&t).ctx("extend")?;
        for p in 0..=n {
            let minors = oracle::oracle_outermorphism_minor(t.matrix(), p).ctx("minor")?;
            same_mat(
                &c.tol,
                ext.block(p, p).matrix(),
                &minors,
                &format!("grade-{p} block"),
            )?;
            for q in (0..=n).filter(|&q| q != p) {
                ensure(ext.block(p, q).matrix().iter().all(|&v| v == 0.0), || {
                    format!("nonzero block {p}→{q}")
                })?;
            }
        }
    }
    Ok(())
}

fn contraction_identity(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        let adj = t.adjoint();
        let (x, y) = (g.multivector(n), g.multivector(n));
        let lhs = x
            .left_contraction(&operators::extend_apply(&t, &y).ctx("extend")?)
            .ctx("contract")?;
        let inner = operators::extend_apply(&adj, &x)
            .ctx("extend")?
            .left_contraction(&y)
            .ctx("contract")?;
        let rhs = operators::extend_apply(&t, &inner).ctx("extend")?;
        same_mv(&c.tol, &lhs, &rhs, "X⌟t̲(Y) = t̲(t̲†(X)⌟Y)")?;
    }
    Ok(())
}

// ---- adjoint ----

fn check_pq_duality(
    c: &Config,
    t: &PqExtensor,
    adj: &PqExtensor,
    xs: &[Multivector],
    ys: &[Multivector],
) -> Verdict {
    for x in xs {
        let tx = t.apply(x).ctx("apply")?;
        for y in ys {
            let lhs = x.dot_unchecked(&adj.apply(y).ctx("apply adjoint")?);
            same_scalar(&c.tol, lhs, tx.dot_unchecked(y), "X·t†(Y) = t(X)·Y")?;
        }
    }
    Ok(())
}

fn check_general_duality(
    c: &Config,
    t: &GeneralExtensor,
    adj: &GeneralExtensor,
    xs: &[Multivector],
    ys: &[Multivector],
) -> Verdict {
    for x in xs {
        let tx = t.apply(x).ctx("apply")?;
        for y in ys {
            let lhs = x.dot_unchecked(&adj.apply(y).ctx("apply adjoint")?);
            same_scalar(&c.tol, lhs, tx.dot_unchecked(y), "X·T†(Y) = T(X)·Y")?;
        }
    }
    Ok(())
}

fn adjoint_duality(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    let exhaustive = n <= EXHAUSTIVE_DIM;
    for _ in 0..c.trials {
        let f = g.frame(n);
        let t = g.general_extensor(n);
        let xs: Vec<Multivector> = if exhaustive {
            all_blades(n).map(|m| Multivector::blade(n, m)).collect()
        } else {
            (0..4).map(|_| g.multivector(n)).collect()
        };
        let ys: Vec<Multivector> = if exhaustive {
            xs.clone()
        } else {
            (0..4).map(|_| g.multivector(n)).collect()
        };
        check_general_duality(c, &t, &t.adjoint(), &xs, &ys)?;
        for formula in [FrameFormula::Covariant, FrameFormula::Contravariant] {
            let adj =
                operators::general_adjoint_in_frame(&t, &f, None, formula).ctx("frame adjoint")?;
            check_general_duality(c, &t, &adj, &xs, &ys)?;
        }

        let (p, q) = (g.below(n + 1), g.below(n + 1));
        let t = g.pq_extensor(n, p, q);
        let (xs, ys) = if exhaustive {
            (blades_of_grade(n, p), blades_of_grade(n, q))
        } else {
            (
                (0..4).map(|_| g.homogeneous(n, p)).collect(),
                (0..4).map(|_| g.homogeneous(n, q)).collect(),
            )
        };
        check_pq_duality(c, &t, &t.adjoint(), &xs, &ys)?;
    }
    Ok(())
}

fn adjoint_composition(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let (p, q, r) = (g.below(n + 1), g.below(n + 1), g.below(n + 1));
        let t = g.pq_extensor(n, p, q);
        let u = g.pq_extensor(n, q, r);
        let lhs = u.compose(&t).ctx("compose")?.adjoint();
        let rhs = t.adjoint().compose(&u.adjoint()).ctx("compose")?;
        same_mat(&c.tol, lhs.matrix(), rhs.matrix(), "(u∘t)† = t†∘u†")?;
        let (t, u) = (g.general_extensor(n), g.general_extensor(n));
        let lhs = u.compose(&t).ctx("compose")?.adjoint();
        let rhs = t.adjoint().compose(&u.adjoint()).ctx("compose")?;
        same_mat(&c.tol, lhs.matrix(), rhs.matrix(), "(U∘T)† = T†∘U†")?;
    }
    Ok(())
}

fn adjoint_inverse(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.nonsingular_operator(n);
        let star = invariants::star(&t).ctx("star")?;
        let other = invariants::invert(&t).ctx("invert")?.adjoint();
        same_mat(&c.tol, star.matrix(), other.matrix(), "(t†)⁻¹ = (t⁻¹)†")?;
    }
    Ok(())
}

fn adjoint_extension(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        let lhs = operators::extend_matrix(&t.adjoint()).ctx("extend")?;
        let rhs = operators::extend_matrix(&t)
            .ctx("extend")?
            .matrix()
            .transpose();
        same_mat(&c.tol, lhs.matrix(), &rhs, "extension of t†")?;
    }
    Ok(())
}

fn adjoint_frame_formulas(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let f = g.frame(n);
        let (p, q) = (g.below(n + 1), g.below(n + 1));
        let t = g.pq_extensor(n, p, q);
        for formula in [FrameFormula::Covariant, FrameFormula::Contravariant] {
            let adj = operators::adjoint_in_frame(&t, &f, formula).ctx("frame adjoint")?;
            same_mat(
                &c.tol,
                adj.matrix(),
                t.adjoint().matrix(),
                &format!("{formula:?} homogeneous adjoint"),
            )?;
        }
        let t = g.general_extensor(n);
        let s = g.grade_set(n);
        let restricted =
            operators::general_adjoint_in_frame(&t, &f, Some(&s), FrameFormula::Covariant)
                .ctx("frame adjoint")?;
        let expected = GeneralExtensor::projector(&s)
            .compose(&t.adjoint())
            .ctx("compose")?;
        same_mat(
            &c.tol,
            restricted.matrix(),
            expected.matrix(),
            "adjoint with restricted domain",
        )?;
    }
    Ok(())
}

// ---- generalization ----

fn g1_grade_preserving(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        for m in all_blades(n) {
            let image =
                operators::generalize_apply(&t, &Multivector::blade(n, m)).ctx("generalize")?;
            let k = blade::grade(m);
            ensure(image.is_homogeneous(k, 0.0), || {
                format!("generalized image of blade {m:b} leaves grade {k}")
            })?;
        }
    }
    Ok(())
}

fn g2_involutions(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        let x = g.multivector(n);
        for inv in involutions() {
            let lhs = operators::generalize_apply(&t, &x.involution(inv)).ctx("generalize")?;
            let rhs = operators::generalize_apply(&t, &x)
                .ctx("generalize")?
                .involution(inv);
            same_mv(&c.tol, &lhs, &rhs, &format!("{inv:?}"))?;
        }
    }
    Ok(())
}

fn g3_derivation(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        let alpha = Multivector::scalar(n, g.coeff());
        ensure(
            operators::generalize_apply(&t, &alpha)
                .ctx("generalize")?
                .is_zero(),
            || "scalars are not annihilated".into(),
        )?;
        let v = g.vector(n);
        same_mv(
            &c.tol,
            &operators::generalize_apply(&t, &v).ctx("generalize")?,
            &t.apply(&v).ctx("apply")?,
            "vectors",
        )?;
        let (x, y) = (g.multivector(n), g.multivector(n));
        let lhs = operators::generalize_apply(&t, &x.wedge(&y).ctx("wedge")?).ctx("generalize")?;
        let rhs = &operators::generalize_apply(&t, &x)
            .ctx("generalize")?
            .wedge(&y)
            .ctx("wedge")?
            + &x.wedge(&operators::generalize_apply(&t, &y).ctx("generalize")?)
                .ctx("wedge")?;
        same_mv(&c.tol, &lhs, &rhs, "Leibniz rule")?;
    }
    Ok(())
}

fn g4_adjoint(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        let lhs = operators::generalize_matrix(&t)
            .ctx("generalize")?
            .adjoint();
        let rhs = operators::generalize_matrix(&t.adjoint()).ctx("generalize")?;
        same_mat(
            &c.tol,
            lhs.matrix(),
            rhs.matrix(),
            "adjoint of the generalized",
        )?;
    }
    Ok(())
}

fn g5_parts(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        let (plus, minus) = operators::sym_skew_parts(&t).ctx("parts")?;
        let big = operators::generalize_matrix(&t).ctx("generalize")?;
        let m = big.matrix();
        let big_plus = (m + m.transpose()) * 0.5;
        let big_minus = (m - m.transpose()) * 0.5;
        same_mat(
            &c.tol,
            &big_plus,
            operators::generalize_matrix(&plus)
                .ctx("generalize")?
                .matrix(),
            "symmetric part",
        )?;
        same_mat(
            &c.tol,
            &big_minus,
            operators::generalize_matrix(&minus)
                .ctx("generalize")?
                .matrix(),
            "skew part",
        )?;
    }
    Ok(())
}

fn g6_bivector(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.operator(n);
        let (plus, minus) = operators::sym_skew_parts(&t).ctx("parts")?;
        let b = operators::biv(&t).ctx("biv")?;
        ensure(b.is_homogeneous(2, 0.0), || {
            "biv[t] is not a bivector".into()
        })?;
        let half_b = b.scaled(0.5);
        let x = g.multivector(n);
        same_mv(
            &c.tol,
            &operators::generalize_apply(&minus, &x).ctx("generalize")?,
            &half_b.commutator(&x).ctx("commutator")?,
            "t̰₋(X) = ½biv[t]×X",
        )?;
        let a = g.vector(n);
        same_mv(
            &c.tol,
            &minus.apply(&a).ctx("apply")?,
            &half_b.commutator(&a).ctx("commutator")?,
            "t₋(a) = ½biv[t]×a",
        )?;
        let sym_biv = operators::biv(&plus).ctx("biv")?;
        ensure(sym_biv.max_abs() <= c.tol.bound(t.matrix().amax()), || {
            "bivector of the symmetric part is nonzero".into()
        })?;
    }
    Ok(())
}

fn g7_skew_derivation(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    type Product = fn(&Multivector, &Multivector) -> crate::Result<Multivector>;
    fn scalar(x: &Multivector, y: &Multivector) -> crate::Result<Multivector> {
        Ok(Multivector::scalar(x.dim(), x.scalar_product(y)?))
    }
    let products: [(&str, Product); 4] = [
        ("∧", Multivector::wedge),
        ("·", scalar),
        ("⌟", Multivector::left_contraction),
        ("Clifford", Multivector::clifford_product),
    ];
    for _ in 0..c.trials {
        let (_, minus) = operators::sym_skew_parts(&g.operator(n)).ctx("parts")?;
        let gen = |x: &Multivector| operators::generalize_apply(&minus, x).ctx("generalize");
        let (x, y) = (g.multivector(n), g.multivector(n));
        for (name, prod) in products {
            let lhs = gen(&prod(&x, &y).ctx(name)?)?;
            let rhs = &prod(&gen(&x)?, &y).ctx(name)? + &prod(&x, &gen(&y)?).ctx(name)?;
            same_mv(&c.tol, &lhs, &rhs, &format!("t̰₋(X{name}Y)"))?;
        }
    }
    Ok(())
}

fn g7_antisymmetry(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let (_, minus) = operators::sym_skew_parts(&g.operator(n)).ctx("parts")?;
        let (x, y) = (g.multivector(n), g.multivector(n));
        let gx = operators::generalize_apply(&minus, &x).ctx("generalize")?;
        let gy = operators::generalize_apply(&minus, &y).ctx("generalize")?;
        let sum = gx.dot_unchecked(&y) + x.dot_unchecked(&gy);
        let scale = gx.norm() * y.norm() + x.norm() * gy.norm();
        ensure(sum.abs() <= c.tol.bound(scale), || {
            format!("t̰₋(X)·Y + X·t̰₋(Y) = {sum:e}")
        })?;
    }
    Ok(())
}

fn generalization_frames(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let f = g.frame(n);
        let t = g.operator(n);
        let x = g.multivector(n);
        let reference = operators::generalize_apply(&t, &x).ctx("generalize")?;
        for formula in [FrameFormula::Covariant, FrameFormula::Contravariant] {
            let got = operators::generalize_apply_in_frame(&t, &x, &f, formula)
                .ctx("generalize in frame")?;
            same_mv(
                &c.tol,
                &got,
                &reference,
                &format!("{formula:?} frame formula"),
            )?;
        }
        same_mv(
            &c.tol,
            &operators::biv_in_frame(&t, &f).ctx("biv")?,
            &operators::biv(&t).ctx("biv")?,
            "biv[t] in a frame",
        )?;
    }
    Ok(())
}

// ---- determinant and inversion ----

fn det_oracle(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim.min(oracle::MAX_LEIBNIZ);
    for _ in 0..c.trials {
        let t = g.operator(n);
        let d = invariants::det(&t).ctx("det")?;
        let o = oracle::oracle_det(t.matrix()).ctx("oracle det")?;
        let scale: f64 = t.matrix().row_iter().map(|r| r.norm()).product();
        ensure((d - o).abs() <= c.tol.bound(scale.max(d.abs())), || {
            format!("det {d:e} vs oracle {o:e}")
        })?;
    }
    Ok(())
}

fn d1_product(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let (t, u) = (g.operator(n), g.operator(n));
        let lhs = invariants::det(&u.compose(&t).ctx("compose")?).ctx("det")?;
        let rhs = invariants::det(&u).ctx("det")? * invariants::det(&t).ctx("det")?;
        let scale: f64 = [&t, &u]
            .iter()
            .flat_map(|m| m.matrix().row_iter().map(|r| r.norm()).collect::<Vec<_>>())
            .product();
        ensure(
            (lhs - rhs).abs() <= c.tol.bound(scale.max(lhs.abs())),
            || format!("det(u∘t) {lhs:e} vs det(u)det(t) {rhs:e}"),
        )?;
    }
    Ok(())
}

fn d2_inverse(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.nonsingular_operator(n);
        let d = invariants::det(&t).ctx("det")?;
        let di = invariants::det(&invariants::invert(&t).ctx("invert")?).ctx("det")?;
        same_scalar(&c.tol, di, 1.0 / d, "det(t⁻¹) = 1/det(t)")?;
    }
    Ok(())
}

fn d3_adjoint(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.nonsingular_operator(n);
        let lhs = invariants::det(&t.adjoint()).ctx("det")?;
        same_scalar(
            &c.tol,
            lhs,
            invariants::det(&t).ctx("det")?,
            "det(t†) = det(t)",
        )?;
    }
    Ok(())
}

fn det_frames(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.nonsingular_operator(n);
        let f = g.frame(n);
        let d = invariants::det(&t).ctx("det")?;
        for formula in [FrameFormula::Covariant, FrameFormula::Contravariant] {
            let df = invariants::det_in_frame(&t, &f, formula).ctx("det in frame")?;
            same_scalar(&c.tol, df, d, &format!("{formula:?} frame determinant"))?;
        }
        // The frame-free ratio for a pseudoscalar that is not normalized.
        let i = f
            .induced_blade(&(1..=n).collect::<Vec<_>>())
            .ctx("pseudoscalar")?;
        let ratio = operators::extend_apply(&t, &i)
            .ctx("extend")?
            .dot_unchecked(&i)
            / i.dot_unchecked(&i);
        same_scalar(&c.tol, ratio, d, "t̲(I)·I / I·I")?;
        let ps = Pseudoscalar::new(i).ctx("pseudoscalar")?;
        same_scalar(
            &c.tol,
            invariants::det_with(&t, &ps).ctx("det")?,
            d,
            "determinant through a pseudoscalar",
        )?;
    }
    Ok(())
}

fn det_pseudoscalar_independence(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    let unit = Pseudoscalar::unit(n);
    let seven = Pseudoscalar::scaled(n, 7.0).ctx("pseudoscalar")?;
    for _ in 0..c.trials {
        let t = g.nonsingular_operator(n);
        let other = Pseudoscalar::scaled(n, 10.0 * g.coeff()).ctx("pseudoscalar")?;
        let d1 = invariants::det_with(&t, &unit).ctx("det")?;
        for i in [&seven, &other] {
            let d = invariants::det_with(&t, i).ctx("det")?;
            ensure(d.to_bits() == d1.to_bits(), || {
                format!("det through I {d1:e} vs scaled I {d:e}")
            })?;
        }
        let inv1 = invariants::invert_with(&t, &unit).ctx("invert")?;
        for i in [&seven, &other] {
            ensure(
                invariants::invert_with(&t, i).ctx("invert")? == inv1,
                || "inverse depends on the pseudoscalar".into(),
            )?;
        }
    }
    Ok(())
}

fn inversion_oracle(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let t = g.nonsingular_operator(n);
        let inv = invariants::invert(&t).ctx("invert")?;
        let oracle_inv = oracle::oracle_inverse(t.matrix()).ctx("oracle inverse")?;
        same_mat(&c.tol, inv.matrix(), &oracle_inv, "inverse vs oracle")?;
        let id = PqExtensor::identity(n, 1);
        same_mat(
            &c.tol,
            inv.compose(&t).ctx("compose")?.matrix(),
            id.matrix(),
            "t⁻¹∘t",
        )?;
        same_mat(
            &c.tol,
            t.compose(&inv).ctx("compose")?.matrix(),
            id.matrix(),
            "t∘t⁻¹",
        )?;
    }
    Ok(())
}

// ---- frame transport ----

fn transport_reciprocity(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let f = g.nonsingular_operator(n);
        let b = g.frame(n);
        let (e, r) = invariants::frame_transport(&f, &b).ctx("transport")?;
        for (j, ej) in e.vectors().iter().enumerate() {
            for (k, rk) in r.vectors().iter().enumerate() {
                let expected = if j == k { 1.0 } else { 0.0 };
                let got = ej.dot_unchecked(rk);
                ensure((got - expected).abs() <= c.tol.bound(1.0), || {
                    format!("e_{}·r^{} = {got}", j + 1, k + 1)
                })?;
            }
        }
    }
    Ok(())
}

fn transport_orthonormal(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let f = g.orthogonal(n);
        let b = g.orthonormal_frame(n);
        let (e, r) = invariants::frame_transport(&f, &b).ctx("transport")?;
        ensure(e.is_orthonormal(&c.tol), || {
            "transported frame is not orthonormal".into()
        })?;
        ensure(e.approx_eq(&r, &c.tol), || {
            "orthonormal frame differs from its reciprocal".into()
        })?;
    }
    Ok(())
}

fn transport_uniqueness(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let f = g.nonsingular_operator(n);
        let b = g.frame(n);
        let (e, _) = invariants::frame_transport(&f, &b).ctx("transport")?;
        let recovered = invariants::recover_transport(&b, &e).ctx("recover")?;
        same_mat(&c.tol, recovered.matrix(), f.matrix(), "recovered extensor")?;
    }
    Ok(())
}

// ---- changing basis ----

struct BasisPair {
    from: Frame,
    to: Frame,
    from_r: Frame,
    to_r: Frame,
    eps: PqExtensor,
}

fn basis_pair(g: &mut Gen, n: usize) -> std::result::Result<BasisPair, String> {
    let from = g.frame(n);
    let to = g.frame(n);
    let eps = invariants::changing_basis(&from, &to).ctx("changing basis")?;
    Ok(BasisPair {
        from_r: from.reciprocal().ctx("reciprocal")?,
        to_r: to.reciprocal().ctx("reciprocal")?,
        from,
        to,
        eps,
    })
}

fn cb_images(g: &mut Gen, c: &Config) -> Verdict {
    for _ in 0..c.trials {
        let bp = basis_pair(g, c.dim)?;
        for (e, e2) in bp.from.vectors().iter().zip(bp.to.vectors()) {
            same_mv(&c.tol, &bp.eps.apply(e).ctx("apply")?, e2, "ε(e_k) = e'_k")?;
        }
    }
    Ok(())
}

fn cb_star_images(g: &mut Gen, c: &Config) -> Verdict {
    for _ in 0..c.trials {
        let bp = basis_pair(g, c.dim)?;
        let star = invariants::star(&bp.eps).ctx("star")?;
        for (e, e2) in bp.from_r.vectors().iter().zip(bp.to_r.vectors()) {
            same_mv(&c.tol, &star.apply(e).ctx("apply")?, e2, "ε*(e^k) = e'^k")?;
        }
    }
    Ok(())
}

fn cb_definition(g: &mut Gen, c: &Config) -> Verdict {
    for _ in 0..c.trials {
        let bp = basis_pair(g, c.dim)?;
        // Rows of the component matrices are the frame vectors, so the map
        // u_k ↦ e_k has matrix E and ε = (u ↦ e') ∘ (u ↦ e)⁻¹.
        let e = bp.from.component_matrix();
        let e2 = bp.to.component_matrix();
        let expected = oracle::oracle_inverse(&e).ctx("oracle inverse")? * e2;
        same_mat(&c.tol, bp.eps.matrix(), &expected, "ε(v) = (e^s·v) e'_s")?;
    }
    Ok(())
}

fn cb_closed_forms(g: &mut Gen, c: &Config) -> Verdict {
    for _ in 0..c.trials {
        let bp = basis_pair(g, c.dim)?;
        let forms = invariants::changing_basis_forms(&bp.from, &bp.to).ctx("forms")?;
        let inv = invariants::invert(&bp.eps).ctx("invert")?;
        same_mat(
            &c.tol,
            forms.inverse.matrix(),
            inv.matrix(),
            "closed-form ε⁻¹",
        )?;
        same_mat(
            &c.tol,
            forms.adjoint.matrix(),
            bp.eps.adjoint().matrix(),
            "closed-form ε†",
        )?;
        let star = invariants::star(&bp.eps).ctx("star")?;
        same_mat(&c.tol, forms.star.matrix(), star.matrix(), "closed-form ε*")?;
        same_mat(
            &c.tol,
            forms.star.matrix(),
            inv.adjoint().matrix(),
            "ε* = (ε⁻¹)†",
        )?;
    }
    Ok(())
}

fn cb_blades(g: &mut Gen, c: &Config) -> Verdict {
    for _ in 0..c.trials {
        let bp = basis_pair(g, c.dim)?;
        let star = invariants::star(&bp.eps).ctx("star")?;
        let pairs = [
            (&bp.eps, &bp.from, &bp.to, "ε̲(e_J) = e'_J"),
            (&star, &bp.from_r, &bp.to_r, "ε̲*(e^J) = e'^J"),
        ];
        for (map, src, dst, what) in pairs {
            let ext = operators::extend_matrix(map).ctx("extend")?;
            let (a, b) = (src.induced_blades(), dst.induced_blades());
            for (x, y) in a.iter().zip(&b) {
                same_mv(&c.tol, &ext.apply(x).ctx("apply")?, y, what)?;
            }
        }
    }
    Ok(())
}

// ---- components ----

fn elementary_arity(n: usize) -> usize {
    if n <= 4 {
        3
    } else {
        2
    }
}

fn components_roundtrip(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    let mut seen = Vec::new();
    for _ in 0..c.trials {
        let f = g.frame(n);
        let (p, q) = (g.below(n + 1), g.below(n + 1));
        let k = 1 + g.below(elementary_arity(n));
        let samples = [
            AnyExtensor::Pq(g.pq_extensor(n, p, q)),
            AnyExtensor::General(g.general_extensor(n)),
            AnyExtensor::Elementary(g.elementary(n, k, q)),
        ];
        for t in &samples {
            for variance in [Variance::Covariant, Variance::Contravariant] {
                let comps = t.components(&f, variance).ctx("components")?;
                let back = comps.reconstruct().ctx("reconstruct")?;
                ensure(back.approx_eq(t, &c.tol), || {
                    format!("{} round trip failed", comps.kind().name())
                })?;
                if !seen.contains(&comps.kind()) {
                    seen.push(comps.kind());
                }
            }
        }
    }
    ensure(c.trials == 0 || seen.len() == 6, || {
        format!("only {} component kinds exercised", seen.len())
    })
}

fn components_expansion(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    for _ in 0..c.trials {
        let f = g.frame(n);
        let (p, q) = (g.below(n + 1), g.below(n + 1));
        let k = 1 + g.below(elementary_arity(n).min(2));
        let samples = [
            (
                SpaceDescriptor::Pq { dim: n, p, q },
                AnyExtensor::Pq(g.pq_extensor(n, p, q)),
            ),
            (
                SpaceDescriptor::Elementary { dim: n, k, q },
                AnyExtensor::Elementary(g.elementary(n, k, q)),
            ),
        ];
        for (desc, t) in &samples {
            let comps = t.components(&f, Variance::Covariant).ctx("components")?;
            let basis = basis(desc, &f).ctx("basis")?;
            let values = comps.values.transpose();
            let mut acc = vec![0.0; t.flat().len()];
            for (coef, b) in values.iter().zip(&basis) {
                for (a, x) in acc.iter_mut().zip(b.flat()) {
                    *a += coef * x;
                }
            }
            ensure(c.tol.close_slices(&acc, t.flat()), || {
                format!("expansion over the basis of {desc:?} failed")
            })?;
        }
    }
    Ok(())
}

fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let fact = |m: usize| (1..=m).product::<usize>();
    fact(n) / (fact(k) * fact(n - k))
}

fn basis_counts(g: &mut Gen, c: &Config) -> Verdict {
    let n = c.dim;
    let f = g.frame(n);
    let mut spaces = vec![(SpaceDescriptor::General { dim: n }, 4usize.pow(n as u32))];
    for p in 0..=n {
        for q in 0..=n {
            spaces.push((
                SpaceDescriptor::Pq { dim: n, p, q },
                choose(n, p) * choose(n, q),
            ));
        }
    }
    for k in 1..=elementary_arity(n) {
        for q in 0..=n {
            spaces.push((
                SpaceDescriptor::Elementary { dim: n, k, q },
                n.pow(k as u32) * choose(n, q),
            ));
            spaces.push((
                SpaceDescriptor::Exform { dim: n, k, p: q },
                choose(n, k) * choose(n, q),
            ));
        }
    }
    for (desc, expected) in &spaces {
        let d = dim_of(desc).ctx("dim")?;
        ensure(d == *expected, || {
            format!("{desc:?} has dimension {d}, expected {expected}")
        })?;
        if n > EXHAUSTIVE_DIM && matches!(desc, SpaceDescriptor::General { .. }) {
            continue;
        }
        let b = basis(desc, &f).ctx("basis")?;
        ensure(b.len() == d, || {
            format!("{desc:?} basis has {} elements", b.len())
        })?;
        if d == 0 {
            continue;
        }
        let len = b[0].flat().len();
        let stacked = DMatrix::from_fn(d, len, |i, j| b[i].flat()[j]);
        let gram = &stacked * stacked.transpose();
        ensure(oracle::gauss_jordan(&gram).is_ok(), || {
            format!("{desc:?} basis is linearly dependent")
        })?;
        if let SpaceDescriptor::Exform { .. } = desc {
            for e in &b {
                if let AnyExtensor::Elementary(e) = e {
                    ensure(e.is_exform(&c.tol), || {
                        format!("{desc:?} basis element not skew")
                    })?;
                }
            }
        }
    }
    Ok(())
}

macro_rules! law {
    ($name:expr, $summary:expr, $f:ident) => {
        Law::new($name, $summary, $f)
    };
}

pub static LAWS: &[Law] = &[
    law!("e1", "extension preserves grades", e1_grade_preserving),
    law!(
        "e2",
        "extension fixes scalars and maps vectors and simple k-vectors",
        e2_generators
    ),
    law!("e3", "extension is an outermorphism", e3_outermorphism),
    law!(
        "e4",
        "extension of a composition composes the extensions",
        e4_composition
    ),
    law!(
        "e5",
        "extension of the inverse inverts the extension",
        e5_inverse
    ),
    law!(
        "e6",
        "both frame formulas for the extension agree in every frame",
        e6_frame_independence
    ),
    law!(
        "extension-compound",
        "grade blocks of the extension are compound matrices",
        e_compound_blocks
    ),
    law!(
        "contraction-identity",
        "X⌟t̲(Y) = t̲(t̲†(X)⌟Y)",
        contraction_identity
    ),
    law!(
        "adjoint-duality",
        "X·t†(Y) = t(X)·Y, also through frame formulas",
        adjoint_duality
    ),
    law!("adjoint-composition", "(u∘t)† = t†∘u†", adjoint_composition),
    law!("adjoint-inverse", "(t†)⁻¹ = (t⁻¹)†", adjoint_inverse),
    law!(
        "adjoint-extension",
        "extension commutes with the adjoint",
        adjoint_extension
    ),
    law!(
        "adjoint-frame-formulas",
        "homogeneous and restricted frame formulas give the adjoint",
        adjoint_frame_formulas
    ),
    law!("g1", "generalization preserves grades", g1_grade_preserving),
    law!(
        "g2",
        "generalization commutes with the involutions",
        g2_involutions
    ),
    law!(
        "g3",
        "generalization kills scalars, fixes vectors, obeys Leibniz",
        g3_derivation
    ),
    law!("g4", "generalization commutes with the adjoint", g4_adjoint),
    law!(
        "g5",
        "generalization commutes with symmetric and skew parts",
        g5_parts
    ),
    law!(
        "g6",
        "skew generalization factors through biv[t]",
        g6_bivector
    ),
    law!(
        "g7",
        "skew generalization is a derivation of ∧, ·, ⌟ and the Clifford product",
        g7_skew_derivation
    ),
    law!(
        "g7-antisymmetry",
        "skew generalization is antisymmetric under the scalar product",
        g7_antisymmetry
    ),
    law!(
        "generalization-frames",
        "generalization and biv[t] do not depend on the frame",
        generalization_frames
    ),
    law!(
        "projector-intersection",
        "nested projections project onto the intersection",
        projector_intersection
    ),
    law!(
        "projector-union",
        "projections onto disjoint grade sets add to the union",
        projector_union
    ),
    law!(
        "projector-symmetry",
        "projectors are symmetric under the scalar product",
        projector_symmetry
    ),
    law!(
        "det-oracle",
        "determinant matches the Leibniz oracle",
        det_oracle
    ),
    law!("d1", "det(u∘t) = det(u)det(t)", d1_product),
    law!("d2", "det(t⁻¹) = 1/det(t)", d2_inverse),
    law!("d3", "det(t†) = det(t)", d3_adjoint),
    law!(
        "det-frames",
        "frame and pseudoscalar formulas for det agree",
        det_frames
    ),
    law!(
        "det-pseudoscalar",
        "det and inverse are bit-identical for I and scaled I",
        det_pseudoscalar_independence
    ),
    law!(
        "inversion-oracle",
        "pseudoscalar inversion matches the Gauss-Jordan oracle",
        inversion_oracle
    ),
    law!(
        "transport-reciprocity",
        "transported frames remain reciprocal",
        transport_reciprocity
    ),
    law!(
        "transport-orthonormal",
        "orthogonal maps transport orthonormal frames to orthonormal frames",
        transport_orthonormal
    ),
    law!(
        "transport-uniqueness",
        "the transporting extensor is recovered from its frames",
        transport_uniqueness
    ),
    law!("change-basis-images", "ε(e_k) = e'_k", cb_images),
    law!("change-basis-star-images", "ε*(e^k) = e'^k", cb_star_images),
    law!(
        "change-basis-definition",
        "ε(v) = (e^s·v) e'_s matches the matrix oracle",
        cb_definition
    ),
    law!(
        "change-basis-closed-forms",
        "closed forms of ε⁻¹, ε† and ε*",
        cb_closed_forms
    ),
    law!(
        "change-basis-blades",
        "ε̲ and ε̲* map induced blades to induced blades",
        cb_blades
    ),
    law!(
        "components-roundtrip",
        "reconstruct∘components is the identity for all six kinds",
        components_roundtrip
    ),
    law!(
        "components-expansion",
        "components expand over the covariant basis",
        components_expansion
    ),
    law!(
        "basis-counts",
        "bases have the stated dimensions and are independent",
        basis_counts
    ),
    law!(
        "contraction-duality",
        "contraction is dual to the exterior product",
        contraction_duality
    ),
    law!(
        "clifford-vectors",
        "ab = a·b + a∧b for vectors",
        clifford_of_vectors
    ),
    law!(
        "commutator-derivation",
        "B× is a derivation for bivectors B",
        commutator_derivation
    ),
    law!(
        "frame-laws",
        "double reciprocal, completeness and induced pairing",
        frame_laws
    ),
    law!(
        "cauchy-binet",
        "compound matrices are multiplicative",
        cauchy_binet
    ),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        for (i, a) in LAWS.iter().enumerate() {
            assert!(LAWS[i + 1..].iter().all(|b| b.name != a.name), "{}", a.name);
        }
    }

    #[test]
    fn every_law_passes_at_small_dimensions() {
        for n in 1..=3 {
            let cfg = Config::new(n, 3);
            for o in run_all(11, &cfg) {
                assert!(o.passed(), "n={n} {}: {:?}", o.name, o.verdict);
            }
        }
    }

    #[test]
    fn runs_are_reproducible() {
        let cfg = Config::new(3, 2);
        assert_eq!(run_all(5, &cfg), run_all(5, &cfg));
    }
}
