use pinhowe::linalg::{expm, CMat};
use pinhowe::orthogonal::{build_pair, complexify, realify_quaternionic, Family, KField, LieElement, Side};
use pinhowe::{Error, C64};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sizes(family: Family) -> Vec<Vec<usize>> {
    match family.param_count() {
        4 => vec![family.minimal_params(), vec![1, 1, 1, 0], vec![2, 1, 0, 1]],
        _ => {
            let m = family.minimal_params();
            vec![m.clone(), vec![m[0], m[1] + 1], vec![m[0] + 1, m[1]]]
        }
    }
}

/// Signature from the block structure of each model, written out by hand.
fn expected_signature(f: Family, p: &[usize]) -> (usize, usize) {
    let indefinite = |k: usize| (k * (p[0] * p[2] + p[1] * p[3]), k * (p[0] * p[3] + p[1] * p[2]));
    let split = |k: usize| (k * p[0] * p[1], k * p[0] * p[1]);
    match f {
        Family::RealOrthogonal => indefinite(1),
        Family::Unitary => indefinite(2),
        Family::QuaternionicUnitary => indefinite(4),
        Family::RealSymplectic | Family::QuaternionicSkew => split(2),
        Family::ComplexOrthogonalReal => split(1),
        Family::ComplexSymplecticReal => split(4),
        Family::GlReal => split(1),
        Family::GlComplex => split(2),
        Family::GlQuaternionic => split(4),
        Family::ComplexOrthogonal => (p[0] * p[1], 0),
        Family::ComplexSymplectic => (4 * p[0] * p[1], 0),
        Family::ComplexGl => (2 * p[0] * p[1], 0),
    }
}

/// Real dimension of the natural Lie algebra of one side.
fn expected_lie_dim(f: Family, p: &[usize], side: Side) -> usize {
    let n = match (f.param_count(), side) {
        (4, Side::G) => p[0] + p[1],
        (4, Side::Gp) => p[2] + p[3],
        (_, Side::G) => p[0],
        (_, Side::Gp) => p[1],
    };
    match f {
        Family::RealOrthogonal => n * (n - 1) / 2,
        Family::Unitary => n * n,
        Family::RealSymplectic | Family::QuaternionicUnitary | Family::ComplexSymplectic => n * (2 * n + 1),
        Family::ComplexOrthogonalReal => n * (n - 1),
        Family::ComplexSymplecticReal => 2 * n * (2 * n + 1),
        Family::QuaternionicSkew => n * (2 * n - 1),
        Family::GlReal | Family::ComplexGl => n * n,
        Family::GlComplex => 2 * n * n,
        Family::GlQuaternionic => 4 * n * n,
        Family::ComplexOrthogonal => n * (n - 1) / 2,
    }
}

#[test]
fn ambient_signature_matches_block_count() {
    for f in Family::ALL {
        for p in sizes(f) {
            let spec = build_pair(f, &p).unwrap();
            assert_eq!(spec.signature(), expected_signature(f, &p), "{}", spec.id());
        }
    }
}

#[test]
fn lie_algebra_dimensions() {
    for f in Family::ALL {
        for p in sizes(f) {
            let spec = build_pair(f, &p).unwrap();
            for side in [Side::G, Side::Gp] {
                assert_eq!(spec.lie_generators(side).len(), expected_lie_dim(f, &p, side), "{} {side}", spec.id());
            }
        }
    }
}

#[test]
fn members_commute_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for f in Family::ALL {
        let spec = build_pair(f, &f.minimal_params()).unwrap();
        for _ in 0..100 {
            let g = spec.random_element(Side::G, 0.8, &mut rng);
            let h = spec.random_element(Side::Gp, 0.8, &mut rng);
            assert!(g.isometry_defect() < 1e-9, "{}", spec.id());
            assert!(h.isometry_defect() < 1e-9, "{}", spec.id());
            let gh = g.matrix() * h.matrix();
            let hg = h.matrix() * g.matrix();
            assert!((gh - hg).norm() < 1e-9, "{}", spec.id());
        }
    }
}

#[test]
fn lie_embedding_preserves_brackets() {
    for f in Family::ALL {
        let spec = build_pair(f, &sizes(f)[2]).unwrap();
        for side in [Side::G, Side::Gp] {
            let nat = &spec.group(side).natural_lie;
            let lie = spec.lie_generators(side);
            for i in 0..nat.len().min(4) {
                for j in 0..nat.len().min(4) {
                    let bracket = &nat[i] * &nat[j] - &nat[j] * &nat[i];
                    let embedded = spec.embed_lie(side, &bracket).unwrap();
                    assert!((embedded.matrix() - lie[i].bracket(&lie[j]).matrix()).norm() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn loops_close_after_full_turn() {
    for f in Family::ALL {
        let spec = build_pair(f, &sizes(f)[2]).unwrap();
        for side in [Side::G, Side::Gp] {
            for l in spec.loops(side) {
                let m = expm(&(l.generator.matrix() * C64::new(2.0 * std::f64::consts::PI, 0.0)));
                let d = m.nrows();
                assert!((m - CMat::identity(d, d)).norm() < 1e-8, "{} {}", spec.id(), l.name);
            }
        }
    }
}

#[test]
fn reflection_determinant_counts_the_other_factor() {
    // A reflection of one factor acts on `M_{n1,n2}` once per column (or row).
    let spec = build_pair(Family::RealOrthogonal, &[1, 0, 2, 0]).unwrap();
    for (side, other) in [(Side::G, 2), (Side::Gp, 1)] {
        for rep in spec.component_reps(side) {
            let expected = if other % 2 == 0 { 1.0 } else { -1.0 };
            assert!((rep.map.det() - C64::new(expected, 0.0)).norm() < 1e-9);
        }
    }
}

#[test]
fn gl_one_real_reflection_is_minus_identity() {
    let spec = build_pair(Family::GlReal, &[1, 1]).unwrap();
    let s = &spec.component_reps(Side::G)[0];
    assert_eq!(s.map.diagonal_signs(), Some(vec![-1, -1]));
}

#[test]
fn unitary_one_has_a_single_rotation_generator() {
    let spec = build_pair(Family::Unitary, &[1, 0, 1, 0]).unwrap();
    let lie = spec.lie_generators(Side::G);
    assert_eq!(lie.len(), 1);
    let space = spec.ambient.clone();
    let rot = LieElement::elementary(&space, 0, 1);
    let m = lie[0].matrix();
    let same = (m - rot.matrix()).norm() < 1e-12 || (m + rot.matrix()).norm() < 1e-12;
    assert!(same, "{m}");
}

#[test]
fn excluded_sizes_are_rejected() {
    for (f, p) in [
        (Family::ComplexOrthogonalReal, vec![1, 2]),
        (Family::QuaternionicSkew, vec![2, 1]),
        (Family::GlReal, vec![0, 1]),
        (Family::Unitary, vec![0, 0, 1, 0]),
        (Family::Unitary, vec![1, 1]),
    ] {
        match build_pair(f, &p) {
            Err(Error::SideCondition(_)) => {}
            other => panic!("{f} {p:?}: {other:?}"),
        }
    }
}

#[test]
fn complexification_keeps_dimension() {
    for f in Family::ALL {
        let spec = build_pair(f, &f.minimal_params()).unwrap();
        let c = complexify(&spec);
        assert_eq!(c.space.dim(), spec.ambient.dim());
        assert_eq!(c.summands.iter().map(|s| s.dim()).sum::<usize>(), spec.ambient.dim(), "{}", spec.id());
    }
}

#[test]
fn complexified_unitary_pair_splits_in_two_lines() {
    let spec = build_pair(Family::Unitary, &[1, 0, 1, 0]).unwrap();
    let c = complexify(&spec);
    let dims: Vec<usize> = c.summands.iter().map(|s| s.dim()).collect();
    assert_eq!(dims, vec![1, 1]);
    assert_eq!(c.g_name, "GL(1,C)");
}

#[test]
fn complexified_summands_are_stable() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for f in Family::ALL {
        let spec = build_pair(f, &f.minimal_params()).unwrap();
        let c = complexify(&spec);
        for side in [Side::G, Side::Gp] {
            let g = spec.random_element(side, 0.5, &mut rng);
            for s in &c.summands {
                let image = g.matrix() * &s.basis;
                let residual = &image - &s.basis * (s.basis.adjoint() * &image);
                assert!(residual.norm() < 1e-9, "{} {}", spec.id(), s.label);
            }
        }
    }
}

#[test]
fn complexified_quaternionic_groups() {
    let c = complexify(&build_pair(Family::GlQuaternionic, &[1, 1]).unwrap());
    assert_eq!(c.g_name, "GL(2,C)");
    let c = complexify(&build_pair(Family::QuaternionicUnitary, &[1, 1, 1, 0]).unwrap());
    assert_eq!(c.g_name, "Sp(4,C)");
}

#[test]
fn quaternionic_fields_report_real_dimension() {
    assert_eq!(KField::Quaternion.real_dim(), 4);
}

type Quat = [f64; 4];

fn qmul(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

/// `x0 + x1 i + x2 j + x3 k = (x0 + x1 i) + j (x2 - x3 i)`.
fn embed(x: Quat) -> CMat {
    let a = CMat::from_element(1, 1, C64::new(x[0], x[1]));
    let b = CMat::from_element(1, 1, C64::new(x[2], -x[3]));
    realify_quaternionic(&a, &b).unwrap()
}

proptest! {
    #[test]
    fn quaternionic_realification_is_multiplicative(
        a in prop::array::uniform4(-2.0f64..2.0),
        b in prop::array::uniform4(-2.0f64..2.0),
    ) {
        let lhs = embed(qmul(a, b));
        let rhs = embed(a) * embed(b);
        prop_assert!((lhs - rhs).norm() < 1e-12);
        let sum: Quat = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
        prop_assert!((embed(sum) - embed(a) - embed(b)).norm() < 1e-12);
    }

    #[test]
    fn embedded_elements_are_isometries(seed in any::<u64>(), idx in 0usize..13) {
        let f = Family::ALL[idx];
        let spec = build_pair(f, &f.minimal_params()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = spec.random_element(Side::G, 0.7, &mut rng);
        prop_assert!(g.isometry_defect() < 1e-9);
    }
}
