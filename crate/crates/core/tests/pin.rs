use pinhowe::clifford::{CliffordElement, QuadraticSpace, SpaceRef};
use pinhowe::linalg::CMat;
use pinhowe::orthogonal::{build_pair, random_isometry, Family, LieElement, OrthogonalMap, Side};
use pinhowe::pin::{
    classify_extension, cocycle, commutator_pairing, commutator_sign, lift, lift_loop, section, Backend,
    ExtensionLabel, PinElement, DEFAULT_STEPS,
};
use pinhowe::{ExactComplex, C64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn real(p: usize, q: usize) -> SpaceRef {
    QuadraticSpace::real(p, q).unwrap().shared()
}

fn maps_close(a: &OrthogonalMap, b: &OrthogonalMap) -> bool {
    (a.matrix() - b.matrix()).norm() < 1e-9 * (1.0 + b.matrix().norm())
}

/// Product of random non-isotropic unit vectors.
fn random_pin(space: &SpaceRef, factors: usize, rng: &mut ChaCha8Rng) -> PinElement {
    let mut x = PinElement::one(space);
    for _ in 0..factors {
        loop {
            let v: Vec<f64> = (0..space.dim()).map(|_| rng.random_range(-1.0..1.0)).collect();
            let q: f64 = v.iter().enumerate().map(|(i, c)| c * c * space.norm(i) as f64).sum();
            if q.abs() > 0.1 {
                let w: Vec<f64> = v.iter().map(|c| c / q.abs().sqrt()).collect();
                let value = CliffordElement::real_vector(space, &w);
                x = x.mul(&PinElement::new_checked(value).unwrap()).unwrap();
                break;
            }
        }
    }
    x
}

#[test]
fn basis_vector_projects_to_its_reflection() {
    let space = real(2, 1);
    for i in 0..3 {
        let m = PinElement::<C64>::basis_vector(&space, i).project();
        let mut signs = vec![1; 3];
        signs[i] = -1;
        assert_eq!(m.diagonal_signs(), Some(signs));
    }
}

#[test]
fn minus_one_projects_to_identity() {
    let space = real(3, 1);
    let x = PinElement::<C64>::one(&space).neg();
    assert!(maps_close(&x.project(), &OrthogonalMap::identity(&space)));
}

#[test]
fn half_angle_bivector_rotates_the_plane() {
    let space = real(2, 0);
    let theta = 0.7_f64;
    let value = CliffordElement::from_terms(
        &space,
        [(0b00, C64::new((theta / 2.0).cos(), 0.0)), (0b11, C64::new(-(theta / 2.0).sin(), 0.0))],
    );
    let x = PinElement::new_checked(value).unwrap();
    let (c, s) = (theta.cos(), theta.sin());
    let expected = CMat::from_row_slice(2, 2, &[c, -s, s, c].map(|v| C64::new(v, 0.0)));
    assert!((x.project().matrix() - expected).norm() < 1e-12);
}

#[test]
fn non_pin_elements_are_rejected() {
    let space = real(2, 0);
    let mixed = CliffordElement::from_terms(&space, [(0, C64::new(1.0, 0.0)), (1, C64::new(1.0, 0.0))]);
    assert!(PinElement::new_checked(mixed).is_err());
    let long = CliffordElement::real_vector(&space, &[2.0, 0.0]);
    assert!(PinElement::new_checked(long).is_err());
}

#[test]
fn lift_round_trips_random_isometries() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, q) in [(2, 0), (1, 1), (2, 2), (3, 1)] {
        let space = real(p, q);
        for _ in 0..30 {
            let g = random_isometry(&space, &mut rng);
            let x = lift(&g).unwrap();
            assert!(maps_close(&x.project(), &g));
            assert!(maps_close(&x.neg().project(), &g));
        }
    }
}

#[test]
fn lift_handles_complex_spaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let space = QuadraticSpace::complex(4).unwrap().shared();
    for _ in 0..20 {
        let g = random_isometry(&space, &mut rng);
        assert!(maps_close(&lift(&g).unwrap().project(), &g));
    }
}

#[test]
fn identity_lifts_to_a_sign() {
    let space = real(2, 2);
    let x = lift(&OrthogonalMap::identity(&space)).unwrap();
    assert_eq!(x.value(), &CliffordElement::one(&space));
}

#[test]
fn exact_diagonal_lift_matches_float_lift() {
    let space = real(2, 2);
    let signs = [-1, 1, -1, -1];
    let exact = PinElement::<ExactComplex>::lift_diagonal(&space, &signs).unwrap();
    assert_eq!(exact.value().terms().len(), 1);
    assert_eq!(exact.spinor_norm(), 1);
    let g = OrthogonalMap::diagonal(&space, &signs).unwrap();
    let float = lift(&g).unwrap();
    let e = exact.to_float();
    assert!(float.distance(&e) < 1e-9 || float.distance(&e.neg()) < 1e-9);
}

#[test]
fn fibers_have_two_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let space = real(2, 2);
    for k in 1..=4 {
        let x = random_pin(&space, k, &mut rng);
        let y = lift(&x.project()).unwrap();
        let d = x.distance(&y).min(x.distance(&y.neg()));
        assert!(d < 1e-9, "{d}");
    }
}

#[test]
fn generic_real_pair_lifts_fail_to_commute() {
    // O(1) x O(2) on R^2: -Id lifts to e1 e2, a column reflection to a
    // vector, and these anticommute.
    let spec = build_pair(Family::RealOrthogonal, &[1, 0, 2, 0]).unwrap();
    for backend in [Backend::Exact, Backend::Float] {
        let verdicts = commutator_pairing(&spec, backend, 0, 1).unwrap();
        assert_eq!(verdicts.len(), 1);
        assert_eq!(verdicts[0].sign, -1);
    }
}

#[test]
fn real_general_linear_lifts_commute() {
    let spec = build_pair(Family::GlReal, &[1, 1]).unwrap();
    let verdicts = commutator_pairing(&spec, Backend::Exact, 0, 1).unwrap();
    assert_eq!(verdicts.len(), 1);
    assert_eq!(verdicts[0].sign, 1);
}

#[test]
fn complex_orthogonal_two_by_two_reps_commute() {
    let spec = build_pair(Family::ComplexOrthogonalReal, &[2, 2]).unwrap();
    for backend in [Backend::Exact, Backend::Float] {
        let verdicts = commutator_pairing(&spec, backend, 2, 9).unwrap();
        assert!(verdicts.iter().all(|v| v.sign == 1), "{verdicts:?}");
    }
}

#[test]
fn commutator_sign_is_constant_on_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let spec = build_pair(Family::RealOrthogonal, &[2, 0, 1, 1]).unwrap();
    let base = commutator_pairing(&spec, Backend::Float, 0, 1).unwrap();
    for _ in 0..5 {
        for (i, rep) in spec.component_reps(Side::G).iter().enumerate() {
            let k = spec.random_element(Side::G, 0.5, &mut rng);
            let k = pinhowe::orthogonal::OrthogonalMap::new(&spec.ambient, k.matrix().clone()).unwrap();
            // Keep `k` in the identity component by squaring.
            let k = k.compose(&k);
            let x = lift(&rep.map.compose(&k)).unwrap();
            for (j, rep2) in spec.component_reps(Side::Gp).iter().enumerate() {
                let y = lift(&rep2.map).unwrap();
                let sign = commutator_sign(&x, &y).unwrap();
                let expected = base[i * spec.component_reps(Side::Gp).len() + j].sign;
                assert_eq!(sign, expected);
            }
        }
    }
}

#[test]
fn section_is_normalised() {
    let space = real(2, 1);
    let s = section(&OrthogonalMap::identity(&space)).unwrap();
    assert_eq!(s.value(), &CliffordElement::one(&space));
}

#[test]
fn cocycle_identity_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let spec = build_pair(Family::Unitary, &[1, 1, 1, 0]).unwrap();
    let id = OrthogonalMap::identity(&spec.ambient);
    assert_eq!(cocycle(&spec, &id, &id).unwrap(), 1);
    for _ in 0..10 {
        let g = spec.random_element(Side::G, 1.0, &mut rng);
        let h = spec.random_element(Side::G, 1.0, &mut rng);
        let k = spec.random_element(Side::G, 1.0, &mut rng);
        let lhs = cocycle(&spec, &g, &h).unwrap() * cocycle(&spec, &g.compose(&h), &k).unwrap();
        let rhs = cocycle(&spec, &h, &k).unwrap() * cocycle(&spec, &g, &h.compose(&k)).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn circle_in_the_plane_lifts_to_an_open_path() {
    let space = real(2, 0);
    let x = LieElement::elementary(&space, 0, 1);
    assert_eq!(lift_loop(&x, DEFAULT_STEPS).unwrap(), -1);
    // Twice around closes up.
    assert_eq!(lift_loop(&x.scale(C64::new(2.0, 0.0)), DEFAULT_STEPS).unwrap(), 1);
}

#[test]
fn unitary_extension_labels() {
    let class = |p: [usize; 4]| classify_extension(&build_pair(Family::Unitary, &p).unwrap(), Side::G, 128).unwrap();
    let c = class([1, 0, 1, 0]);
    assert_eq!(c.label, ExtensionLabel::DetHalf);
    assert_eq!(c.loops["U(p)"], -1);
    assert_eq!(class([1, 1, 1, 0]).label, ExtensionLabel::Lambda { p: 1, q: 1 });
    assert_eq!(class([1, 1, 1, 1]).label, ExtensionLabel::Trivial);
    assert_eq!(class([1, 0, 2, 0]).label, ExtensionLabel::Trivial);
}

#[test]
fn quaternionic_general_linear_has_no_loops() {
    let spec = build_pair(Family::GlQuaternionic, &[1, 1]).unwrap();
    let c = classify_extension(&spec, Side::G, 64).unwrap();
    assert_eq!(c.label, ExtensionLabel::Trivial);
    assert_eq!(c.note.as_deref(), Some("no loops"));
}

#[test]
fn loop_signs_multiply_across_block_sums() {
    let sign = |m: usize| {
        let spec = build_pair(Family::Unitary, &[1, 0, m, 0]).unwrap();
        classify_extension(&spec, Side::G, 128).unwrap().loops["U(p)"]
    };
    let s: Vec<i8> = (1..=4).map(sign).collect();
    for m1 in 1..=2 {
        for m2 in 1..=2 {
            assert_eq!(s[m1 + m2 - 1], s[m1 - 1] * s[m2 - 1]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn projection_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let space = real(2, 2);
        let x = random_pin(&space, 3, &mut rng);
        let y = random_pin(&space, 2, &mut rng);
        let xy = x.mul(&y).unwrap();
        prop_assert!(maps_close(&xy.project(), &x.project().compose(&y.project())));
    }

    #[test]
    fn lift_inverts_projection(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let space = real(3, 2);
        let g = random_isometry(&space, &mut rng);
        prop_assert!(maps_close(&lift(&g).unwrap().project(), &g));
    }
}
