//! End-to-end acceptance run: one PASS/FAIL line per criterion, non-zero exit
//! when any criterion fails.

use pinhowe::clifford::{chevalley_t, CliffordElement, ExteriorElement, QuadraticSpace, SpaceRef};
use pinhowe::howe::{howe_check, transfer_check, verify_generation, GeneratorSetting};
use pinhowe::orthogonal::{
    build_pair, random_isometry, random_lie_combination, DualPairSpec, Family, LieElement, OrthogonalMap, Side,
};
use pinhowe::pin::{classify_extension, commutator_pairing, lift, Backend, ExtensionLabel, PinElement, DEFAULT_STEPS};
use pinhowe::scalar::exact;
use pinhowe::{ExactComplex, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

fn real(p: usize, q: usize) -> SpaceRef {
    QuadraticSpace::real(p, q).unwrap().shared()
}

fn pair(f: Family, p: &[usize]) -> DualPairSpec {
    build_pair(f, p).unwrap_or_else(|e| panic!("{f} {p:?}: {e}"))
}

fn sparse_exact(space: &SpaceRef, rng: &mut ChaCha8Rng) -> CliffordElement<ExactComplex> {
    let full = 1u64 << space.dim();
    let terms = rng.random_range(1..=4);
    CliffordElement::from_terms(
        space,
        (0..terms).map(|_| (rng.random_range(0..full), exact(rng.random_range(-3..=3), rng.random_range(-3..=3)))),
    )
}

fn sparse_float(space: &SpaceRef, rng: &mut ChaCha8Rng) -> CliffordElement {
    let full = 1u64 << space.dim();
    let terms = rng.random_range(1..=4);
    CliffordElement::from_terms(
        space,
        (0..terms)
            .map(|_| (rng.random_range(0..full), C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))),
    )
}

fn generator_relations_hold<S: pinhowe::Scalar>(space: &SpaceRef) -> bool {
    let n = space.dim();
    let e: Vec<CliffordElement<S>> = (0..n).map(|i| CliffordElement::basis_vector(space, i)).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let anti = &(&e[i] * &e[j]) + &(&e[j] * &e[i]);
            let expected = if i == j { S::from_i64(2 * space.norm(i) as i64) } else { S::zero() };
            anti.approx_eq(&CliffordElement::scalar(space, expected))
        })
    })
}

fn clifford_axioms() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut failures = Vec::new();
    for dim in [2usize, 4, 8, 12] {
        let space = real(dim.div_ceil(2), dim / 2);
        let exact_ok = {
            let xs: Vec<_> = (0..200).map(|_| sparse_exact(&space, &mut rng)).collect();
            (0..200).all(|k| {
                let (x, y, z) = (&xs[k], &xs[(k + 1) % 200], &xs[(k + 2) % 200]);
                (&(x * y) * z) == (x * &(y * z))
            }) && generator_relations_hold::<ExactComplex>(&space)
        };
        let float_ok = {
            let xs: Vec<_> = (0..200).map(|_| sparse_float(&space, &mut rng)).collect();
            (0..200).all(|k| {
                let (x, y, z) = (&xs[k], &xs[(k + 1) % 200], &xs[(k + 2) % 200]);
                (&(x * y) * z).approx_eq(&(x * &(y * z)))
            }) && generator_relations_hold::<C64>(&space)
        };
        if !(exact_ok && float_ok) {
            failures.push(format!("dim {dim}: exact {exact_ok} float {float_ok}"));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(10);
    Outcome::new(pass, format!("dims 2,4,8,12 x 200 elements, {elapsed:.2?} (< 10 s) {}", failures.join("; ")))
}

fn covering() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    let mut fiber_ok = true;
    for (p, q) in [(2, 0), (1, 1), (2, 2), (4, 4)] {
        let space = real(p, q);
        for _ in 0..100 {
            let g = random_isometry(&space, &mut rng);
            let x = lift(&g).unwrap();
            let err = (x.project().matrix() - g.matrix()).norm();
            worst = worst.max(err).max((x.neg().project().matrix() - g.matrix()).norm());
            // A second preimage built through an unrelated factorization; its
            // rounding error scales with the factors' sizes.
            let h = random_isometry(&space, &mut rng);
            let (a, b) = (lift(&g.compose(&h)).unwrap(), lift(&h).unwrap().inverse());
            let y = a.mul(&b).unwrap();
            let tol = 1e-9 * a.value().coeff_norm() * b.value().coeff_norm();
            let same = y.distance(&x) <= tol;
            let opposite = y.distance(&x.neg()) <= tol;
            fiber_ok &= same != opposite && x.distance(&x.neg()) > x.value().coeff_norm();
        }
    }
    Outcome::new(worst < 1e-9 && fiber_ok, format!("max |π(lift g) - g| = {worst:.1e}, fibers {{±x}}: {fiber_ok}"))
}

fn theorem_one_families() -> Vec<DualPairSpec> {
    Family::ALL.iter().filter(|f| **f != Family::RealOrthogonal).map(|f| pair(*f, &f.minimal_params())).collect()
}

fn commutation() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for spec in theorem_one_families() {
        let mut signs: Vec<i8> =
            commutator_pairing(&spec, Backend::Float, 2, 7).unwrap().iter().map(|v| v.sign).collect();
        if let Ok(exact) = commutator_pairing(&spec, Backend::Exact, 0, 7) {
            signs.extend(exact.iter().map(|v| v.sign));
        }
        if signs.iter().any(|&s| s != 1) {
            bad.push(spec.id());
        }
    }
    let has_minus_one =
        |spec: DualPairSpec| commutator_pairing(&spec, Backend::Float, 2, 7).unwrap().iter().any(|v| v.sign == -1);
    let control_ok = has_minus_one(pair(Family::RealOrthogonal, &[1, 0, 2, 0]));
    let complex_control_ok = has_minus_one(pair(Family::ComplexOrthogonal, &[2, 1]));
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && control_ok && complex_control_ok && elapsed < Duration::from_secs(60);
    Outcome::new(
        pass,
        format!("12 families all +1 (failures: {bad:?}); controls O(1)xO(2) and O(2,C)xO(1,C) have -1: {control_ok}, {complex_control_ok}; {elapsed:.2?} (< 60 s)"),
    )
}

fn label(spec: &DualPairSpec, side: Side) -> ExtensionLabel {
    classify_extension(spec, side, DEFAULT_STEPS).unwrap().label
}

fn extension_labels() -> Outcome {
    let mut bad = Vec::new();
    let mut check = |spec: &DualPairSpec, side: Side, ok: &dyn Fn(ExtensionLabel) -> bool| {
        let l = label(spec, side);
        if !ok(l) {
            bad.push(format!("{} {side}: {l}", spec.id()));
        }
    };
    // Λ(p,0) is the det^{1/2} cover of U(p).
    let lambda = |p: usize, q: usize| {
        move |l: ExtensionLabel| l == ExtensionLabel::Lambda { p, q } || (q == 0 && l == ExtensionLabel::DetHalf)
    };
    let trivial = |l: ExtensionLabel| l == ExtensionLabel::Trivial;
    for (p1, q1) in [(1, 0), (1, 1)] {
        for (p2, q2) in [(1, 0), (2, 1), (3, 0)] {
            check(&pair(Family::Unitary, &[p1, q1, p2, q2]), Side::G, &lambda(p1, q1));
        }
        for (p2, q2) in [(2, 0), (1, 1)] {
            check(&pair(Family::Unitary, &[p1, q1, p2, q2]), Side::G, &trivial);
        }
    }
    for f in [
        Family::RealSymplectic,
        Family::ComplexOrthogonalReal,
        Family::ComplexOrthogonal,
        Family::QuaternionicUnitary,
        Family::QuaternionicSkew,
        Family::GlReal,
        Family::GlComplex,
        Family::GlQuaternionic,
    ] {
        let spec = pair(f, &f.minimal_params());
        check(&spec, Side::G, &trivial);
        check(&spec, Side::Gp, &trivial);
    }
    let circle = pair(Family::Unitary, &[1, 0, 1, 0]);
    let class = classify_extension(&circle, Side::G, DEFAULT_STEPS).unwrap();
    let circle_ok =
        class.label == ExtensionLabel::DetHalf && class.loops.values().copied().collect::<Vec<_>>() == vec![-1];
    Outcome::new(
        bad.is_empty() && circle_ok,
        format!("mismatches {bad:?}; U(1) in O(2): det^1/2 with loop sign -1: {circle_ok}"),
    )
}

fn loop_sign(m: usize) -> i8 {
    let spec = pair(Family::Unitary, &[1, 0, m, 0]);
    *classify_extension(&spec, Side::G, DEFAULT_STEPS).unwrap().loops.values().next().unwrap()
}

fn multiplicativity() -> Outcome {
    let signs: Vec<i8> = (0..=4).map(|m| if m == 0 { 1 } else { loop_sign(m) }).collect();
    let mut ok = true;
    for m1 in 1..=2 {
        for m2 in 1..=2 {
            ok &= signs[m1 + m2] == signs[m1] * signs[m2];
        }
    }
    Outcome::new(ok, format!("U(1) loop signs for m = 1..4: {:?}", &signs[1..]))
}

fn generator_theorems() -> Outcome {
    let start = Instant::now();
    let grid = GeneratorSetting::grid(12);
    let failed: Vec<String> =
        grid.iter().filter(|s| !verify_generation(**s).unwrap().matches).map(|s| s.to_string()).collect();
    Outcome::new(
        failed.is_empty(),
        format!("{} settings up to 2^12, mismatches {failed:?}, {:.2?}", grid.len(), start.elapsed()),
    )
}

fn howe_scope_families(max_dim: usize) -> Vec<DualPairSpec> {
    let mut out: Vec<DualPairSpec> = Family::ALL
        .iter()
        .map(|f| pair(*f, &f.minimal_params()))
        .filter(|s| s.in_howe_scope() && s.ambient.dim() <= max_dim)
        .collect();
    out.push(pair(Family::Unitary, &[1, 1, 1, 0]));
    out.push(pair(Family::Unitary, &[1, 0, 2, 0]));
    out.push(pair(Family::GlReal, &[1, 2]));
    out
}

fn transfer() -> Outcome {
    let mut bad = Vec::new();
    let families = howe_scope_families(8);
    for spec in &families {
        for side in [Side::G, Side::Gp] {
            let r = transfer_check(spec, side).unwrap();
            if !r.equal {
                bad.push(format!("{} {side}", spec.id()));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{} pairs x 2 sides, mismatches {bad:?}", families.len()))
}

fn howe_correspondence() -> Outcome {
    let start = Instant::now();
    let pairs = [
        (Family::GlReal, vec![1, 1]),
        (Family::Unitary, vec![1, 0, 1, 0]),
        (Family::Unitary, vec![1, 1, 1, 0]),
        (Family::RealSymplectic, vec![1, 1]),
        (Family::GlComplex, vec![1, 1]),
        (Family::ComplexGl, vec![1, 1]),
        (Family::GlQuaternionic, vec![1, 1]),
        (Family::ComplexSymplectic, vec![1, 1]),
        (Family::ComplexSymplecticReal, vec![1, 1]),
    ];
    let mut bad = Vec::new();
    for (f, p) in &pairs {
        let r = howe_check(&pair(*f, p)).unwrap();
        if !(r.equal && r.reverse.equal && r.mult_free && r.spinor_dim <= 64) {
            bad.push(r.pair);
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(300);
    Outcome::new(pass, format!("{} pairs, failures {bad:?}, {elapsed:.2?} (< 300 s)", pairs.len()))
}

fn random_so(space: &SpaceRef, rng: &mut ChaCha8Rng) -> OrthogonalMap {
    let x = random_lie_combination(&LieElement::so_basis(space), space, 0.8, false, rng);
    let g = x.exp();
    if rng.random_bool(0.5) {
        // Both orientations reversed: determinant one, other component.
        let (p, _) = space.signature();
        let mut signs = vec![1i8; space.dim()];
        signs[0] = -1;
        signs[p] = -1;
        g.compose(&OrthogonalMap::diagonal(space, &signs).unwrap())
    } else {
        g
    }
}

fn random_exterior(dim: usize, rng: &mut ChaCha8Rng) -> ExteriorElement {
    let full = 1u64 << dim;
    ExteriorElement::from_terms(
        dim,
        (0..6).map(|_| (rng.random_range(0..full), C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))),
    )
}

/// Coefficient distance without the pruning done by element subtraction.
fn raw_distance(a: &CliffordElement, b: &CliffordElement) -> f64 {
    let mut diff: BTreeMap<u64, C64> = a.terms().iter().copied().collect();
    for &(m, c) in b.terms() {
        *diff.entry(m).or_default() -= c;
    }
    diff.values().map(|c| c.norm_sqr()).fold(0.0, |s, x| s + x).sqrt()
}

fn chevalley_intertwining() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst: f64 = 0.0;
    for (p, q) in [(2, 2), (4, 4)] {
        let space = real(p, q);
        for _ in 0..50 {
            let g = random_so(&space, &mut rng);
            let c: PinElement = lift(&g).unwrap();
            let w = random_exterior(space.dim(), &mut rng);
            let lhs = chevalley_t(&pinhowe::howe::exterior_action(&g, &w), &space).unwrap();
            let rhs = c.adjoint_action(&chevalley_t(&w, &space).unwrap());
            let diff = raw_distance(&lhs, &rhs) / (1.0 + rhs.coeff_norm());
            worst = worst.max(diff);
        }
    }
    Outcome::new(worst < 1e-9, format!("100 SO lifts, max relative defect {worst:.1e}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("Clifford axioms", clifford_axioms),
        ("double cover", covering),
        ("commuting lifts", commutation),
        ("extension classes", extension_labels),
        ("loop sign multiplicativity", multiplicativity),
        ("generator theorems", generator_theorems),
        ("transfer of invariants", transfer),
        ("Howe correspondence", howe_correspondence),
        ("Chevalley intertwining", chevalley_intertwining),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        if !out.pass {
            failures += 1;
        }
        println!("criterion {}: {} {name}: {}", k + 1, if out.pass { "PASS" } else { "FAIL" }, out.detail);
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
