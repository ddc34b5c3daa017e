use super::{lift, PinElement};
use crate::clifford::CliffordElement;
use crate::error::{Error, Result};
use crate::orthogonal::{DualPairSpec, OrthogonalMap, Side};
use crate::scalar::{ExactComplex, Scalar, C64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Coefficient arithmetic used for lifts of component representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Gaussian rationals; requires diagonal representatives.
    Exact,
    #[default]
    Float,
}

/// Sign of the group commutator `[x̃, ỹ] = x̃ ỹ x̃⁻¹ ỹ⁻¹` of two lifts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorVerdict {
    pub gen_pair: [String; 2],
    pub sign: i8,
}

fn top_masks<S: Scalar>(x: &CliffordElement<S>, k: usize) -> Vec<u64> {
    let mut terms: Vec<(u64, f64)> = x.terms().iter().map(|(m, c)| (*m, c.magnitude())).collect();
    terms.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    terms.into_iter().take(k).map(|(m, _)| m).collect()
}

/// Ratio `a / b` of two coefficients that must be `±1`.
fn unit_ratio<S: Scalar>(a: &S, b: &S) -> Result<i8> {
    if a.approx_eq(b) {
        Ok(1)
    } else if a.approx_eq(&(-b.clone())) {
        Ok(-1)
    } else {
        let (a, b) = (a.to_c64(), b.to_c64());
        let r = a / b;
        if (r - C64::new(1.0, 0.0)).norm() < 1e-7 {
            Ok(1)
        } else if (r + C64::new(1.0, 0.0)).norm() < 1e-7 {
            Ok(-1)
        } else {
            Err(Error::NotSignCommuting)
        }
    }
}

/// `σ ∈ {±1}` with `x y = σ z`, read off the dominant coefficients of `z`
/// without forming the product.
pub fn product_sign<S: Scalar>(x: &CliffordElement<S>, y: &CliffordElement<S>, z: &CliffordElement<S>) -> Result<i8> {
    let masks = top_masks(z, 3);
    if masks.is_empty() {
        return Err(Error::NotSignCommuting);
    }
    let mut sign = None;
    for m in masks {
        let s = unit_ratio(&x.product_coeff(y, m), &z.coeff(m))?;
        if sign.is_some_and(|t| t != s) {
            return Err(Error::NotSignCommuting);
        }
        sign = Some(s);
    }
    Ok(sign.expect("at least one mask"))
}

/// `σ` with `x y = σ y x`. Exact backends compare full products; float
/// backends sample coefficients at masks built from the dominant terms.
pub fn commutator_sign<S: Scalar>(x: &PinElement<S>, y: &PinElement<S>) -> Result<i8> {
    let (a, b) = (x.value(), y.value());
    if S::EXACT || a.len() * b.len() <= 1 << 12 {
        let xy = a.try_mul(b)?;
        let yx = b.try_mul(a)?;
        if xy.approx_eq(&yx) {
            return Ok(1);
        }
        if xy.approx_eq(&-&yx) {
            return Ok(-1);
        }
        return Err(Error::NotSignCommuting);
    }
    let mut best: Option<(f64, i8)> = None;
    for ma in top_masks(a, 4) {
        for mb in top_masks(b, 4) {
            let m = ma ^ mb;
            let p = a.product_coeff(b, m);
            if p.magnitude() < 1e-6 {
                continue;
            }
            let s = unit_ratio(&p, &b.product_coeff(a, m))?;
            if best.is_none_or(|(mag, _)| p.magnitude() > mag) {
                best = Some((p.magnitude(), s));
            }
        }
    }
    best.map(|(_, s)| s).ok_or(Error::NotSignCommuting)
}

fn named_lifts(
    spec: &DualPairSpec,
    side: Side,
    probes: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(String, PinElement)>> {
    let mut out = Vec::new();
    for rep in spec.component_reps(side) {
        out.push((rep.name.clone(), lift(&rep.map)?));
    }
    for k in 0..probes {
        let g = spec.random_element(side, 0.7, rng);
        out.push((format!("random{}", k + 1), lift(&g)?));
    }
    Ok(out)
}

fn exact_lifts(spec: &DualPairSpec, side: Side) -> Result<Vec<(String, PinElement<ExactComplex>)>> {
    spec.component_reps(side)
        .iter()
        .map(|rep| {
            let signs = rep
                .map
                .diagonal_signs()
                .ok_or_else(|| Error::Unsupported(format!("exact lift of non-diagonal {}", rep.name)))?;
            Ok((rep.name.clone(), PinElement::lift_diagonal(&spec.ambient, &signs)?))
        })
        .collect()
}

/// Commutator signs of lifted generators of `G` and `G'`. Because the sign
/// is locally constant it factors through `π0(G) × π0(G')`, so component
/// representatives suffice; `probes` random elements per side (float lifts,
/// seeded) add identity-component checks.
pub fn commutator_pairing(
    spec: &DualPairSpec,
    backend: Backend,
    probes: usize,
    seed: u64,
) -> Result<Vec<CommutatorVerdict>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verdicts = Vec::new();
    let mut record = |a: &str, b: &str, sign: i8| {
        verdicts.push(CommutatorVerdict { gen_pair: [a.to_string(), b.to_string()], sign });
    };
    match backend {
        Backend::Exact => {
            let gs = exact_lifts(spec, Side::G)?;
            let hs = exact_lifts(spec, Side::Gp)?;
            for (a, x) in &gs {
                for (b, y) in &hs {
                    record(a, b, commutator_sign(x, y)?);
                }
            }
            if probes > 0 {
                let gs = named_lifts(spec, Side::G, probes, &mut rng)?;
                let hs = named_lifts(spec, Side::Gp, probes, &mut rng)?;
                let nr = spec.component_reps(Side::G).len();
                let nrp = spec.component_reps(Side::Gp).len();
                for (i, (a, x)) in gs.iter().enumerate() {
                    for (j, (b, y)) in hs.iter().enumerate() {
                        if i >= nr || j >= nrp {
                            record(a, b, commutator_sign(x, y)?);
                        }
                    }
                }
            }
        }
        Backend::Float => {
            let gs = named_lifts(spec, Side::G, probes, &mut rng)?;
            let hs = named_lifts(spec, Side::Gp, probes, &mut rng)?;
            for (a, x) in &gs {
                for (b, y) in &hs {
                    record(a, b, commutator_sign(x, y)?);
                }
            }
        }
    }
    Ok(verdicts)
}

/// The deterministic section `s(g)`: the lift whose dominant coefficient
/// (lowest mask among ties) has positive real part, or positive imaginary
/// part when the real part vanishes.
pub fn section(g: &OrthogonalMap) -> Result<PinElement> {
    let x = lift(g)?;
    let (_, c) = x.value().dominant_term().ok_or_else(|| Error::NotPin("zero element".into()))?;
    let flip = if c.re.abs() > 1e-9 { c.re < 0.0 } else { c.im < 0.0 };
    Ok(if flip { x.neg() } else { x })
}

/// `z(g, h) = s(g) s(h) s(gh)⁻¹ ∈ {±1}` for elements of the embedded group.
pub fn cocycle(spec: &DualPairSpec, g: &OrthogonalMap, h: &OrthogonalMap) -> Result<i8> {
    if g.space() != &spec.ambient || h.space() != &spec.ambient {
        return Err(Error::SpaceMismatch("cocycle arguments live outside the pair".into()));
    }
    let sg = section(g)?;
    let sh = section(h)?;
    let sgh = section(&g.compose(h))?;
    product_sign(sg.value(), sh.value(), sgh.value())
}
