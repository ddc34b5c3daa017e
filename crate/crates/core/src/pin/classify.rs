use super::{lift, PinElement};
use crate::error::{Error, Result};
use crate::orthogonal::{DualPairSpec, Family, LieElement, LoopKind, Side};
use crate::scalar::C64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const DEFAULT_STEPS: usize = 256;
/// Refinement stops here.
pub const MAX_STEPS: usize = 1 << 14;

/// A step is ambiguous when the two candidate lifts are within this ratio
/// of being equidistant from the previous one.
const AMBIGUITY_RATIO: f64 = 0.25;

/// Class of the pulled-back double cover of one member of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExtensionLabel {
    /// Split: the cover is `G × {±1}`.
    Trivial,
    /// The square-root-of-determinant cover of a single unitary factor.
    DetHalf,
    /// Nontrivial over both unitary factors of `U(p, q)`.
    Lambda {
        p: usize,
        q: usize,
    },
    NontrivialOther,
}

impl std::fmt::Display for ExtensionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtensionLabel::Trivial => write!(f, "trivial"),
            ExtensionLabel::DetHalf => write!(f, "det^1/2"),
            ExtensionLabel::Lambda { p, q } => write!(f, "Lambda({p},{q})"),
            ExtensionLabel::NontrivialOther => write!(f, "nontrivial"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionClass {
    /// Sign of the lifted loop for every named generator of `π1(K)`.
    pub loops: BTreeMap<String, i8>,
    pub label: ExtensionLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn try_lift_loop(x: &LieElement, steps: usize) -> Result<Option<i8>> {
    let start = PinElement::one(x.space());
    let mut prev = start.clone();
    let dtheta = 2.0 * std::f64::consts::PI / steps as f64;
    for k in 1..=steps {
        let g = x.scale(C64::new(dtheta * k as f64, 0.0)).exp();
        let y = lift(&g)?;
        let plus = y.distance(&prev);
        let minus = y.neg().distance(&prev);
        if plus.min(minus) > AMBIGUITY_RATIO * plus.max(minus) {
            return Ok(None);
        }
        prev = if plus <= minus { y } else { y.neg() };
    }
    let plus = prev.distance(&start);
    let minus = prev.neg().distance(&start);
    if plus.min(minus) > AMBIGUITY_RATIO * plus.max(minus) {
        return Ok(None);
    }
    Ok(Some(if plus <= minus { 1 } else { -1 }))
}

/// Sign of the endpoint of the lift of `θ ↦ exp(θ X)`, `θ ∈ [0, 2π]`,
/// started at `1`: `+1` when the loop lifts to a loop. Each step picks the
/// preimage closer to the previous lift; ambiguous steps double `steps` up
/// to [`MAX_STEPS`].
pub fn lift_loop(x: &LieElement, steps: usize) -> Result<i8> {
    let mut n = steps.max(8);
    loop {
        if let Some(sign) = try_lift_loop(x, n)? {
            return Ok(sign);
        }
        if n >= MAX_STEPS {
            return Err(Error::PathLiftUnresolved(n));
        }
        n *= 2;
    }
}

fn side_params(spec: &DualPairSpec, side: Side) -> (usize, usize) {
    let p = &spec.params;
    match (spec.family.param_count(), side) {
        (4, Side::G) => (p[0], p[1]),
        (4, Side::Gp) => (p[2], p[3]),
        (_, Side::G) => (p[0], 0),
        (_, Side::Gp) => (p[1], 0),
    }
}

/// Lifts every named loop of the maximal compact subgroup of one member
/// and labels the resulting extension class.
pub fn classify_extension(spec: &DualPairSpec, side: Side, steps: usize) -> Result<ExtensionClass> {
    let loops = spec.loops(side);
    if loops.is_empty() {
        return Ok(ExtensionClass {
            loops: BTreeMap::new(),
            label: ExtensionLabel::Trivial,
            note: Some("no loops".into()),
        });
    }
    let mut signs = BTreeMap::new();
    let mut unitary = Vec::new();
    for l in loops {
        let s = lift_loop(&l.generator, steps)?;
        signs.insert(l.name.clone(), s);
        if l.kind == LoopKind::Unitary {
            unitary.push(s);
        }
    }
    let nontrivial = signs.values().filter(|&&s| s < 0).count();
    let unitary_nontrivial = unitary.iter().filter(|&&s| s < 0).count();
    let label = if nontrivial == 0 {
        ExtensionLabel::Trivial
    } else if nontrivial == unitary_nontrivial && unitary.len() == 1 {
        ExtensionLabel::DetHalf
    } else if spec.family == Family::Unitary && nontrivial == 2 && unitary_nontrivial == 2 {
        let (p, q) = side_params(spec, side);
        ExtensionLabel::Lambda { p, q }
    } else {
        ExtensionLabel::NontrivialOther
    };
    Ok(ExtensionClass { loops: signs, label, note: None })
}
