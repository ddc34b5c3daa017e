use super::families::{DualPairSpec, Family, Side, StructureTag};
use super::{LieElement, OrthogonalMap};
use crate::clifford::SpaceRef;
use crate::linalg::{null_space_scaled, CMat, RANK_TOL};
use crate::scalar::C64;

/// A joint eigenspace of the structure operators inside `E_C`.
#[derive(Debug, Clone)]
pub struct Summand {
    pub label: String,
    /// Orthonormal columns in ambient coordinates.
    pub basis: CMat,
}

impl Summand {
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }
}

/// Complexified ambient space with both groups acting on it.
#[derive(Debug, Clone)]
pub struct Complexification {
    /// `E_C` with the distinguished basis of `E`; norms are kept so that
    /// real forms stay visible.
    pub space: SpaceRef,
    pub g_name: String,
    pub gp_name: String,
    pub g_lie: Vec<LieElement>,
    pub gp_lie: Vec<LieElement>,
    pub g_reps: Vec<OrthogonalMap>,
    pub gp_reps: Vec<OrthogonalMap>,
    /// `E_C` as a direct sum of pieces stable under both groups.
    pub summands: Vec<Summand>,
}

impl Complexification {
    pub fn lie(&self, side: Side) -> &[LieElement] {
        match side {
            Side::G => &self.g_lie,
            Side::Gp => &self.gp_lie,
        }
    }

    pub fn reps(&self, side: Side) -> &[OrthogonalMap] {
        match side {
            Side::G => &self.g_reps,
            Side::Gp => &self.gp_reps,
        }
    }
}

fn complex_group_name(family: Family, params: &[usize], side: Side) -> String {
    let (a, b) = match (family.param_count(), side) {
        (4, Side::G) => (params[0], params[1]),
        (4, Side::Gp) => (params[2], params[3]),
        (_, Side::G) => (params[0], 0),
        (_, Side::Gp) => (params[1], 0),
    };
    let n = a + b;
    match family {
        Family::RealOrthogonal => format!("O({n},C)"),
        Family::Unitary => format!("GL({n},C)"),
        Family::RealSymplectic | Family::ComplexSymplectic => format!("Sp({},C)", 2 * n),
        Family::ComplexOrthogonalReal => format!("O({n},C) x O({n},C)"),
        Family::ComplexSymplecticReal => format!("Sp({0},C) x Sp({0},C)", 2 * n),
        Family::QuaternionicUnitary => format!("Sp({},C)", 2 * n),
        Family::QuaternionicSkew => format!("O({},C)", 2 * n),
        Family::GlReal | Family::ComplexGl => format!("GL({n},C)"),
        Family::GlComplex => format!("GL({n},C) x GL({n},C)"),
        Family::GlQuaternionic => format!("GL({},C)", 2 * n),
        Family::ComplexOrthogonal => format!("O({n},C)"),
    }
}

fn label(dual: bool, conj: bool) -> String {
    match (dual, conj) {
        (false, false) => "U⊗V",
        (false, true) => "Ū⊗V̄",
        (true, false) => "U*⊗V*",
        (true, true) => "Ū*⊗V̄*",
    }
    .to_string()
}

/// Restricts `basis` to the `λ`-eigenspace of `op`.
fn eigen_restrict(op: &CMat, basis: &CMat, lambda: C64) -> CMat {
    let d = op.nrows();
    let shifted = op - CMat::identity(d, d) * lambda;
    let scale = shifted.norm();
    let coeffs = null_space_scaled(&(shifted * basis), RANK_TOL, scale);
    basis * coeffs
}

/// Complexification of a real (or already complex) pair: the ambient space
/// over `C`, Lie generators and component representatives acting on it, and
/// the decomposition of `E_C` cut out by the commuting structure operators.
pub fn complexify(spec: &DualPairSpec) -> Complexification {
    let space = spec.ambient.complexified().shared();
    let d = space.dim();
    let move_lie = |side: Side| -> Vec<LieElement> {
        spec.lie_generators(side).iter().map(|x| LieElement::from_parts_unchecked(&space, x.matrix().clone())).collect()
    };
    let move_reps = |side: Side| -> Vec<OrthogonalMap> {
        spec.component_reps(side)
            .iter()
            .map(|r| OrthogonalMap::from_parts_unchecked(&space, r.map.matrix().clone()))
            .collect()
    };

    let mut pieces: Vec<(bool, bool, CMat)> = vec![(false, false, CMat::identity(d, d))];
    for (tag, op) in spec.structure_operators() {
        let eigen: [(C64, bool); 2] = match tag {
            StructureTag::ComplexStructure => [(C64::new(0.0, 1.0), false), (C64::new(0.0, -1.0), true)],
            StructureTag::Grading => [(C64::new(1.0, 0.0), false), (C64::new(-1.0, 0.0), true)],
        };
        pieces = pieces
            .into_iter()
            .flat_map(|(dual, conj, basis)| {
                eigen.iter().map(move |&(lambda, flag)| {
                    let b = eigen_restrict(op, &basis, lambda);
                    match tag {
                        StructureTag::ComplexStructure => (dual, flag, b),
                        StructureTag::Grading => (flag, conj, b),
                    }
                })
            })
            .filter(|(_, _, b)| b.ncols() > 0)
            .collect();
    }
    let summands = if pieces.len() == 1 {
        vec![Summand { label: "E".into(), basis: pieces.remove(0).2 }]
    } else {
        pieces.into_iter().map(|(dual, conj, basis)| Summand { label: label(dual, conj), basis }).collect()
    };

    Complexification {
        g_name: complex_group_name(spec.family, &spec.params, Side::G),
        gp_name: complex_group_name(spec.family, &spec.params, Side::Gp),
        g_lie: move_lie(Side::G),
        gp_lie: move_lie(Side::Gp),
        g_reps: move_reps(Side::G),
        gp_reps: move_reps(Side::Gp),
        summands,
        space,
    }
}
