use super::algebra::{commutant, generated_algebra, is_commutative, same_subspace};
use super::invariants::{invariants_with, InvariantSpace, RepAction, MAX_INVARIANT_DIM};
use crate::clifford::{chevalley_t, SpaceRef};
use crate::error::{Error, Result};
use crate::linalg::{CMat, RANK_TOL};
use crate::orthogonal::{complexify, DualPairSpec, Side};
use crate::pin::lift;
use crate::spinor::{lie_to_clifford, SpinorSpace};
use serde::{Deserialize, Serialize};

/// Tolerance for subspace comparisons in `End(S)`.
pub const SUBSPACE_TOL: f64 = 1e-8;

/// The spinor module of `E_C` with the operators `dΠ(X)` for complexified
/// Lie generators and `Π(x̃)` for lifted component representatives.
pub struct PairOperators {
    pub spinors: SpinorSpace,
    pub g: Vec<CMat>,
    pub gp: Vec<CMat>,
}

impl PairOperators {
    pub fn side(&self, side: Side) -> &[CMat] {
        match side {
            Side::G => &self.g,
            Side::Gp => &self.gp,
        }
    }

    pub fn dim(&self) -> usize {
        self.spinors.dim()
    }
}

pub fn pair_operators(spec: &DualPairSpec) -> Result<PairOperators> {
    let cx = complexify(spec);
    let spinors = SpinorSpace::new(&cx.space)?;
    let side = |s: Side| -> Result<Vec<CMat>> {
        let mut ops = Vec::new();
        for x in cx.lie(s) {
            ops.push(spinors.gamma_tilde(&lie_to_clifford(x))?);
        }
        for r in spec.component_reps(s) {
            ops.push(spinors.pi_rep(&lift(&r.map)?)?);
        }
        Ok(ops)
    };
    let g = side(Side::G)?;
    let gp = side(Side::Gp)?;
    Ok(PairOperators { spinors, g, gp })
}

/// `γ̃ ∘ T` applied to every invariant, as `vec` columns.
pub fn transfer_invariants(inv: &InvariantSpace, spinors: &SpinorSpace) -> Result<CMat> {
    let space: &SpaceRef = spinors.space();
    if inv.dim != space.dim() {
        return Err(Error::DimensionMismatch(format!("invariants over {} vs spinors over {}", inv.dim, space.dim())));
    }
    let elements = inv.elements();
    let d = spinors.dim();
    let mut out = CMat::zeros(d * d, elements.len());
    for (j, w) in elements.iter().enumerate() {
        let op = spinors.gamma_tilde(&chevalley_t(w, space)?)?;
        out.column_mut(j).copy_from_slice(op.as_slice());
    }
    Ok(out)
}

/// Transferred invariants against the commutant of the lifted group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferReport {
    pub invariant_dims: Vec<usize>,
    pub dim_transferred: usize,
    pub dim_commutant: usize,
    pub equal: bool,
}

/// Compares `γ̃ ∘ T (Λ(E_C)^G)` with `Comm⟨G̃⟩`. Representatives with odd
/// lifts act on `Λ^d` with the extra sign `(-1)^d`, which is how
/// conjugation by an odd Clifford element transports through `T`.
pub fn transfer_check(spec: &DualPairSpec, side: Side) -> Result<TransferReport> {
    let ops = pair_operators(spec)?;
    let inv = invariants_with(spec, side, RepAction::Conjugation)?;
    let transferred = transfer_invariants(&inv, &ops.spinors)?;
    let comm = commutant(ops.side(side), ops.dim())?;
    Ok(TransferReport {
        invariant_dims: inv.dims(),
        dim_transferred: transferred.ncols(),
        dim_commutant: comm.ncols(),
        equal: same_subspace(&transferred, &comm, SUBSPACE_TOL),
    })
}

/// `Comm⟨G̃′⟩` against `⟨G̃⟩`, the direction opposite to the main one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReverseCheck {
    pub dim_commutant: usize,
    pub dim_algebra: usize,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoweReport {
    pub pair: String,
    pub spinor_dim: usize,
    /// `dim Comm⟨G̃⟩`.
    pub dim_commutant: usize,
    /// `dim ⟨G̃′⟩`.
    pub dim_algebra: usize,
    pub equal: bool,
    pub reverse: ReverseCheck,
    /// `Comm⟨G̃ ∪ G̃′⟩` is commutative.
    pub mult_free: bool,
    /// `dim Comm⟨G̃ ∪ G̃′⟩`: the number of joint isotypic pieces when
    /// `mult_free` holds.
    pub isotypic_count: usize,
}

/// Double-commutant verification of the correspondence for one pair.
pub fn howe_check(spec: &DualPairSpec) -> Result<HoweReport> {
    if !spec.in_howe_scope() {
        return Err(Error::Unsupported(format!(
            "{} is an orthogonal pair, outside the spinorial duality check",
            spec.id()
        )));
    }
    let dim = spec.ambient.dim();
    if dim > MAX_INVARIANT_DIM {
        return Err(Error::CapExceeded(format!("Howe checks need dim E <= {MAX_INVARIANT_DIM}, got {dim}")));
    }
    let ops = pair_operators(spec)?;
    let d = ops.dim();
    let comm_g = commutant(&ops.g, d)?;
    let alg_gp = generated_algebra(&ops.gp, d)?;
    let comm_gp = commutant(&ops.gp, d)?;
    let alg_g = generated_algebra(&ops.g, d)?;
    let joint: Vec<CMat> = ops.g.iter().chain(&ops.gp).cloned().collect();
    let comm_joint = commutant(&joint, d)?;
    Ok(HoweReport {
        pair: spec.id(),
        spinor_dim: d,
        dim_commutant: comm_g.ncols(),
        dim_algebra: alg_gp.ncols(),
        equal: same_subspace(&comm_g, &alg_gp, SUBSPACE_TOL),
        reverse: ReverseCheck {
            dim_commutant: comm_gp.ncols(),
            dim_algebra: alg_g.ncols(),
            equal: same_subspace(&comm_gp, &alg_g, SUBSPACE_TOL),
        },
        mult_free: is_commutative(&comm_joint, d, RANK_TOL.sqrt()),
        isotypic_count: comm_joint.ncols(),
    })
}
