use super::exterior::{derivation_matrix, group_matrix, DegreeBasis};
use crate::clifford::{ExteriorElement, Parity};
use crate::error::{Error, Result};
use crate::linalg::{null_space_scaled, CMat, RANK_TOL};
use crate::orthogonal::{complexify, DualPairSpec, OrthogonalMap, Side};
use crate::pin::lift;
use crate::scalar::C64;

/// Largest `dim E_C` for which invariants are computed.
pub const MAX_INVARIANT_DIM: usize = 12;

/// `Λ(E_C)^G`, degree by degree. Column `j` of `degrees[d]` holds the
/// coordinates of an invariant over the blades of [`DegreeBasis::new`]`(dim, d)`.
#[derive(Debug, Clone)]
pub struct InvariantSpace {
    pub dim: usize,
    pub degrees: Vec<CMat>,
}

impl InvariantSpace {
    /// Invariant dimension in each degree `0..=dim`.
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|b| b.ncols()).collect()
    }

    pub fn total(&self) -> usize {
        self.dims().iter().sum()
    }

    /// Every basis vector as an exterior element.
    pub fn elements(&self) -> Vec<ExteriorElement> {
        let mut out = Vec::new();
        for (d, b) in self.degrees.iter().enumerate() {
            let basis = DegreeBasis::new(self.dim, d);
            for col in b.column_iter() {
                out.push(basis.element(col.as_slice()));
            }
        }
        out
    }
}

/// How a component representative is required to act on invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepAction {
    /// `Λg w = w`.
    Plain,
    /// `(-1)^d Λg w = w` whenever the lift of `g` is odd. These are exactly
    /// the exterior elements whose Clifford images commute with the lifts.
    Conjugation,
}

/// Joint nullspace of the derivations on one degree, then the fixed space of
/// the (possibly twisted) representatives.
fn degree_invariants(lie: &[CMat], reps: &[(CMat, bool)], basis: &DegreeBasis) -> CMat {
    let n = basis.len();
    let mut kernel = CMat::identity(n, n);
    for x in lie {
        if kernel.ncols() == 0 {
            break;
        }
        let dx = derivation_matrix(x, basis);
        let scale = dx.norm();
        kernel = &kernel * null_space_scaled(&(dx * &kernel), RANK_TOL, scale);
    }
    let twist = if basis.degree % 2 == 1 { -1.0 } else { 1.0 };
    for (g, odd) in reps {
        if kernel.ncols() == 0 {
            break;
        }
        let mut m = group_matrix(g, basis);
        if *odd {
            m *= C64::new(twist, 0.0);
        }
        let shifted = m - CMat::identity(n, n);
        let scale = shifted.norm();
        kernel = &kernel * null_space_scaled(&(shifted * &kernel), RANK_TOL, scale);
    }
    kernel
}

/// Invariants of explicit Lie matrices and group matrices on `Λ(C^dim)`.
/// The flag on each group matrix turns on the `(-1)^d` twist.
pub fn invariants_of(dim: usize, lie: &[CMat], reps: &[(CMat, bool)]) -> Result<InvariantSpace> {
    if dim > MAX_INVARIANT_DIM {
        return Err(Error::CapExceeded(format!("invariants need dim E_C <= {MAX_INVARIANT_DIM}, got {dim}")));
    }
    let degrees = (0..=dim).map(|d| degree_invariants(lie, reps, &DegreeBasis::new(dim, d))).collect();
    Ok(InvariantSpace { dim, degrees })
}

/// `Λ(E_C)^G` for one member of a pair, from the complexified Lie algebra
/// and the component representatives.
pub fn invariants(spec: &DualPairSpec, side: Side) -> Result<InvariantSpace> {
    invariants_with(spec, side, RepAction::Plain)
}

pub fn invariants_with(spec: &DualPairSpec, side: Side, action: RepAction) -> Result<InvariantSpace> {
    let dim = spec.ambient.dim();
    if dim > MAX_INVARIANT_DIM {
        return Err(Error::CapExceeded(format!("invariants need dim E_C <= {MAX_INVARIANT_DIM}, got {dim}")));
    }
    let cx = complexify(spec);
    let lie: Vec<CMat> = cx.lie(side).iter().map(|x| x.matrix().clone()).collect();
    let reps = rep_matrices(spec, side, action)?;
    invariants_of(dim, &lie, &reps)
}

fn rep_matrices(spec: &DualPairSpec, side: Side, action: RepAction) -> Result<Vec<(CMat, bool)>> {
    spec.component_reps(side)
        .iter()
        .map(|r| {
            let odd = match action {
                RepAction::Plain => false,
                RepAction::Conjugation => lift(&r.map)?.parity() == Parity::Odd,
            };
            Ok((r.map.matrix().clone(), odd))
        })
        .collect()
}

/// Residual of `w` under every Lie derivation and representative of one
/// side, relative to `|w|`.
pub fn invariance_defect(spec: &DualPairSpec, side: Side, w: &ExteriorElement) -> f64 {
    let scale = w.terms().iter().map(|(_, c)| c.norm_sqr()).sum::<f64>().sqrt().max(1e-300);
    let norm = |e: &ExteriorElement| e.terms().iter().map(|(_, c)| c.norm_sqr()).sum::<f64>().sqrt();
    let cx = complexify(spec);
    let mut worst: f64 = 0.0;
    for x in cx.lie(side) {
        let xn = x.matrix().norm().max(1e-300);
        worst = worst.max(norm(&super::exterior::apply_derivation(x.matrix(), w)) / (xn * scale));
    }
    for r in spec.component_reps(side) {
        worst = worst.max(norm(&super::exterior::apply_group(r.map.matrix(), w).sub(w)) / scale);
    }
    worst
}

/// Exterior action of an isometry, as used for the factorwise action `ρ̃₁`.
pub fn exterior_action(g: &OrthogonalMap, w: &ExteriorElement) -> ExteriorElement {
    super::exterior::apply_group(g.matrix(), w)
}
