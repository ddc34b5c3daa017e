//! Isometries and Lie-algebra elements of a quadratic space, and concrete
//! realisations of the classified irreducible reductive dual pairs.

mod complexify;
mod families;
mod model;
mod realify;

pub use complexify::{complexify, Complexification, Summand};
pub use families::{build_pair, DualPairSpec, Family, GroupData, Loop, LoopKind, NamedMap, Side};
pub use model::{lie_algebra_basis, FormKind, KField};
pub use realify::{kl_index, realify_complex, realify_quaternionic, Realification};

use crate::clifford::SpaceRef;
use crate::error::{Error, Result};
use crate::linalg::{expm, CMat};
use crate::scalar::C64;
use rand::Rng;

/// Tolerance for isometry and antisymmetry checks.
pub const GROUP_TOL: f64 = 1e-9;

fn metric(space: &SpaceRef) -> CMat {
    CMat::from_diagonal(&nalgebra::DVector::from_iterator(
        space.dim(),
        space.norms().iter().map(|&n| C64::new(n as f64, 0.0)),
    ))
}

/// Relative defect `|g^T B g - B|`; the bilinear transpose is used for both
/// fields.
fn isometry_defect(space: &SpaceRef, m: &CMat) -> f64 {
    let b = metric(space);
    (m.transpose() * &b * m - &b).norm() / (1.0 + m.norm_squared())
}

/// An isometry of `(E, b)` as a matrix in the distinguished basis.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalMap {
    space: SpaceRef,
    matrix: CMat,
}

impl OrthogonalMap {
    /// Checks `g^T B g = B` to [`GROUP_TOL`].
    pub fn new(space: &SpaceRef, matrix: CMat) -> Result<Self> {
        if matrix.shape() != (space.dim(), space.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "{:?} matrix on a {}-dim space",
                matrix.shape(),
                space.dim()
            )));
        }
        let defect = isometry_defect(space, &matrix);
        if defect > GROUP_TOL {
            return Err(Error::NotIsometry(defect));
        }
        Ok(Self { space: space.clone(), matrix })
    }

    pub fn identity(space: &SpaceRef) -> Self {
        Self { space: space.clone(), matrix: CMat::identity(space.dim(), space.dim()) }
    }

    /// Reflection `x ↦ x - 2 b(x,v)/b(v,v) v` along a non-isotropic `v`.
    pub fn reflection(space: &SpaceRef, v: &[C64]) -> Result<Self> {
        let n = space.dim();
        let bvv: C64 = (0..n).map(|i| v[i] * v[i] * space.norm(i) as f64).sum();
        if bvv.norm() < 1e-8 {
            return Err(Error::IsotropicPivot(0));
        }
        let matrix = CMat::from_fn(n, n, |r, c| {
            let id = if r == c { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            id - v[r] * v[c] * (2.0 * space.norm(c) as f64) / bvv
        });
        Ok(Self { space: space.clone(), matrix })
    }

    /// Diagonal isometry with the given `±1` entries.
    pub fn diagonal(space: &SpaceRef, signs: &[i8]) -> Result<Self> {
        if signs.len() != space.dim() {
            return Err(Error::DimensionMismatch("diagonal length".into()));
        }
        let d = nalgebra::DVector::from_iterator(signs.len(), signs.iter().map(|&s| C64::new(s as f64, 0.0)));
        Self::new(space, CMat::from_diagonal(&d))
    }

    pub(crate) fn from_parts_unchecked(space: &SpaceRef, matrix: CMat) -> Self {
        Self { space: space.clone(), matrix }
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.space, other.space, "composition across spaces");
        Self { space: self.space.clone(), matrix: &self.matrix * &other.matrix }
    }

    /// `B g^T B`.
    pub fn inverse(&self) -> Self {
        let b = metric(&self.space);
        Self { space: self.space.clone(), matrix: &b * self.matrix.transpose() * &b }
    }

    pub fn isometry_defect(&self) -> f64 {
        isometry_defect(&self.space, &self.matrix)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.space == other.space && (&self.matrix - &other.matrix).norm() <= tol * (1.0 + self.matrix.norm())
    }

    /// Image of the `i`-th basis vector.
    pub fn column(&self, i: usize) -> Vec<C64> {
        self.matrix.column(i).iter().copied().collect()
    }

    /// `±1` entries when the matrix is diagonal with entries `±1`.
    pub fn diagonal_signs(&self) -> Option<Vec<i8>> {
        let n = self.space.dim();
        let mut out = Vec::with_capacity(n);
        for r in 0..n {
            for c in 0..n {
                let z = self.matrix[(r, c)];
                if r != c && z.norm() > 1e-12 {
                    return None;
                }
            }
            let d = self.matrix[(r, r)];
            if (d - C64::new(1.0, 0.0)).norm() < 1e-12 {
                out.push(1);
            } else if (d + C64::new(1.0, 0.0)).norm() < 1e-12 {
                out.push(-1);
            } else {
                return None;
            }
        }
        Some(out)
    }

    pub fn det(&self) -> C64 {
        self.matrix.determinant()
    }
}

/// Element of `so(E, b)`: `X^T B + B X = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LieElement {
    space: SpaceRef,
    matrix: CMat,
}

impl LieElement {
    pub fn new(space: &SpaceRef, matrix: CMat) -> Result<Self> {
        if matrix.shape() != (space.dim(), space.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "{:?} matrix on a {}-dim space",
                matrix.shape(),
                space.dim()
            )));
        }
        let b = metric(space);
        let defect = (matrix.transpose() * &b + &b * &matrix).norm() / (1.0 + matrix.norm());
        if defect > GROUP_TOL {
            return Err(Error::NotAntisymmetric(defect));
        }
        Ok(Self { space: space.clone(), matrix })
    }

    pub fn zero(space: &SpaceRef) -> Self {
        Self { space: space.clone(), matrix: CMat::zeros(space.dim(), space.dim()) }
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    /// Generator of the rotation in the `(i, j)` plane:
    /// `norms[j] E_ij - norms[i] E_ji`.
    pub fn elementary(space: &SpaceRef, i: usize, j: usize) -> Self {
        let mut m = CMat::zeros(space.dim(), space.dim());
        m[(i, j)] = C64::new(space.norm(j) as f64, 0.0);
        m[(j, i)] = C64::new(-space.norm(i) as f64, 0.0);
        Self { space: space.clone(), matrix: m }
    }

    /// All elementary generators, `i < j`.
    pub fn so_basis(space: &SpaceRef) -> Vec<Self> {
        let n = space.dim();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| Self::elementary(space, i, j)).collect()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { space: self.space.clone(), matrix: &self.matrix * s }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { space: self.space.clone(), matrix: &self.matrix + &other.matrix }
    }

    pub fn bracket(&self, other: &Self) -> Self {
        Self { space: self.space.clone(), matrix: &self.matrix * &other.matrix - &other.matrix * &self.matrix }
    }

    pub fn exp(&self) -> OrthogonalMap {
        OrthogonalMap::from_parts_unchecked(&self.space, expm(&self.matrix))
    }

    /// `X v`.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        (0..self.space.dim()).map(|r| (0..v.len()).map(|c| self.matrix[(r, c)] * v[c]).sum()).collect()
    }

    pub(crate) fn from_parts_unchecked(space: &SpaceRef, matrix: CMat) -> Self {
        Self { space: space.clone(), matrix }
    }
}

/// Random combination `Σ r_k X_k` with `r_k` uniform in `[-scale, scale]`,
/// complex coefficients when `complex` is set.
pub fn random_lie_combination<R: Rng>(
    gens: &[LieElement],
    space: &SpaceRef,
    scale: f64,
    complex: bool,
    rng: &mut R,
) -> LieElement {
    let mut acc = LieElement::zero(space);
    for g in gens {
        let re = rng.random_range(-scale..=scale);
        let im = if complex { rng.random_range(-scale..=scale) } else { 0.0 };
        acc = acc.add(&g.scale(C64::new(re, im)));
    }
    acc
}

/// Random isometry of a real or complex space: an exponential of a random
/// `so(E, b)` element times a random subset of coordinate reflections.
pub fn random_isometry<R: Rng>(space: &SpaceRef, rng: &mut R) -> OrthogonalMap {
    let complex = space.field() == crate::clifford::FieldKind::Complex;
    let x = random_lie_combination(&LieElement::so_basis(space), space, 0.6, complex, rng);
    let mut g = x.exp();
    let (p, q) = space.signature();
    for start in [0, p] {
        if start < p + q && (start < p || q > 0) && rng.random_bool(0.5) {
            let mut signs = vec![1i8; space.dim()];
            signs[start] = -1;
            g = g.compose(&OrthogonalMap::diagonal(space, &signs).expect("diagonal sign matrix"));
        }
    }
    g
}
