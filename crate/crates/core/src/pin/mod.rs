//! The Pin double cover `π: Pin(E, b) -> O(E, b)`.
//!
//! Elements are parity-homogeneous multivectors `x` with `x τ(x) = ±1` whose
//! twisted conjugation `v ↦ α(x) v x⁻¹` preserves `E`. Lifting factors an
//! isometry into reflections; each reflection lifts to its unit vector.

mod classify;
mod pairing;

pub use classify::{classify_extension, lift_loop, ExtensionClass, ExtensionLabel, DEFAULT_STEPS, MAX_STEPS};
pub use pairing::{cocycle, commutator_pairing, commutator_sign, product_sign, section, Backend, CommutatorVerdict};

use crate::clifford::{CliffordElement, FieldKind, Parity, SpaceRef};
use crate::error::{Error, Result};
use crate::orthogonal::OrthogonalMap;
use crate::scalar::{Scalar, C64};

/// Pivot vectors with `|b(v, v)|` below this are treated as isotropic.
pub const ISOTROPY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct PinElement<S: Scalar = C64> {
    value: CliffordElement<S>,
    parity: Parity,
    spinor_norm: i8,
}

fn scalar_sign<S: Scalar>(x: &CliffordElement<S>) -> Option<i8> {
    let one = S::one();
    let mut sign = None;
    for (m, c) in x.terms() {
        if *m != 0 {
            if !c.approx_eq(&S::zero()) {
                return None;
            }
        } else if c.approx_eq(&one) {
            sign = Some(1);
        } else if c.approx_eq(&(-one.clone())) {
            sign = Some(-1);
        } else {
            return None;
        }
    }
    sign
}

impl<S: Scalar> PinElement<S> {
    /// Validates parity, the spinor norm and preservation of `E` under
    /// twisted conjugation.
    pub fn new_checked(value: CliffordElement<S>) -> Result<Self> {
        let parity = value.parity().ok_or(Error::NotHomogeneous)?;
        let norm = value.try_mul(&value.tau())?;
        let spinor_norm = scalar_sign(&norm).ok_or_else(|| Error::NotPin("x τ(x) is not ±1".into()))?;
        let x = Self { value, parity, spinor_norm };
        let space = x.space().clone();
        for j in 0..space.dim() {
            let image = x.twisted_conjugate(&CliffordElement::basis_vector(&space, j));
            let stray = image.terms().iter().any(|(m, c)| m.count_ones() != 1 && !c.approx_eq(&S::zero()));
            if stray {
                return Err(Error::NotPin(format!("twisted conjugation moves e_{j} out of E")));
            }
        }
        Ok(x)
    }

    pub(crate) fn from_trusted(value: CliffordElement<S>, parity: Parity, spinor_norm: i8) -> Self {
        Self { value, parity, spinor_norm }
    }

    pub fn one(space: &SpaceRef) -> Self {
        Self { value: CliffordElement::one(space), parity: Parity::Even, spinor_norm: 1 }
    }

    /// The basis vector `e_i`, lifting the reflection along it.
    pub fn basis_vector(space: &SpaceRef, i: usize) -> Self {
        Self { value: CliffordElement::basis_vector(space, i), parity: Parity::Odd, spinor_norm: space.norm(i) }
    }

    pub fn value(&self) -> &CliffordElement<S> {
        &self.value
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `x τ(x)`.
    pub fn spinor_norm(&self) -> i8 {
        self.spinor_norm
    }

    pub fn space(&self) -> &SpaceRef {
        self.value.space()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            value: self.value.try_mul(&other.value)?,
            parity: if self.parity == other.parity { Parity::Even } else { Parity::Odd },
            spinor_norm: self.spinor_norm * other.spinor_norm,
        })
    }

    pub fn neg(&self) -> Self {
        Self { value: -&self.value, parity: self.parity, spinor_norm: self.spinor_norm }
    }

    /// `x⁻¹ = (x τ(x)) τ(x)`.
    pub fn inverse(&self) -> Self {
        let t = self.value.tau();
        let value = if self.spinor_norm < 0 { -&t } else { t };
        Self { value, parity: self.parity, spinor_norm: self.spinor_norm }
    }

    /// `α(x) c x⁻¹`.
    pub fn twisted_conjugate(&self, c: &CliffordElement<S>) -> CliffordElement<S> {
        let left = &self.value.alpha() * c;
        &left * &self.inverse().value
    }

    /// The algebra automorphism of `Cliff(E)` extending `π(x)`:
    /// `c ↦ x α^{|x|}(c) x⁻¹`.
    pub fn adjoint_action(&self, c: &CliffordElement<S>) -> CliffordElement<S> {
        let twisted = match self.parity {
            Parity::Even => c.clone(),
            Parity::Odd => c.alpha(),
        };
        &(&self.value * &twisted) * &self.inverse().value
    }

    /// `π(x)`: column `j` is the vector part of `α(x) e_j x⁻¹`.
    pub fn project(&self) -> OrthogonalMap {
        let space = self.space().clone();
        let n = space.dim();
        let ax = self.value.alpha();
        let inv = self.inverse().value;
        let mut m = crate::linalg::CMat::zeros(n, n);
        for j in 0..n {
            let left = &ax * &CliffordElement::basis_vector(&space, j);
            let col = left.product_grade(&inv, 1);
            for (mask, c) in col.terms() {
                m[(mask.trailing_zeros() as usize, j)] = c.to_c64();
            }
        }
        OrthogonalMap::from_parts_unchecked(&space, m)
    }

    pub fn to_float(&self) -> PinElement<C64> {
        PinElement { value: self.value.to_float(), parity: self.parity, spinor_norm: self.spinor_norm }
    }

    /// Lift of a diagonal `±1` isometry: the ascending product of the basis
    /// vectors it negates.
    pub fn lift_diagonal(space: &SpaceRef, signs: &[i8]) -> Result<Self> {
        if signs.len() != space.dim() {
            return Err(Error::DimensionMismatch("diagonal length".into()));
        }
        let mut x = Self::one(space);
        for (i, &s) in signs.iter().enumerate() {
            if s < 0 {
                x = x.mul(&Self::basis_vector(space, i))?;
            }
        }
        Ok(x)
    }
}

impl PinElement<C64> {
    /// Euclidean distance between coefficient vectors.
    pub fn distance(&self, other: &Self) -> f64 {
        (&self.value - &other.value).coeff_norm()
    }
}

fn bilinear(space: &SpaceRef, u: &[C64], v: &[C64]) -> C64 {
    (0..space.dim()).map(|i| u[i] * v[i] * space.norm(i) as f64).sum()
}

/// Unit vector along `v`: `b(w, w) = ±1` over `R`, `b(w, w) = 1` over `C`.
fn normalise(space: &SpaceRef, v: &[C64]) -> (Vec<C64>, i8) {
    let q = bilinear(space, v, v);
    match space.field() {
        FieldKind::Real => {
            let s = q.re.abs().sqrt();
            (v.iter().map(|z| C64::new(z.re / s, 0.0)).collect(), if q.re > 0.0 { 1 } else { -1 })
        }
        FieldKind::Complex => {
            let s = q.sqrt();
            (v.iter().map(|z| z / s).collect(), 1)
        }
    }
}

/// Applies the reflection along `w` (with `b(w, w) = ε`) to every column.
fn reflect_columns(space: &SpaceRef, m: &mut crate::linalg::CMat, w: &[C64], eps: i8) {
    let n = space.dim();
    for j in 0..n {
        let col: Vec<C64> = (0..n).map(|r| m[(r, j)]).collect();
        let k = bilinear(space, &col, w) * (2.0 / eps as f64);
        for r in 0..n {
            m[(r, j)] -= k * w[r];
        }
    }
}

/// A preimage of `g` under `π`, built from a Cartan–Dieudonné factorisation
/// `g = r_{w_1} ⋯ r_{w_k}` scanned over basis indices in order. The other
/// preimage is its negative.
pub fn lift(g: &OrthogonalMap) -> Result<PinElement> {
    let space = g.space().clone();
    let defect = g.isometry_defect();
    if defect > crate::orthogonal::GROUP_TOL {
        return Err(Error::NotIsometry(defect));
    }
    let n = space.dim();
    let mut h = g.matrix().clone();
    let mut x = PinElement::one(&space);
    let push = |w: Vec<C64>, eps: i8, h: &mut crate::linalg::CMat, x: &mut PinElement| -> Result<()> {
        reflect_columns(&space, h, &w, eps);
        let v = PinElement::from_trusted(CliffordElement::vector(&space, &w), Parity::Odd, eps);
        *x = x.mul(&v)?;
        Ok(())
    };
    for i in 0..n {
        let image: Vec<C64> = (0..n).map(|r| h[(r, i)]).collect();
        let mut v = image.clone();
        v[i] -= 1.0;
        if v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt() < 1e-13 {
            continue;
        }
        let mut u = image;
        u[i] += 1.0;
        // b(u, u) + b(v, v) = 4 ε_i, so one of the two is well away from the
        // null cone; take whichever loses less precision when normalised.
        let quality = |w: &[C64]| bilinear(&space, w, w).norm() / w.iter().map(|z| z.norm_sqr()).sum::<f64>();
        let usable = |w: &[C64]| bilinear(&space, w, w).norm() >= ISOTROPY_TOL;
        if usable(&v) && (!usable(&u) || quality(&v) >= quality(&u)) {
            let (w, eps) = normalise(&space, &v);
            push(w, eps, &mut h, &mut x)?;
        } else {
            if !usable(&u) {
                return Err(Error::IsotropicPivot(i));
            }
            let (w, eps) = normalise(&space, &u);
            push(w, eps, &mut h, &mut x)?;
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[i] = C64::new(1.0, 0.0);
            push(e, space.norm(i), &mut h, &mut x)?;
        }
    }
    Ok(x)
}
