use super::element::CliffordElement;
use super::space::{QuadraticSpace, SpaceRef};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Pure tensor `left ⊗ right` in `Cliff(E1) ⊗ Cliff(E2)` with the graded
/// product.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorTerm<S: Scalar> {
    pub left: CliffordElement<S>,
    pub right: CliffordElement<S>,
}

/// `(c1 ⊗ c2)(d1 ⊗ d2) = (-1)^{|d1||c2|} (c1 d1) ⊗ (c2 d2)` for
/// parity-homogeneous factors.
pub fn graded_tensor_mul<S: Scalar>(a: &TensorTerm<S>, b: &TensorTerm<S>) -> Result<TensorTerm<S>> {
    let u2 = a.right.parity().ok_or(Error::NotHomogeneous)?;
    let v1 = b.left.parity().ok_or(Error::NotHomogeneous)?;
    a.left.parity().ok_or(Error::NotHomogeneous)?;
    b.right.parity().ok_or(Error::NotHomogeneous)?;
    let mut left = a.left.try_mul(&b.left)?;
    if u2.bit() * v1.bit() == 1 {
        left = -&left;
    }
    Ok(TensorTerm { left, right: a.right.try_mul(&b.right)? })
}

/// `E1 ⊕ E2` with the basis of `E1` followed by the basis of `E2`.
pub fn direct_sum(a: &QuadraticSpace, b: &QuadraticSpace) -> Result<QuadraticSpace> {
    if a.field() != b.field() {
        return Err(Error::SpaceMismatch("direct sum of real and complex spaces".into()));
    }
    let mut norms = a.norms().to_vec();
    norms.extend_from_slice(b.norms());
    QuadraticSpace::new(a.field(), norms)
}

/// Image of `left ⊗ right` in `Cliff(E1 ⊕ E2)`: the product of the two
/// canonical embeddings.
pub fn tensor_embed<S: Scalar>(term: &TensorTerm<S>, sum: &SpaceRef) -> Result<CliffordElement<S>> {
    let d1 = term.left.space().dim();
    if d1 + term.right.space().dim() != sum.dim() {
        return Err(Error::DimensionMismatch("direct sum dimension".into()));
    }
    let l = CliffordElement::from_terms(sum, term.left.terms().iter().cloned());
    let r = CliffordElement::from_terms(sum, term.right.terms().iter().map(|(m, c)| (m << d1, c.clone())));
    l.try_mul(&r)
}
