use super::blade::reorder_sign;
use super::element::CliffordElement;
use super::space::SpaceRef;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, C64};
use std::collections::HashMap;

/// Sign of `a ∧ b` for blades, `0` when they share a generator.
#[inline]
pub fn wedge_sign(a: u64, b: u64) -> i8 {
    if a & b != 0 {
        0
    } else {
        reorder_sign(a, b)
    }
}

/// Element of the exterior algebra `Λ(C^dim)`, stored like a multivector.
#[derive(Debug, Clone, PartialEq)]
pub struct ExteriorElement<S: Scalar = C64> {
    dim: usize,
    terms: Vec<(u64, S)>,
}

impl<S: Scalar> ExteriorElement<S> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: Vec::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::blade(dim, 0, S::one())
    }

    pub fn blade(dim: usize, mask: u64, coeff: S) -> Self {
        Self::from_terms(dim, [(mask, coeff)])
    }

    pub fn vector(coords: &[S]) -> Self {
        Self::from_terms(coords.len(), coords.iter().enumerate().map(|(i, c)| (1u64 << i, c.clone())))
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (u64, S)>) -> Self {
        let limit = if dim >= 64 { u64::MAX } else { (1u64 << dim) - 1 };
        let mut acc: HashMap<u64, S> = HashMap::new();
        for (m, c) in terms {
            assert!(m & !limit == 0, "blade outside the exterior algebra");
            match acc.remove(&m) {
                Some(prev) => acc.insert(m, prev + c),
                None => acc.insert(m, c),
            };
        }
        let mut terms: Vec<(u64, S)> = acc.into_iter().filter(|(_, c)| !c.is_negligible()).collect();
        terms.sort_unstable_by_key(|(m, _)| *m);
        Self { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(u64, S)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u64) -> S {
        match self.terms.binary_search_by_key(&mask, |(m, _)| *m) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "wedge of elements over different spaces");
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let s = wedge_sign(*a, *b);
                if s == 0 {
                    continue;
                }
                let p = x.clone() * y.clone();
                out.push((a | b, if s < 0 { -p } else { p }));
            }
        }
        Self::from_terms(self.dim, out)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "sum of elements over different spaces");
        Self::from_terms(self.dim, self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(m, c)| (*m, c.clone() * s.clone())))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn grade_part(&self, k: u32) -> Self {
        Self { dim: self.dim, terms: self.terms.iter().filter(|(m, _)| m.count_ones() == k).cloned().collect() }
    }

    /// Degree when homogeneous; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.count_ones());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.sub(other).terms.iter().all(|(_, c)| c.approx_eq(&S::zero()))
    }

    pub fn to_float(&self) -> ExteriorElement<C64> {
        ExteriorElement::from_terms(self.dim, self.terms.iter().map(|(m, c)| (*m, c.to_c64())))
    }
}

/// Chevalley identification `Λ(E) -> Cliff(E, b)`. Blades of the orthogonal
/// basis map to the same Clifford blades, so `T` is the identity on
/// coordinates.
pub fn chevalley_t<S: Scalar>(w: &ExteriorElement<S>, space: &SpaceRef) -> Result<CliffordElement<S>> {
    if w.dim() != space.dim() {
        return Err(Error::DimensionMismatch(format!("exterior dim {} vs space dim {}", w.dim(), space.dim())));
    }
    Ok(CliffordElement::from_terms(space, w.terms().iter().cloned()))
}

/// Inverse of [`chevalley_t`].
pub fn chevalley_t_inv<S: Scalar>(x: &CliffordElement<S>) -> ExteriorElement<S> {
    ExteriorElement::from_terms(x.space().dim(), x.terms().iter().cloned())
}
