use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Largest supported dimension; keeps every blade mask in one `u64`.
pub const MAX_DIM: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Real,
    Complex,
}

/// A non-degenerate quadratic space `(E, b)` presented by the norms
/// `b(e_i, e_i) = ±1` of a distinguished orthogonal basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSpace {
    field: FieldKind,
    norms: Vec<i8>,
    neg_mask: u64,
}

pub type SpaceRef = Arc<QuadraticSpace>;

impl QuadraticSpace {
    /// Validates `norms` against the field: every norm is ±1, and complex
    /// spaces carry only `+1`.
    pub fn new(field: FieldKind, norms: Vec<i8>) -> Result<Self> {
        if norms.is_empty() || norms.len() > MAX_DIM {
            return Err(Error::InvalidSpace(format!("dimension {} outside 1..={MAX_DIM}", norms.len())));
        }
        if let Some(bad) = norms.iter().find(|&&n| n != 1 && n != -1) {
            return Err(Error::InvalidSpace(format!("norm {bad} is not ±1")));
        }
        if field == FieldKind::Complex && norms.iter().any(|&n| n != 1) {
            return Err(Error::InvalidSpace("complex space with a norm -1 basis vector".into()));
        }
        let neg_mask = norms.iter().enumerate().filter(|(_, &n)| n < 0).fold(0u64, |m, (i, _)| m | (1 << i));
        Ok(Self { field, norms, neg_mask })
    }

    /// Real space of signature `(p, q)`, `+1` norms first.
    pub fn real(p: usize, q: usize) -> Result<Self> {
        let mut norms = vec![1i8; p];
        norms.extend(std::iter::repeat_n(-1i8, q));
        Self::new(FieldKind::Real, norms)
    }

    /// Complex space `C^n` with the standard form.
    pub fn complex(n: usize) -> Result<Self> {
        Self::new(FieldKind::Complex, vec![1; n])
    }

    pub fn shared(self) -> SpaceRef {
        Arc::new(self)
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.norms.len()
    }

    pub fn norms(&self) -> &[i8] {
        &self.norms
    }

    pub fn norm(&self, i: usize) -> i8 {
        self.norms[i]
    }

    /// Bitmask of the basis vectors with norm `-1`.
    pub fn neg_mask(&self) -> u64 {
        self.neg_mask
    }

    /// `(count(+1), count(-1))`.
    pub fn signature(&self) -> (usize, usize) {
        let q = self.neg_mask.count_ones() as usize;
        (self.dim() - q, q)
    }

    /// Whether the `+1` block precedes the `-1` block.
    pub fn is_sorted(&self) -> bool {
        self.norms.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn full_mask(&self) -> u64 {
        if self.dim() == 64 {
            u64::MAX
        } else {
            (1u64 << self.dim()) - 1
        }
    }

    /// The complexification, keeping the distinguished basis and its norms.
    /// The result is tagged complex but keeps `-1` norms, so it bypasses the
    /// standard-form validation on purpose.
    pub fn complexified(&self) -> Self {
        Self { field: FieldKind::Complex, norms: self.norms.clone(), neg_mask: self.neg_mask }
    }
}
