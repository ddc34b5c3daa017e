use super::blade::{blade_product, BasisBlade};
use super::space::{QuadraticSpace, SpaceRef};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, C64};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_grade(k: u32) -> Self {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Sparse multivector: terms sorted by blade mask, with negligible
/// coefficients never stored.
#[derive(Clone)]
pub struct CliffordElement<S: Scalar = C64> {
    space: SpaceRef,
    terms: Vec<(u64, S)>,
}

impl<S: Scalar> fmt::Debug for CliffordElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_map();
        for (m, c) in &self.terms {
            list.entry(&format!("{m:#b}"), c);
        }
        list.finish()
    }
}

fn same_space(a: &SpaceRef, b: &SpaceRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<S: Scalar> CliffordElement<S> {
    pub fn zero(space: &SpaceRef) -> Self {
        Self { space: space.clone(), terms: Vec::new() }
    }

    pub fn scalar(space: &SpaceRef, s: S) -> Self {
        Self::blade(space, BasisBlade::SCALAR, s)
    }

    pub fn one(space: &SpaceRef) -> Self {
        Self::scalar(space, S::one())
    }

    pub fn blade(space: &SpaceRef, blade: BasisBlade, coeff: S) -> Self {
        assert!(blade.0 & !space.full_mask() == 0, "blade outside the space");
        let terms = if coeff.is_negligible() { Vec::new() } else { vec![(blade.0, coeff)] };
        Self { space: space.clone(), terms }
    }

    /// The generator `e_i`.
    pub fn basis_vector(space: &SpaceRef, i: usize) -> Self {
        Self::blade(space, BasisBlade::vector(i), S::one())
    }

    /// The vector `Σ coords[i] e_i`.
    pub fn vector(space: &SpaceRef, coords: &[S]) -> Self {
        assert_eq!(coords.len(), space.dim(), "vector length must match the space");
        Self::from_terms(space, coords.iter().enumerate().map(|(i, c)| (1u64 << i, c.clone())))
    }

    /// Sums repeated masks and drops negligible results.
    pub fn from_terms(space: &SpaceRef, terms: impl IntoIterator<Item = (u64, S)>) -> Self {
        let mut v: Vec<(u64, S)> = terms.into_iter().collect();
        assert!(v.iter().all(|(m, _)| m & !space.full_mask() == 0), "blade outside the space");
        v.sort_unstable_by_key(|(m, _)| *m);
        Self { space: space.clone(), terms: merge_sorted(v) }
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn terms(&self) -> &[(u64, S)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u64) -> S {
        match self.terms.binary_search_by_key(&mask, |(m, _)| *m) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => S::zero(),
        }
    }

    fn lookup(&self, mask: u64) -> Option<&S> {
        self.terms.binary_search_by_key(&mask, |(m, _)| *m).ok().map(|i| &self.terms[i].1)
    }

    pub fn map_terms(&self, f: impl Fn(u64, &S) -> S) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, f(*m, c))).filter(|(_, c)| !c.is_negligible()).collect();
        Self { space: self.space.clone(), terms }
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map_terms(|_, c| c.clone() * s.clone())
    }

    /// Grade involution: `(-1)^k` on grade `k`.
    pub fn alpha(&self) -> Self {
        self.map_terms(|m, c| if m.count_ones() % 2 == 1 { -c.clone() } else { c.clone() })
    }

    /// Reversal: `(-1)^{k(k-1)/2}` on grade `k`.
    pub fn tau(&self) -> Self {
        self.map_terms(|m, c| {
            let k = m.count_ones();
            if (k * k.saturating_sub(1) / 2) % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            }
        })
    }

    pub fn grade_part(&self, k: u32) -> Self {
        Self {
            space: self.space.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.count_ones() == k).cloned().collect(),
        }
    }

    /// `Some(parity)` when every term has the same grade parity. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.iter().map(|(m, _)| m.count_ones() % 2);
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => it.all(|q| q == p).then(|| Parity::of_grade(p)),
        }
    }

    /// Coordinates of the grade-1 part.
    pub fn vector_coords(&self) -> Vec<S> {
        (0..self.space.dim()).map(|i| self.coeff(1 << i)).collect()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut v = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j == other.terms.len() || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i == self.terms.len() || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                v.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                v.push(other.terms[j].clone());
                j += 1;
            } else {
                let c = self.terms[i].1.clone() + other.terms[j].1.clone();
                if !c.is_negligible() {
                    v.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(Self { space: self.space.clone(), terms: v })
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if same_space(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch(format!("{:?} vs {:?}", self.space.norms(), other.space.norms())))
        }
    }

    /// Clifford product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let space: &QuadraticSpace = &self.space;
        let work = self.terms.len().saturating_mul(other.terms.len());
        let dim = space.dim();
        let terms = if dim <= 20 && work > (1usize << dim) {
            let mut dense: Vec<Option<S>> = vec![None; 1 << dim];
            for (a, x) in &self.terms {
                for (b, y) in &other.terms {
                    let (m, s) = blade_product(BasisBlade(*a), BasisBlade(*b), space);
                    let p = x.clone() * y.clone();
                    let p = if s < 0 { -p } else { p };
                    let slot = &mut dense[m.0 as usize];
                    *slot = Some(match slot.take() {
                        Some(acc) => acc + p,
                        None => p,
                    });
                }
            }
            dense
                .into_iter()
                .enumerate()
                .filter_map(|(m, c)| c.filter(|c| !c.is_negligible()).map(|c| (m as u64, c)))
                .collect()
        } else {
            let mut v = Vec::with_capacity(work);
            for (a, x) in &self.terms {
                for (b, y) in &other.terms {
                    let (m, s) = blade_product(BasisBlade(*a), BasisBlade(*b), space);
                    let p = x.clone() * y.clone();
                    v.push((m.0, if s < 0 { -p } else { p }));
                }
            }
            v.sort_unstable_by_key(|(m, _)| *m);
            merge_sorted(v)
        };
        Ok(Self { space: self.space.clone(), terms })
    }

    /// The single coefficient `(self * other)[mask]`, without forming the
    /// full product.
    pub fn product_coeff(&self, other: &Self, mask: u64) -> S {
        let mut acc = S::zero();
        for (a, x) in &self.terms {
            if let Some(y) = other.lookup(a ^ mask) {
                let (_, s) = blade_product(BasisBlade(*a), BasisBlade(a ^ mask), &self.space);
                let p = x.clone() * y.clone();
                acc = if s < 0 { acc - p } else { acc + p };
            }
        }
        acc
    }

    /// Terms of `self * other` restricted to the given grade.
    pub fn product_grade(&self, other: &Self, grade: u32) -> Self {
        let mut acc: HashMap<u64, S> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let m = a ^ b;
                if m.count_ones() != grade {
                    continue;
                }
                let (_, s) = blade_product(BasisBlade(*a), BasisBlade(*b), &self.space);
                let p = x.clone() * y.clone();
                let p = if s < 0 { -p } else { p };
                match acc.remove(&m) {
                    Some(c) => acc.insert(m, c + p),
                    None => acc.insert(m, p),
                };
            }
        }
        Self::from_terms(&self.space, acc)
    }

    /// Equality of every coefficient up to the backend tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        if !same_space(&self.space, &other.space) {
            return false;
        }
        match self.try_sub(other) {
            Ok(d) => d.terms.iter().all(|(_, c)| c.approx_eq(&S::zero())),
            Err(_) => false,
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        self.map_terms(|_, c| -c.clone())
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.terms.iter().map(|(_, c)| c.magnitude().powi(2)).sum::<f64>().sqrt()
    }

    /// Largest coefficient magnitude with the lowest mask among ties.
    pub fn dominant_term(&self) -> Option<(u64, S)> {
        let mut best: Option<(u64, S, f64)> = None;
        for (m, c) in &self.terms {
            let mag = c.magnitude();
            match &best {
                Some((_, _, b)) if mag <= *b * (1.0 + 1e-12) => {}
                _ => best = Some((*m, c.clone(), mag)),
            }
        }
        best.map(|(m, c, _)| (m, c))
    }

    /// Reinterprets the coordinates over another space of the same dimension.
    pub fn with_space(&self, space: &SpaceRef) -> Result<Self> {
        if space.dim() != self.space.dim() {
            return Err(Error::DimensionMismatch(format!("{} vs {}", space.dim(), self.space.dim())));
        }
        Ok(Self { space: space.clone(), terms: self.terms.clone() })
    }

    /// Converts coefficients to the float backend.
    pub fn to_float(&self) -> CliffordElement<C64> {
        CliffordElement::from_terms(&self.space, self.terms.iter().map(|(m, c)| (*m, c.to_c64())))
    }
}

fn merge_sorted<S: Scalar>(v: Vec<(u64, S)>) -> Vec<(u64, S)> {
    let mut out: Vec<(u64, S)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = lc.clone() + c,
            _ => out.push((m, c)),
        }
    }
    out.retain(|(_, c)| !c.is_negligible());
    out
}

impl<S: Scalar> PartialEq for CliffordElement<S> {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space) && self.terms == other.terms
    }
}

/// # Panics
/// On operands from different spaces; use [`CliffordElement::try_mul`] to
/// get an error instead.
impl<S: Scalar> Mul for &CliffordElement<S> {
    type Output = CliffordElement<S>;
    fn mul(self, rhs: Self) -> CliffordElement<S> {
        self.try_mul(rhs).expect("Clifford product of elements over different spaces")
    }
}

impl<S: Scalar> Add for &CliffordElement<S> {
    type Output = CliffordElement<S>;
    fn add(self, rhs: Self) -> CliffordElement<S> {
        self.try_add(rhs).expect("sum of elements over different spaces")
    }
}

impl<S: Scalar> Sub for &CliffordElement<S> {
    type Output = CliffordElement<S>;
    fn sub(self, rhs: Self) -> CliffordElement<S> {
        self.try_sub(rhs).expect("difference of elements over different spaces")
    }
}

impl<S: Scalar> Neg for &CliffordElement<S> {
    type Output = CliffordElement<S>;
    fn neg(self) -> CliffordElement<S> {
        self.neg_ref()
    }
}

impl CliffordElement<C64> {
    pub fn scale_f64(&self, s: f64) -> Self {
        self.map_terms(|_, c| c * s)
    }

    /// Real-coordinate vector `Σ coords[i] e_i`.
    pub fn real_vector(space: &SpaceRef, coords: &[f64]) -> Self {
        let c: Vec<C64> = coords.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::vector(space, &c)
    }

    /// Complex conjugation of coefficients.
    pub fn conj(&self) -> Self {
        self.map_terms(|_, c| c.conj())
    }
}
