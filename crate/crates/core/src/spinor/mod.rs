//! Spinors as a Fock space.
//!
//! For `dim E_C = 2n`, basis vector `i` is paired with `n + i` into a Witt
//! pair `a_i = (e_i + λ e_{n+i})/2`, `a_i* = ε (e_i - λ e_{n+i})/2` with
//! `λ² = -ε/ε'`. `S = Λ(span a)` has dimension `2^n`; `a_i` acts by
//! creation and `a_i*` by annihilation, so `γ(x)γ(y) + γ(y)γ(x) = 2 b(x, y)`.
//! Every `γ(e_i)` sends a Fock basis state to a multiple of one basis state,
//! so blade operators are stored as signed permutations with phases.

use crate::clifford::{CliffordElement, SpaceRef};
use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::orthogonal::LieElement;
use crate::pin::PinElement;
use crate::scalar::C64;

/// Largest supported half dimension.
pub const MAX_HALF_DIM: usize = 8;

/// Operator mapping basis state `s` to `coeff[s] * |target[s]⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    target: Vec<usize>,
    coeff: Vec<C64>,
}

impl Monomial {
    pub fn identity(dim: usize) -> Self {
        Self { target: (0..dim).collect(), coeff: vec![C64::new(1.0, 0.0); dim] }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let target = other.target.iter().map(|&t| self.target[t]).collect();
        let coeff = other.target.iter().zip(&other.coeff).map(|(&t, c)| self.coeff[t] * c).collect();
        Self { target, coeff }
    }

    /// Adds `scale * self` into a dense matrix.
    pub fn accumulate(&self, out: &mut CMat, scale: C64) {
        for (s, (&t, c)) in self.target.iter().zip(&self.coeff).enumerate() {
            out[(t, s)] += scale * c;
        }
    }

    pub fn to_dense(&self) -> CMat {
        let d = self.target.len();
        let mut out = CMat::zeros(d, d);
        self.accumulate(&mut out, C64::new(1.0, 0.0));
        out
    }
}

#[derive(Debug, Clone)]
pub struct SpinorSpace {
    space: SpaceRef,
    half_dim: usize,
    gammas: Vec<Monomial>,
    witt: CMat,
}

/// `(-1)^{#{j < i : j ∈ s}}`.
fn fermion_sign(s: usize, i: usize) -> f64 {
    if (s & ((1 << i) - 1)).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

impl SpinorSpace {
    pub fn new(space: &SpaceRef) -> Result<Self> {
        let d = space.dim();
        if !d.is_multiple_of(2) {
            return Err(Error::InvalidSpace(format!("spinors need even dimension, got {d}")));
        }
        let n = d / 2;
        if n > MAX_HALF_DIM {
            return Err(Error::CapExceeded(format!("spinor half dimension {n} > {MAX_HALF_DIM}")));
        }
        let states = 1usize << n;
        let mut gammas = vec![Monomial::identity(states); d];
        let mut witt = CMat::zeros(d, d);
        for i in 0..n {
            let eps = space.norm(i) as f64;
            let eps2 = space.norm(n + i) as f64;
            let lambda = C64::new(-eps / eps2, 0.0).sqrt();
            let mut first = Monomial::identity(states);
            let mut second = Monomial::identity(states);
            for s in 0..states {
                let sign = fermion_sign(s, i);
                first.target[s] = s ^ (1 << i);
                second.target[s] = s ^ (1 << i);
                if s & (1 << i) == 0 {
                    // Creation term.
                    first.coeff[s] = C64::new(sign, 0.0);
                    second.coeff[s] = C64::new(sign, 0.0) / lambda;
                } else {
                    // Annihilation term, weighted by `±ε`.
                    first.coeff[s] = C64::new(eps * sign, 0.0);
                    second.coeff[s] = C64::new(-eps * sign, 0.0) / lambda;
                }
            }
            gammas[i] = first;
            gammas[n + i] = second;
            witt[(i, i)] = C64::new(0.5, 0.0);
            witt[(n + i, i)] = lambda * 0.5;
            witt[(i, n + i)] = C64::new(eps * 0.5, 0.0);
            witt[(n + i, n + i)] = -lambda * (eps * 0.5);
        }
        Ok(Self { space: space.clone(), half_dim: n, gammas, witt })
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    /// `dim S = 2^n`.
    pub fn dim(&self) -> usize {
        1 << self.half_dim
    }

    /// `γ(e_i)` as a dense matrix.
    pub fn gamma(&self, i: usize) -> CMat {
        self.gammas[i].to_dense()
    }

    pub fn gammas(&self) -> Vec<CMat> {
        (0..self.space.dim()).map(|i| self.gamma(i)).collect()
    }

    /// Columns `a_1..a_n, a_1*..a_n*` in the distinguished basis.
    pub fn witt_basis(&self) -> &CMat {
        &self.witt
    }

    /// `γ(e_{i1}) ⋯ γ(e_{ik})` for the ascending indices of `mask`.
    pub fn blade_operator(&self, mask: u64) -> Monomial {
        let mut acc = Monomial::identity(self.dim());
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            acc = acc.compose(&self.gammas[i]);
            m &= m - 1;
        }
        acc
    }

    /// `γ(v)` for a vector of coordinates.
    pub fn gamma_vector(&self, v: &[C64]) -> CMat {
        let mut out = CMat::zeros(self.dim(), self.dim());
        for (i, c) in v.iter().enumerate() {
            if c.norm() > 0.0 {
                self.gammas[i].accumulate(&mut out, *c);
            }
        }
        out
    }

    /// The algebra isomorphism `γ̃: Cliff(E_C) -> End(S)`. Elements over any
    /// space of the same dimension and norms are accepted.
    pub fn gamma_tilde(&self, x: &CliffordElement) -> Result<CMat> {
        if x.space().norms() != self.space.norms() {
            return Err(Error::SpaceMismatch("element and spinor module use different forms".into()));
        }
        let mut out = CMat::zeros(self.dim(), self.dim());
        for (m, c) in x.terms() {
            self.blade_operator(*m).accumulate(&mut out, *c);
        }
        Ok(out)
    }

    /// `Π(x) = γ̃(x)`.
    pub fn pi_rep(&self, x: &PinElement) -> Result<CMat> {
        self.gamma_tilde(x.value())
    }

    /// `dΠ(X) = γ̃(Q(X))`.
    pub fn d_pi(&self, x: &LieElement) -> Result<CMat> {
        self.gamma_tilde(&lie_to_clifford(x))
    }
}

/// The quadratic element `Q(X) = Σ_{i<j} (ε_j X_ij / 2) e_i e_j`, the unique
/// bivector with `[Q(X), v] = X v` for every `v ∈ E`.
pub fn lie_to_clifford(x: &LieElement) -> CliffordElement {
    let space = x.space();
    let m = x.matrix();
    let n = space.dim();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = m[(i, j)] * (space.norm(j) as f64 * 0.5);
            if c.norm() > 0.0 {
                terms.push(((1u64 << i) | (1u64 << j), c));
            }
        }
    }
    CliffordElement::from_terms(space, terms)
}
