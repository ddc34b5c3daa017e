use crate::clifford::ExteriorElement;
use crate::linalg::CMat;
use crate::scalar::C64;
use std::collections::HashMap;

/// The blades of `Λ^d(C^n)` in increasing mask order, with reverse lookup.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    pub dim: usize,
    pub degree: usize,
    pub blades: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl DegreeBasis {
    pub fn new(dim: usize, degree: usize) -> Self {
        let blades: Vec<u64> = combinations(dim, degree);
        let index = blades.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Self { dim, degree, blades, index }
    }

    pub fn len(&self) -> usize {
        self.blades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blades.is_empty()
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    /// Coordinates of the degree-`d` part of `w`.
    pub fn coords(&self, w: &ExteriorElement) -> Vec<C64> {
        let mut v = vec![C64::new(0.0, 0.0); self.len()];
        for (m, c) in w.terms() {
            if let Some(i) = self.index_of(*m) {
                v[i] = *c;
            }
        }
        v
    }

    pub fn element(&self, coords: &[C64]) -> ExteriorElement {
        ExteriorElement::from_terms(self.dim, self.blades.iter().zip(coords).map(|(m, c)| (*m, *c)))
    }
}

/// All masks with `k` bits among the low `n`, in increasing order.
pub fn combinations(n: usize, k: usize) -> Vec<u64> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut m: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let limit = 1u64 << n;
    if k == 0 {
        return vec![0];
    }
    while m < limit {
        out.push(m);
        // Gosper's hack: next integer with the same popcount.
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

/// Sign of replacing generator `t` by `i` inside blade `mask` (which holds
/// `t` but not `i`): the generators strictly between them are jumped over.
fn replace_sign(mask: u64, t: usize, i: usize) -> f64 {
    let (lo, hi) = if t < i { (t, i) } else { (i, t) };
    let between = if hi - lo <= 1 { 0 } else { ((1u64 << hi) - (1u64 << (lo + 1))) & mask };
    if between.count_ones() % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Matrix of the derivation extending `x` on `Λ^d`.
pub fn derivation_matrix(x: &CMat, basis: &DegreeBasis) -> CMat {
    let n = basis.len();
    let mut out = CMat::zeros(n, n);
    for (col, &mask) in basis.blades.iter().enumerate() {
        let mut rest = mask;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for i in 0..basis.dim {
                let c = x[(i, t)];
                if c.norm() == 0.0 {
                    continue;
                }
                if i == t {
                    out[(col, col)] += c;
                } else if mask & (1 << i) == 0 {
                    let target = (mask & !(1 << t)) | (1 << i);
                    let row = basis.index_of(target).expect("degree is preserved");
                    out[(row, col)] += c * replace_sign(mask, t, i);
                }
            }
        }
    }
    out
}

/// Matrix of `Λ^d g`: entries are the `d x d` minors of `g`.
pub fn group_matrix(g: &CMat, basis: &DegreeBasis) -> CMat {
    let n = basis.len();
    if let Some(signs) = diagonal(g) {
        let d = nalgebra::DVector::from_iterator(
            n,
            basis.blades.iter().map(|&m| {
                let neg = (0..basis.dim).filter(|&i| m & (1 << i) != 0 && signs[i] < 0.0).count();
                C64::new(if neg % 2 == 0 { 1.0 } else { -1.0 }, 0.0)
            }),
        );
        return CMat::from_diagonal(&d);
    }
    let idx: Vec<Vec<usize>> =
        basis.blades.iter().map(|&m| (0..basis.dim).filter(|&i| m & (1 << i) != 0).collect()).collect();
    CMat::from_fn(n, n, |r, c| {
        let rows = &idx[r];
        let cols = &idx[c];
        CMat::from_fn(rows.len(), cols.len(), |a, b| g[(rows[a], cols[b])]).determinant()
    })
}

fn diagonal(g: &CMat) -> Option<Vec<f64>> {
    let n = g.nrows();
    for r in 0..n {
        for c in 0..n {
            if r != c && g[(r, c)].norm() > 1e-14 {
                return None;
            }
        }
    }
    let d: Vec<f64> = (0..n).map(|i| g[(i, i)].re).collect();
    let pm = (0..n).all(|i| (g[(i, i)].norm() - 1.0).abs() < 1e-14 && g[(i, i)].im.abs() < 1e-14);
    pm.then_some(d)
}

/// `g` acting factorwise on an exterior element.
pub fn apply_group(g: &CMat, w: &ExteriorElement) -> ExteriorElement {
    let n = w.dim();
    let cols: Vec<ExteriorElement> =
        (0..n).map(|j| ExteriorElement::vector(&(0..n).map(|i| g[(i, j)]).collect::<Vec<_>>())).collect();
    let mut out = ExteriorElement::zero(n);
    for (m, c) in w.terms() {
        let mut acc = ExteriorElement::blade(n, 0, *c);
        let mut rest = *m;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc = acc.wedge(&cols[t]);
        }
        out = out.add(&acc);
    }
    out
}

/// `X` acting as a derivation on an exterior element.
pub fn apply_derivation(x: &CMat, w: &ExteriorElement) -> ExteriorElement {
    let n = w.dim();
    let mut terms = Vec::new();
    for (m, c) in w.terms() {
        let mut rest = *m;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for i in 0..n {
                let a = x[(i, t)];
                if a.norm() == 0.0 {
                    continue;
                }
                if i == t {
                    terms.push((*m, a * c));
                } else if m & (1 << i) == 0 {
                    terms.push(((m & !(1 << t)) | (1 << i), a * c * replace_sign(*m, t, i)));
                }
            }
        }
    }
    ExteriorElement::from_terms(n, terms)
}
