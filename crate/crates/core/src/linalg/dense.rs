use crate::scalar::C64;
use nalgebra::DMatrix;

pub type CMat = DMatrix<C64>;

/// Relative singular-value threshold for numerical rank decisions.
pub const RANK_TOL: f64 = 1e-8;

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Singular values and right singular vectors (rows of `V^H`) of `a`, with a
/// QR compression first when `a` is much taller than wide.
fn svd_right(a: &CMat) -> (Vec<f64>, CMat) {
    let (m, n) = a.shape();
    let work = if m > 2 * n {
        a.clone().qr().r()
    } else if m < n {
        let mut padded = CMat::zeros(n, n);
        padded.view_mut((0, 0), (m, n)).copy_from(a);
        padded
    } else {
        a.clone()
    };
    let svd = work.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    sv.resize(v_t.nrows(), 0.0);
    (sv, v_t)
}

/// Orthonormal basis (as columns) of `{x : a x = 0}`.
pub fn null_space(a: &CMat, rel_tol: f64) -> CMat {
    null_space_scaled(a, rel_tol, 0.0)
}

/// As [`null_space`], with singular values measured against
/// `max(|a|_2, scale)`. Use when `a` is an operator of known size `scale`
/// restricted to a subspace it may nearly annihilate.
pub fn null_space_scaled(a: &CMat, rel_tol: f64, scale: f64) -> CMat {
    let n = a.ncols();
    if a.nrows() == 0 || n == 0 {
        return identity(n);
    }
    let (sv, v_t) = svd_right(a);
    let max = sv.iter().copied().fold(scale, f64::max);
    let tol = max * rel_tol;
    let cols: Vec<usize> = (0..v_t.nrows()).filter(|&i| max == 0.0 || sv[i] <= tol).collect();
    let mut out = CMat::zeros(n, cols.len());
    for (k, &i) in cols.iter().enumerate() {
        for j in 0..n {
            out[(j, k)] = v_t[(i, j)].conj();
        }
    }
    out
}

/// Orthonormal basis (as columns) of the column span of `a`.
pub fn column_space(a: &CMat, rel_tol: f64) -> CMat {
    let (m, n) = a.shape();
    if m == 0 || n == 0 {
        return CMat::zeros(m, 0);
    }
    let svd = a.clone().svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return CMat::zeros(m, 0);
    }
    let cols: Vec<usize> = (0..sv.len()).filter(|&i| sv[i] > max * rel_tol).collect();
    CMat::from_fn(m, cols.len(), |r, c| u[(r, cols[c])])
}

pub fn rank(a: &CMat, rel_tol: f64) -> usize {
    if a.nrows() == 0 || a.ncols() == 0 {
        return 0;
    }
    let sv = a.clone().singular_values();
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > max * rel_tol).count()
}

/// Equal column spans: equal ranks, and the joint rank does not grow.
pub fn same_span(a: &CMat, b: &CMat, rel_tol: f64) -> bool {
    if a.nrows() != b.nrows() {
        return false;
    }
    let ra = rank(a, rel_tol);
    let rb = rank(b, rel_tol);
    if ra != rb {
        return false;
    }
    let mut joint = CMat::zeros(a.nrows(), a.ncols() + b.ncols());
    joint.view_mut((0, 0), a.shape()).copy_from(a);
    joint.view_mut((0, a.ncols()), b.shape()).copy_from(b);
    rank(&joint, rel_tol) == ra
}

pub fn frobenius_inner(a: &CMat, b: &CMat) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

pub fn commutes(a: &CMat, b: &CMat, tol: f64) -> bool {
    (a * b - b * a).norm() <= tol * (1.0 + a.norm() * b.norm())
}

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
pub fn expm(a: &CMat) -> CMat {
    let n = a.nrows();
    let norm = a.norm();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a / C64::new(2f64.powi(squarings as i32), 0.0);
    let mut term = identity(n);
    let mut sum = identity(n);
    for k in 1..=30 {
        term = &term * &scaled / C64::new(k as f64, 0.0);
        sum += &term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.
pub fn hermitian_eigen(h: &CMat) -> (Vec<f64>, CMat) {
    let eig = nalgebra::SymmetricEigen::new(h.clone());
    let mut order: Vec<usize> = (0..h.nrows()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let vals = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = CMat::from_fn(h.nrows(), h.ncols(), |r, c| eig.eigenvectors[(r, order[c])]);
    (vals, vecs)
}

/// Incrementally built orthonormal basis of a subspace of `C^n`, using
/// twice-iterated Gram–Schmidt.
#[derive(Debug, Clone)]
pub struct OrthoSpan {
    dim: usize,
    basis: Vec<Vec<C64>>,
    scale: f64,
    rel_tol: f64,
}

impl OrthoSpan {
    pub fn new(dim: usize, rel_tol: f64) -> Self {
        Self { dim, basis: Vec::new(), scale: 0.0, rel_tol }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<C64>] {
        &self.basis
    }

    fn residual(&self, v: &[C64]) -> Vec<C64> {
        let mut r = v.to_vec();
        for _ in 0..2 {
            for b in &self.basis {
                let c: C64 = b.iter().zip(&r).map(|(x, y)| x.conj() * y).sum();
                for (ri, bi) in r.iter_mut().zip(b) {
                    *ri -= c * bi;
                }
            }
        }
        r
    }

    /// Adds `v` when it is independent of the current span; returns whether
    /// it was added.
    pub fn insert(&mut self, v: &[C64]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length must match the span dimension");
        let n0 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if n0 == 0.0 {
            return false;
        }
        self.scale = self.scale.max(n0);
        let r = self.residual(v);
        let nr = r.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if nr <= self.rel_tol * self.scale.max(n0) || nr <= 1e-6 * self.rel_tol.sqrt() * n0 {
            return false;
        }
        self.basis.push(r.into_iter().map(|x| x / nr).collect());
        true
    }

    /// Distance from `v` to the span, relative to `|v|`.
    pub fn relative_residual(&self, v: &[C64]) -> f64 {
        let n0 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if n0 == 0.0 {
            return 0.0;
        }
        self.residual(v).iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt() / n0
    }

    pub fn contains(&self, v: &[C64], tol: f64) -> bool {
        self.relative_residual(v) <= tol
    }

    /// Basis vectors as the columns of a matrix.
    pub fn to_matrix(&self) -> CMat {
        CMat::from_fn(self.dim, self.basis.len(), |r, c| self.basis[c][r])
    }
}
