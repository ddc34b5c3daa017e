//! Operator algebras on `S`: commutants and generated algebras, with
//! operators stored as column-major vectors of length `d²`.

use crate::error::{Error, Result};
use crate::linalg::{column_space, null_space_scaled, rank, CMat, OrthoSpan, RANK_TOL};
use crate::scalar::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest operator size for commutant solves.
pub const MAX_OPERATOR_DIM: usize = 64;
/// Above this size the unreduced solve is refused.
const DIRECT_LIMIT: usize = 32;

pub fn vec_of(m: &CMat) -> Vec<C64> {
    m.as_slice().to_vec()
}

pub fn unvec(v: &[C64], d: usize) -> CMat {
    CMat::from_column_slice(d, d, v)
}

/// Operators of a basis given as columns of `vec`s.
pub fn operators(basis: &CMat, d: usize) -> Vec<CMat> {
    basis.column_iter().map(|c| CMat::from_column_slice(d, d, c.as_slice())).collect()
}

fn check_ops(ops: &[CMat], d: usize) -> Result<()> {
    if d > MAX_OPERATOR_DIM {
        return Err(Error::CapExceeded(format!("operator size {d} > {MAX_OPERATOR_DIM}")));
    }
    if let Some(a) = ops.iter().find(|a| a.shape() != (d, d)) {
        return Err(Error::DimensionMismatch(format!("expected {d}x{d} operator, got {:?}", a.shape())));
    }
    Ok(())
}

/// Commutant by successive restriction: `N ← N · null([A, ·] N)`.
pub fn commutant_direct(ops: &[CMat], d: usize) -> Result<CMat> {
    check_ops(ops, d)?;
    let mut kernel = CMat::identity(d * d, d * d);
    for a in ops {
        if kernel.ncols() == 0 {
            break;
        }
        let mut image = CMat::zeros(d * d, kernel.ncols());
        for (j, col) in kernel.column_iter().enumerate() {
            let x = CMat::from_column_slice(d, d, col.as_slice());
            let c = a * &x - &x * a;
            image.column_mut(j).copy_from_slice(c.as_slice());
        }
        kernel = &kernel * null_space_scaled(&image, RANK_TOL, a.norm());
    }
    Ok(kernel)
}

/// Eigenspaces of `h`, or `None` when `h` is not diagonalizable to working
/// precision.
fn eigenspaces(h: &CMat) -> Option<Vec<CMat>> {
    let d = h.nrows();
    let (_, t) = h.clone().schur().unpack();
    let scale = h.norm().max(1.0);
    let tol = 1e-6 * scale;
    let mut values: Vec<C64> = Vec::new();
    for i in 0..d {
        let l = t[(i, i)];
        if values.iter().all(|v| (v - l).norm() > tol) {
            values.push(l);
        }
    }
    let mut spaces = Vec::new();
    let mut total = 0;
    for l in values {
        let shifted = h - CMat::identity(d, d) * l;
        let space = null_space_scaled(&shifted, 1e-9, scale);
        total += space.ncols();
        spaces.push(space);
    }
    (total == d).then_some(spaces)
}

/// Commutant restricted to operators that preserve the eigenspaces of a
/// random combination of `ops`; every commutant element does, so nothing is
/// lost. Returns `None` when the combination is not diagonalizable.
fn commutant_reduced(ops: &[CMat], d: usize) -> Option<CMat> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut h = CMat::zeros(d, d);
    for a in ops {
        let r = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        h += a * r;
    }
    let spaces = eigenspaces(&h)?;
    let mut v = CMat::zeros(d, d);
    let mut blocks = Vec::new();
    let mut at = 0;
    for s in &spaces {
        v.view_mut((0, at), s.shape()).copy_from(s);
        blocks.push((at, s.ncols()));
        at += s.ncols();
    }
    let v_inv = v.clone().try_inverse()?;
    // Unknowns: entries of the diagonal blocks of V⁻¹ X V.
    let unknowns: Vec<(usize, usize)> =
        blocks.iter().flat_map(|&(s, m)| (0..m).flat_map(move |a| (0..m).map(move |b| (s + a, s + b)))).collect();
    let conj: Vec<CMat> = ops.iter().map(|a| &v_inv * a * &v).collect();
    let mut kernel = CMat::identity(unknowns.len(), unknowns.len());
    for a in &conj {
        if kernel.ncols() == 0 {
            break;
        }
        // [A, E_rc] has column c equal to A e_r and row r equal to -A^T e_c.
        let mut k = CMat::zeros(d * d, unknowns.len());
        for (u, &(r, c)) in unknowns.iter().enumerate() {
            for i in 0..d {
                k[(c * d + i, u)] += a[(i, r)];
                k[(r + d * i, u)] -= a[(c, i)];
            }
        }
        let image = &k * &kernel;
        kernel = &kernel * null_space_scaled(&image, RANK_TOL, a.norm());
    }
    let mut out = CMat::zeros(d * d, kernel.ncols());
    for (j, col) in kernel.column_iter().enumerate() {
        let mut y = CMat::zeros(d, d);
        for (u, &(r, c)) in unknowns.iter().enumerate() {
            y[(r, c)] = col[u];
        }
        let x = &v * y * &v_inv;
        out.column_mut(j).copy_from_slice(x.as_slice());
    }
    Some(column_space(&out, RANK_TOL))
}

/// Orthonormal basis (as `vec` columns) of `{X : XA = AX for all A ∈ ops}`.
pub fn commutant(ops: &[CMat], d: usize) -> Result<CMat> {
    check_ops(ops, d)?;
    if d <= 8 {
        return commutant_direct(ops, d);
    }
    if let Some(c) = commutant_reduced(ops, d) {
        if commutant_defect(ops, &c, d) <= 1e-8 {
            return Ok(c);
        }
    }
    if d <= DIRECT_LIMIT {
        return commutant_direct(ops, d);
    }
    Err(Error::CapExceeded(format!("no diagonalizable combination for the {d}x{d} commutant solve")))
}

/// Largest `|[A, X]| / (|A| |X|)` over ops and basis columns.
pub fn commutant_defect(ops: &[CMat], basis: &CMat, d: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for col in basis.column_iter() {
        let x = CMat::from_column_slice(d, d, col.as_slice());
        for a in ops {
            let den = (a.norm() * x.norm()).max(1e-300);
            worst = worst.max((a * &x - &x * a).norm() / den);
        }
    }
    worst
}

/// Orthonormal basis (as `vec` columns) of the unital algebra generated by
/// `ops`: closure of `{I}` under left multiplication.
pub fn generated_algebra(ops: &[CMat], d: usize) -> Result<CMat> {
    check_ops(ops, d)?;
    let mut span = OrthoSpan::new(d * d, RANK_TOL);
    let id = CMat::identity(d, d);
    span.insert(id.as_slice());
    let mut queue = vec![id];
    while let Some(m) = queue.pop() {
        for a in ops {
            let p = a * &m;
            let n = p.norm();
            if n == 0.0 {
                continue;
            }
            let p = p / C64::new(n, 0.0);
            if span.insert(p.as_slice()) {
                queue.push(p);
            }
        }
    }
    Ok(span.to_matrix())
}

/// Equal dimension and mutual containment of two `vec` bases.
pub fn same_subspace(a: &CMat, b: &CMat, tol: f64) -> bool {
    if a.nrows() != b.nrows() {
        return false;
    }
    let ra = rank(a, tol);
    if ra != rank(b, tol) {
        return false;
    }
    contained(a, b, tol) && contained(b, a, tol)
}

/// Every column of `a` lies in the span of `b`, relative residual `<= tol`.
pub fn contained(a: &CMat, b: &CMat, tol: f64) -> bool {
    let mut span = OrthoSpan::new(b.nrows(), tol);
    for c in b.column_iter() {
        span.insert(c.as_slice());
    }
    a.column_iter().all(|c| span.contains(c.as_slice(), tol))
}

/// Whether all basis operators pairwise commute.
pub fn is_commutative(basis: &CMat, d: usize, tol: f64) -> bool {
    let ops = operators(basis, d);
    for (i, a) in ops.iter().enumerate() {
        for b in &ops[i + 1..] {
            if (a * b - b * a).norm() > tol * (a.norm() * b.norm()).max(1e-300) {
                return false;
            }
        }
    }
    true
}
