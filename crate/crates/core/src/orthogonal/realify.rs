use crate::clifford::{FieldKind, QuadraticSpace};
use crate::error::{Error, Result};
use crate::linalg::CMat;

/// Real form of a complex space `C^n`: basis `(e_1..e_n, i e_1..i e_n)` with
/// norms `+1` on the first block and `-1` on the second (`Re b(iv, iv) = -b(v, v)`).
#[derive(Debug, Clone, PartialEq)]
pub struct Realification {
    pub space: QuadraticSpace,
    /// `k[j]`: real index of `e_j`.
    pub k: Vec<usize>,
    /// `l[j]`: real index of `i e_j`.
    pub l: Vec<usize>,
}

pub fn realify_complex(space: &QuadraticSpace) -> Result<Realification> {
    if space.field() != FieldKind::Complex {
        return Err(Error::InvalidSpace("realification needs a complex space".into()));
    }
    let n = space.dim();
    Ok(Realification { space: QuadraticSpace::real(n, n)?, k: (0..n).collect(), l: (n..2 * n).collect() })
}

/// Zero-based position of `e_s ⊗ f_t` inside `C^n ⊗ C^m` for the real
/// tensor bases: `(m - t) n + s` in one-based indices, so the last `f`
/// comes first.
pub fn kl_index(n: usize, m: usize, s: usize, t: usize) -> usize {
    assert!(s < n && t < m, "tensor index out of range");
    (m - 1 - t) * n + s
}

/// `A + jB ↦ [[A, -conj(B)], [B, conj(A)]]`.
pub fn realify_quaternionic(a: &CMat, b: &CMat) -> Result<CMat> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch(format!("A is {:?}, B is {:?}", a.shape(), b.shape())));
    }
    let (r, c) = a.shape();
    let mut out = CMat::zeros(2 * r, 2 * c);
    out.view_mut((0, 0), (r, c)).copy_from(a);
    out.view_mut((0, c), (r, c)).copy_from(&(-b.map(|z| z.conj())));
    out.view_mut((r, 0), (r, c)).copy_from(b);
    out.view_mut((r, c), (r, c)).copy_from(&a.map(|z| z.conj()));
    Ok(out)
}
