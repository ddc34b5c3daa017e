use crate::linalg::{q, CMat, Echelon};
use crate::scalar::{rational_to_f64, C64};
use serde::{Deserialize, Serialize};

/// Division algebra of the natural representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KField {
    Real,
    Complex,
    Quaternion,
}

impl KField {
    pub fn real_dim(self) -> usize {
        match self {
            KField::Real => 1,
            KField::Complex => 2,
            KField::Quaternion => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            KField::Real => "R",
            KField::Complex => "C",
            KField::Quaternion => "H",
        }
    }
}

/// How the first argument enters a form `X^# F`: transpose (bilinear) or
/// conjugate transpose (sesquilinear).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Transpose,
    ConjTranspose,
}

impl FormKind {
    pub(crate) fn apply(self, x: &CMat) -> CMat {
        match self {
            FormKind::Transpose => x.transpose(),
            FormKind::ConjTranspose => x.adjoint(),
        }
    }
}

/// Coordinates on `n x m` matrices over a division algebra. Quaternionic
/// matrices are stored through `A + jB ↦ [[A, -conj B], [B, conj A]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CoordKind {
    /// Real entries, row-major.
    Real,
    /// Real and imaginary parts in two blocks, entries ordered by `kl_index`.
    ComplexKl,
    /// Four real coordinates `(1, i, j, k)` per entry, row-major.
    Quaternion,
    /// Complex entries, row-major; coordinates are complex.
    ComplexEntries,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct CoordSystem {
    pub kind: CoordKind,
    pub n: usize,
    pub m: usize,
}

impl CoordSystem {
    pub fn for_field(field: KField, n: usize, m: usize) -> Self {
        let kind = match field {
            KField::Real => CoordKind::Real,
            KField::Complex => CoordKind::ComplexKl,
            KField::Quaternion => CoordKind::Quaternion,
        };
        Self { kind, n, m }
    }

    pub fn dim(&self) -> usize {
        let nm = self.n * self.m;
        match self.kind {
            CoordKind::Real | CoordKind::ComplexEntries => nm,
            CoordKind::ComplexKl => 2 * nm,
            CoordKind::Quaternion => 4 * nm,
        }
    }

    pub fn matrix_shape(&self) -> (usize, usize) {
        match self.kind {
            CoordKind::Quaternion => (2 * self.n, 2 * self.m),
            _ => (self.n, self.m),
        }
    }

    fn kl_entry(&self, idx: usize) -> (usize, usize) {
        (idx % self.n, self.m - 1 - idx / self.n)
    }

    /// Matrix of the `r`-th coordinate vector.
    pub fn unit(&self, r: usize) -> CMat {
        let (rows, cols) = self.matrix_shape();
        let mut x = CMat::zeros(rows, cols);
        let (n, m) = (self.n, self.m);
        match self.kind {
            CoordKind::Real | CoordKind::ComplexEntries => x[(r / m, r % m)] = C64::new(1.0, 0.0),
            CoordKind::ComplexKl => {
                let nm = n * m;
                let (s, t) = self.kl_entry(r % nm);
                x[(s, t)] = if r < nm { C64::new(1.0, 0.0) } else { C64::new(0.0, 1.0) };
            }
            CoordKind::Quaternion => {
                let (e, c) = (r / 4, r % 4);
                let (s, t) = (e / m, e % m);
                let (a, b) = match c {
                    0 => (C64::new(1.0, 0.0), C64::new(0.0, 0.0)),
                    1 => (C64::new(0.0, 1.0), C64::new(0.0, 0.0)),
                    2 => (C64::new(0.0, 0.0), C64::new(1.0, 0.0)),
                    _ => (C64::new(0.0, 0.0), C64::new(0.0, -1.0)),
                };
                x[(s, t)] = a;
                x[(s, m + t)] = -b.conj();
                x[(n + s, t)] = b;
                x[(n + s, m + t)] = a.conj();
            }
        }
        x
    }

    /// Coordinates of a matrix; real systems return real parts only.
    pub fn coords(&self, x: &CMat) -> Vec<C64> {
        let (n, m) = (self.n, self.m);
        let re = |v: f64| C64::new(v, 0.0);
        match self.kind {
            CoordKind::Real => (0..n * m).map(|r| re(x[(r / m, r % m)].re)).collect(),
            CoordKind::ComplexEntries => (0..n * m).map(|r| x[(r / m, r % m)]).collect(),
            CoordKind::ComplexKl => {
                let nm = n * m;
                (0..2 * nm)
                    .map(|r| {
                        let (s, t) = self.kl_entry(r % nm);
                        re(if r < nm { x[(s, t)].re } else { x[(s, t)].im })
                    })
                    .collect()
            }
            CoordKind::Quaternion => (0..n * m)
                .flat_map(|e| {
                    let (s, t) = (e / m, e % m);
                    let a = x[(s, t)];
                    let b = x[(n + s, t)];
                    [re(a.re), re(a.im), re(b.re), re(-b.im)]
                })
                .collect(),
        }
    }

    /// Matrix of the linear map `f` in these coordinates.
    pub fn operator(&self, f: impl Fn(&CMat) -> CMat) -> CMat {
        let d = self.dim();
        let mut out = CMat::zeros(d, d);
        for r in 0..d {
            let col = self.coords(&f(&self.unit(r)));
            for (i, v) in col.into_iter().enumerate() {
                out[(i, r)] = v;
            }
        }
        out
    }
}

fn to_integer(v: f64) -> i64 {
    let r = v.round();
    assert!((v - r).abs() < 1e-9, "constraint coefficient {v} is not an integer");
    r as i64
}

/// Real basis of `{X ∈ M_n(K) : X^# F + F X = 0}` (all of `gl_n(K)` when
/// `form` is `None`), computed as an exact rational nullspace. Quaternionic
/// matrices are returned in their complex `2n x 2n` form.
pub fn lie_algebra_basis(field: KField, n: usize, form: Option<(&CMat, FormKind)>) -> Vec<CMat> {
    let cs = CoordSystem::for_field(field, n, n);
    let d = cs.dim();
    let Some((f, kind)) = form else {
        return (0..d).map(|r| cs.unit(r)).collect();
    };
    let images: Vec<CMat> = (0..d)
        .map(|r| {
            let x = cs.unit(r);
            kind.apply(&x) * f + f * &x
        })
        .collect();
    let (rows, cols) = images[0].shape();
    let mut ech = Echelon::new(d);
    for i in 0..rows {
        for j in 0..cols {
            for part in 0..2 {
                let row = (0..d).filter_map(|r| {
                    let z = images[r][(i, j)];
                    let v = to_integer(if part == 0 { z.re } else { z.im });
                    (v != 0).then(|| (r, q(v)))
                });
                ech.insert(row);
            }
        }
    }
    ech.nullspace()
        .into_iter()
        .map(|coeffs| {
            let mut x = CMat::zeros(cs.matrix_shape().0, cs.matrix_shape().1);
            for (r, c) in coeffs.iter().enumerate() {
                let v = rational_to_f64(c);
                if v != 0.0 {
                    x += cs.unit(r) * C64::new(v, 0.0);
                }
            }
            x
        })
        .collect()
}
