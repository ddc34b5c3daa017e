//! Exact check of the first fundamental theorems in the skew setting:
//! the invariants of `GL(V)` on `Λ(V⊗U ⊕ V*⊗W)`, of `O(U)` on `Λ(U⊗V)` and
//! of `Sp(U)` on `Λ(U⊗V)` are generated by explicit degree-two elements.
//!
//! Everything is computed in weight bases with integer coefficients.
//! Invariants of the connected group are the weight-zero vectors killed by
//! the raising operators of a Borel subalgebra; disconnected groups add one
//! signed-permutation representative.

use crate::clifford::wedge_sign;
use crate::error::{Error, Result};
use crate::linalg::{q, Echelon, Q};
use crate::orthogonal::{DualPairSpec, Family};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Sparse exterior element with rational coefficients.
pub type QExterior = BTreeMap<u64, Q>;

fn q_wedge(a: &QExterior, b: &QExterior) -> QExterior {
    let mut out = QExterior::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let s = wedge_sign(*ma, *mb);
            if s == 0 {
                continue;
            }
            let e = out.entry(ma | mb).or_insert_with(Q::zero);
            if s > 0 {
                *e += ca * cb;
            } else {
                *e -= ca * cb;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn pair_term(out: &mut QExterior, i: usize, j: usize, c: i64) {
    // (e_i ∧ e_j) in sorted form.
    let s = wedge_sign(1 << i, 1 << j);
    if s == 0 {
        return;
    }
    let e = out.entry((1u64 << i) | (1u64 << j)).or_insert_with(Q::zero);
    *e += q(c * s as i64);
    if e.is_zero() {
        out.remove(&((1u64 << i) | (1u64 << j)));
    }
}

/// A group with its action on the tensor space used by a generator theorem.
///
/// Coordinates are group-index major: `v_k⊗u_a` sits at `k·m + a`, followed
/// for `Gl` by `v*_k⊗w_b` at `n·m + k·l + b`. The `O(n)` basis is split,
/// `b(w_k, w_{n-1-k}) = 1`; the `Sp(2n)` basis is `e_0..e_{n-1}, f_0..f_{n-1}`
/// with `ω(e_k, f_k) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "lowercase")]
pub enum GeneratorSetting {
    /// `GL(n)` on `C^n⊗C^m ⊕ (C^n)*⊗C^l`.
    Gl { n: usize, m: usize, l: usize },
    /// `O(n)` on `C^n⊗C^m`.
    O { n: usize, m: usize },
    /// `Sp(2n)` on `C^{2n}⊗C^m`.
    Sp { n: usize, m: usize },
}

impl fmt::Display for GeneratorSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorSetting::Gl { n, m, l } => write!(f, "GL({n}) on C^{n}xC^{m} + (C^{n})*xC^{l}"),
            GeneratorSetting::O { n, m } => write!(f, "O({n}) on C^{n}xC^{m}"),
            GeneratorSetting::Sp { n, m } => write!(f, "Sp({}) on C^{}xC^{m}", 2 * n, 2 * n),
        }
    }
}

/// Signed permutation of coordinates: `e_i ↦ sign[i] e_{perm[i]}`.
#[derive(Debug, Clone)]
struct SignedPerm {
    perm: Vec<usize>,
    sign: Vec<i64>,
}

impl SignedPerm {
    fn apply(&self, mask: u64) -> (u64, i64) {
        let mut out: QExterior = QExterior::new();
        out.insert(0, Q::one());
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut v = QExterior::new();
            v.insert(1 << self.perm[i], q(self.sign[i]));
            out = q_wedge(&out, &v);
        }
        let (m, c) = out.into_iter().next().expect("signed permutations keep blades nonzero");
        (m, if c.is_one() { 1 } else { -1 })
    }
}

/// Integer model of one setting.
struct Model {
    dim: usize,
    weights: Vec<Vec<i64>>,
    raising: Vec<Vec<(usize, usize, i64)>>,
    reflection: Option<SignedPerm>,
    generators: Vec<QExterior>,
}

impl GeneratorSetting {
    /// Dimension of the tensor space.
    pub fn dim(&self) -> usize {
        match *self {
            GeneratorSetting::Gl { n, m, l } => n * (m + l),
            GeneratorSetting::O { n, m } => n * m,
            GeneratorSetting::Sp { n, m } => 2 * n * m,
        }
    }

    /// Every setting whose tensor space has dimension at most `max_dim`,
    /// with the group of rank at most 3 and auxiliary dimensions at most 4.
    pub fn grid(max_dim: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for n in 1..=4 {
            for m in 1..=4 {
                if n <= 3 {
                    for l in 1..=4 {
                        out.push(GeneratorSetting::Gl { n, m, l });
                    }
                    out.push(GeneratorSetting::Sp { n, m });
                }
                out.push(GeneratorSetting::O { n, m });
            }
        }
        out.retain(|s| s.dim() <= max_dim);
        out
    }

    /// The setting matching the complexification of a pair, when the group
    /// `G_C` is a single classical group acting on one of the model spaces.
    pub fn for_pair(spec: &DualPairSpec) -> Option<Self> {
        let p = &spec.params;
        Some(match spec.family {
            Family::RealOrthogonal => GeneratorSetting::O { n: p[0] + p[1], m: p[2] + p[3] },
            Family::Unitary => GeneratorSetting::Gl { n: p[0] + p[1], m: p[2] + p[3], l: p[2] + p[3] },
            Family::RealSymplectic => GeneratorSetting::Sp { n: p[0], m: 2 * p[1] },
            Family::QuaternionicUnitary => GeneratorSetting::Sp { n: p[0] + p[1], m: 2 * (p[2] + p[3]) },
            Family::QuaternionicSkew => GeneratorSetting::O { n: 2 * p[0], m: 2 * p[1] },
            Family::GlReal | Family::ComplexGl => GeneratorSetting::Gl { n: p[0], m: p[1], l: p[1] },
            Family::GlQuaternionic => GeneratorSetting::Gl { n: 2 * p[0], m: 2 * p[1], l: 2 * p[1] },
            Family::ComplexOrthogonal => GeneratorSetting::O { n: p[0], m: p[1] },
            Family::ComplexSymplectic => GeneratorSetting::Sp { n: p[0], m: 2 * p[1] },
            Family::ComplexOrthogonalReal | Family::ComplexSymplecticReal | Family::GlComplex => return None,
        })
    }

    fn model(&self) -> Model {
        match *self {
            GeneratorSetting::Gl { n, m, l } => {
                let u = |k: usize, a: usize| k * m + a;
                let w = |k: usize, b: usize| n * m + k * l + b;
                let mut weights = vec![vec![0; n]; self.dim()];
                for k in 0..n {
                    (0..m).for_each(|a| weights[u(k, a)][k] = 1);
                    (0..l).for_each(|b| weights[w(k, b)][k] = -1);
                }
                // E_{i,i+1}: v_{i+1} ↦ v_i and, dually, v*_i ↦ -v*_{i+1}.
                let raising = (0..n.saturating_sub(1))
                    .map(|i| {
                        let mut x: Vec<(usize, usize, i64)> = (0..m).map(|a| (u(i, a), u(i + 1, a), 1)).collect();
                        x.extend((0..l).map(|b| (w(i + 1, b), w(i, b), -1)));
                        x
                    })
                    .collect();
                let mut generators = Vec::new();
                for a in 0..m {
                    for b in 0..l {
                        let mut g = QExterior::new();
                        (0..n).for_each(|k| pair_term(&mut g, u(k, a), w(k, b), 1));
                        generators.push(g);
                    }
                }
                Model { dim: self.dim(), weights, raising, reflection: None, generators }
            }
            GeneratorSetting::O { n, m } => {
                // Split basis w_0..w_{n-1} with b(w_k, w_{n-1-k}) = 1.
                let idx = |k: usize, a: usize| k * m + a;
                let bar = |k: usize| n - 1 - k;
                let h = n / 2;
                let mut weights = vec![vec![0; h.max(1)]; self.dim()];
                for k in 0..h {
                    for a in 0..m {
                        weights[idx(k, a)][k] = 1;
                        weights[idx(bar(k), a)][k] = -1;
                    }
                }
                // Upper-triangular part of so(n): E_ij - E_{bar j, bar i}, i < j.
                let mut raising = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        if i + j == n - 1 {
                            continue;
                        }
                        let mut x = Vec::new();
                        for a in 0..m {
                            x.push((idx(i, a), idx(j, a), 1));
                            x.push((idx(bar(j), a), idx(bar(i), a), -1));
                        }
                        raising.push(x);
                    }
                }
                let reflection = {
                    let mut perm: Vec<usize> = (0..self.dim()).collect();
                    let mut sign = vec![1; self.dim()];
                    for a in 0..m {
                        if n % 2 == 1 {
                            sign[idx(h, a)] = -1;
                        } else {
                            perm[idx(0, a)] = idx(n - 1, a);
                            perm[idx(n - 1, a)] = idx(0, a);
                        }
                    }
                    SignedPerm { perm, sign }
                };
                let mut generators = Vec::new();
                for a in 0..m {
                    for b in a..m {
                        let mut g = QExterior::new();
                        (0..n).for_each(|k| pair_term(&mut g, idx(k, a), idx(bar(k), b), 1));
                        if !g.is_empty() {
                            generators.push(g);
                        }
                    }
                }
                Model { dim: self.dim(), weights, raising, reflection: Some(reflection), generators }
            }
            GeneratorSetting::Sp { n, m } => {
                // e_k = index k, f_k = index n + k, ω(e_k, f_k) = 1.
                let e = |k: usize, a: usize| k * m + a;
                let f = |k: usize, a: usize| (n + k) * m + a;
                let mut weights = vec![vec![0; n]; self.dim()];
                for k in 0..n {
                    for a in 0..m {
                        weights[e(k, a)][k] = 1;
                        weights[f(k, a)][k] = -1;
                    }
                }
                let mut raising = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let mut x = Vec::new();
                        if i < j {
                            // e_j ↦ e_i, f_i ↦ -f_j.
                            for a in 0..m {
                                x.push((e(i, a), e(j, a), 1));
                                x.push((f(j, a), f(i, a), -1));
                            }
                        } else if i == j {
                            // f_i ↦ e_i.
                            (0..m).for_each(|a| x.push((e(i, a), f(i, a), 1)));
                        } else {
                            // f_j ↦ e_i, f_i ↦ e_j for i > j.
                            for a in 0..m {
                                x.push((e(i, a), f(j, a), 1));
                                x.push((e(j, a), f(i, a), 1));
                            }
                        }
                        raising.push(x);
                    }
                }
                let mut generators = Vec::new();
                for a in 0..m {
                    for b in a..m {
                        let mut g = QExterior::new();
                        for k in 0..n {
                            pair_term(&mut g, e(k, a), f(k, b), 1);
                            pair_term(&mut g, f(k, a), e(k, b), -1);
                        }
                        if !g.is_empty() {
                            generators.push(g);
                        }
                    }
                }
                Model { dim: self.dim(), weights, raising, reflection: None, generators }
            }
        }
    }

    /// The degree-two generators `λ_{a,b}`, `η_{a,b}` or `γ_{a,b}` in the
    /// weight basis of this setting.
    pub fn generator_elements(&self) -> Vec<QExterior> {
        self.model().generators
    }
}

/// Per-degree comparison of invariant and generated dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeComparison {
    pub degree: usize,
    pub invariant_dim: usize,
    pub generated_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationReport {
    pub setting: String,
    pub degrees: Vec<DegreeComparison>,
    pub matches: bool,
}

impl GenerationReport {
    pub fn invariant_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.invariant_dim).collect()
    }
}

fn blade_weight(model: &Model, mask: u64) -> Vec<i64> {
    let mut w = vec![0; model.weights[0].len()];
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        for (a, b) in w.iter_mut().zip(&model.weights[i]) {
            *a += b;
        }
    }
    w
}

/// Image of a blade under the derivation given by sparse `(row, col, c)`
/// entries.
fn derive(x: &[(usize, usize, i64)], mask: u64) -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    for &(i, t, c) in x {
        if mask & (1 << t) == 0 {
            continue;
        }
        if i == t {
            out.push((mask, c));
        } else if mask & (1 << i) == 0 {
            let rest = mask & !(1 << t);
            // e_i takes the slot of e_t: sign of moving e_i to its sorted place.
            let (lo, hi) = if t < i { (t, i) } else { (i, t) };
            let between = ((1u64 << hi) - (1u64 << (lo + 1))) & rest;
            let s = if between.count_ones().is_multiple_of(2) { 1 } else { -1 };
            out.push((rest | (1 << i), c * s));
        }
    }
    out
}

fn invariant_dim(model: &Model, degree: usize) -> usize {
    let blades: Vec<u64> = super::exterior::combinations(model.dim, degree)
        .into_iter()
        .filter(|&m| blade_weight(model, m).iter().all(|&x| x == 0))
        .collect();
    if blades.is_empty() {
        return 0;
    }
    let col: HashMap<u64, usize> = blades.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut ech = Echelon::new(blades.len());
    for x in &model.raising {
        let mut rows: HashMap<u64, BTreeMap<usize, i64>> = HashMap::new();
        for (j, &m) in blades.iter().enumerate() {
            for (t, c) in derive(x, m) {
                *rows.entry(t).or_default().entry(j).or_insert(0) += c;
            }
        }
        let mut keys: Vec<u64> = rows.keys().copied().collect();
        keys.sort_unstable();
        for k in keys {
            ech.insert(rows[&k].iter().filter(|(_, &c)| c != 0).map(|(&j, &c)| (j, q(c))));
        }
    }
    let basis = ech.nullspace();
    let Some(refl) = &model.reflection else { return basis.len() };
    if basis.is_empty() {
        return 0;
    }
    // Fixed vectors of the reflection inside the connected invariants.
    let mut fixed = Echelon::new(basis.len());
    let mut rows: HashMap<u64, BTreeMap<usize, Q>> = HashMap::new();
    for (k, v) in basis.iter().enumerate() {
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (image, s) = refl.apply(blades[j]);
            debug_assert!(col.contains_key(&image));
            let e = rows.entry(image).or_default().entry(k).or_insert_with(Q::zero);
            *e += if s > 0 { c.clone() } else { -c.clone() };
            let e = rows.entry(blades[j]).or_default().entry(k).or_insert_with(Q::zero);
            *e -= c;
        }
    }
    let mut keys: Vec<u64> = rows.keys().copied().collect();
    keys.sort_unstable();
    for k in keys {
        fixed.insert(rows.remove(&k).expect("key"));
    }
    basis.len() - fixed.rank()
}

/// Compares, in every degree, the invariant dimension with the dimension of
/// the subalgebra generated by the degree-two generators.
pub fn verify_generation(setting: GeneratorSetting) -> Result<GenerationReport> {
    let model = setting.model();
    if model.dim > 16 {
        return Err(Error::CapExceeded(format!("{setting}: exterior dimension 2^{}", model.dim)));
    }
    let ncols = 1usize << model.dim;
    let mut degrees = Vec::new();
    let mut layer: Vec<QExterior> = vec![QExterior::from([(0u64, Q::one())])];
    for degree in 0..=model.dim {
        let generated = if degree % 2 == 1 {
            0
        } else if degree == 0 {
            1
        } else {
            let mut ech = Echelon::new(ncols);
            let mut next = Vec::new();
            for a in &layer {
                for g in &model.generators {
                    let p = q_wedge(g, a);
                    if !p.is_empty() && ech.insert(p.iter().map(|(m, c)| (*m as usize, c.clone()))) {
                        next.push(p);
                    }
                }
            }
            layer = next;
            layer.len()
        };
        degrees.push(DegreeComparison {
            degree,
            invariant_dim: invariant_dim(&model, degree),
            generated_dim: generated,
        });
    }
    let matches = degrees.iter().all(|d| d.invariant_dim == d.generated_dim);
    Ok(GenerationReport { setting: setting.to_string(), degrees, matches })
}

/// Whether `w` is annihilated by every raising operator, has weight zero,
/// and is fixed by the component representative.
pub fn is_invariant(setting: GeneratorSetting, w: &QExterior) -> bool {
    let model = setting.model();
    if w.keys().any(|&m| blade_weight(&model, m).iter().any(|&x| x != 0)) {
        return false;
    }
    for x in &model.raising {
        let mut acc: HashMap<u64, Q> = HashMap::new();
        for (m, c) in w {
            for (t, s) in derive(x, *m) {
                *acc.entry(t).or_insert_with(Q::zero) += c * q(s);
            }
        }
        if acc.values().any(|v| !v.is_zero()) {
            return false;
        }
    }
    if let Some(r) = &model.reflection {
        let mut image = QExterior::new();
        for (m, c) in w {
            let (t, s) = r.apply(*m);
            image.insert(t, if s > 0 { c.clone() } else { -c.clone() });
        }
        if &image != w {
            return false;
        }
    }
    true
}
