use super::model::{lie_algebra_basis, CoordKind, CoordSystem, FormKind, KField};
use super::{random_lie_combination, LieElement, OrthogonalMap};
use crate::clifford::{QuadraticSpace, SpaceRef};
use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::scalar::C64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The irreducible reductive dual pairs handled by the library: ten real
/// families inside `O(p, q)` and three complex families inside `O(N, C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `(O(p1,q1), O(p2,q2))`, params `[p1, q1, p2, q2]`.
    RealOrthogonal,
    /// `(U(p1,q1), U(p2,q2))`, params `[p1, q1, p2, q2]`.
    Unitary,
    /// `(Sp(2n1,R), Sp(2n2,R))`, params `[n1, n2]`.
    RealSymplectic,
    /// `(O(n1,C), O(n2,C))` as a real pair, params `[n1, n2]`, both `> 1`.
    ComplexOrthogonalReal,
    /// `(Sp(2n1,C), Sp(2n2,C))` as a real pair, params `[n1, n2]`.
    ComplexSymplecticReal,
    /// `(Sp(p1,q1,H), Sp(p2,q2,H))`, params `[p1, q1, p2, q2]`.
    QuaternionicUnitary,
    /// `(O*(n1,H), O*(n2,H))`, params `[n1, n2]`, both `> 1`.
    QuaternionicSkew,
    /// `(GL(n1,R), GL(n2,R))`, params `[n1, n2]`.
    GlReal,
    /// `(GL(n1,C), GL(n2,C))` as a real pair, params `[n1, n2]`.
    GlComplex,
    /// `(GL(n1,H), GL(n2,H))`, params `[n1, n2]`.
    GlQuaternionic,
    /// `(O(n,C), O(m,C))` in `O(nm, C)`, params `[n, m]`.
    ComplexOrthogonal,
    /// `(Sp(2n,C), Sp(2m,C))` in `O(4nm, C)`, params `[n, m]`.
    ComplexSymplectic,
    /// `(GL(n,C), GL(m,C))` in `O(2nm, C)`, params `[n, m]`.
    ComplexGl,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::RealOrthogonal,
        Family::Unitary,
        Family::RealSymplectic,
        Family::ComplexOrthogonalReal,
        Family::ComplexSymplecticReal,
        Family::QuaternionicUnitary,
        Family::QuaternionicSkew,
        Family::GlReal,
        Family::GlComplex,
        Family::GlQuaternionic,
        Family::ComplexOrthogonal,
        Family::ComplexSymplectic,
        Family::ComplexGl,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::RealOrthogonal => "real-orthogonal",
            Family::Unitary => "unitary",
            Family::RealSymplectic => "real-symplectic",
            Family::ComplexOrthogonalReal => "complex-orthogonal-real",
            Family::ComplexSymplecticReal => "complex-symplectic-real",
            Family::QuaternionicUnitary => "quaternionic-unitary",
            Family::QuaternionicSkew => "quaternionic-skew",
            Family::GlReal => "gl-real",
            Family::GlComplex => "gl-complex",
            Family::GlQuaternionic => "gl-quaternionic",
            Family::ComplexOrthogonal => "complex-orthogonal",
            Family::ComplexSymplectic => "complex-symplectic",
            Family::ComplexGl => "complex-gl",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == tag)
    }

    pub fn param_count(self) -> usize {
        match self {
            Family::RealOrthogonal | Family::Unitary | Family::QuaternionicUnitary => 4,
            _ => 2,
        }
    }

    /// Smallest parameters accepted by [`build_pair`].
    pub fn minimal_params(self) -> Vec<usize> {
        match self {
            Family::RealOrthogonal | Family::Unitary | Family::QuaternionicUnitary => vec![1, 0, 1, 0],
            Family::ComplexOrthogonalReal | Family::QuaternionicSkew => vec![2, 2],
            _ => vec![1, 1],
        }
    }

    /// Ambient space is complex.
    pub fn complex_ambient(self) -> bool {
        matches!(self, Family::ComplexOrthogonal | Family::ComplexSymplectic | Family::ComplexGl)
    }

    /// Both members are orthogonal groups of real or complex orthogonal
    /// spaces; these pairs lie outside the spinorial Howe duality check.
    pub fn orthogonal_pair(self) -> bool {
        matches!(self, Family::RealOrthogonal | Family::ComplexOrthogonalReal | Family::ComplexOrthogonal)
    }

    /// Preserves a splitting of the ambient space into two maximal isotropic
    /// subspaces.
    pub fn type_two(self) -> bool {
        matches!(self, Family::GlReal | Family::GlComplex | Family::GlQuaternionic | Family::ComplexGl)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "G")]
    G,
    #[serde(rename = "G'")]
    Gp,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::G => Side::Gp,
            Side::Gp => Side::G,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::G => "G",
            Side::Gp => "G'",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LoopKind {
    /// Generates `π1(U(k)) = Z` of a unitary factor.
    Unitary,
    /// Generates `π1(SO(k))` of an orthogonal factor.
    SpecialOrthogonal,
}

/// One-parameter loop `θ ↦ exp(θ X)`, `θ ∈ [0, 2π]`, with `exp(2π X) = 1`.
#[derive(Debug, Clone)]
pub struct Loop {
    pub name: String,
    pub kind: LoopKind,
    pub generator: LieElement,
}

#[derive(Debug, Clone)]
pub struct NamedMap {
    pub name: String,
    pub map: OrthogonalMap,
}

/// Embedded data for one member of the pair.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub name: String,
    pub field: KField,
    /// Size of the natural matrices (`2n` for quaternionic groups).
    pub natural_size: usize,
    /// Real basis of the Lie algebra in the natural representation.
    pub natural_lie: Vec<CMat>,
    /// The same basis embedded in `so(E, b)`.
    pub lie: Vec<LieElement>,
    /// One representative per non-identity generator of `π0`.
    pub reps: Vec<NamedMap>,
    pub loops: Vec<Loop>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ModelKind {
    TypeOne,
    TypeTwo,
}

/// Coordinates on the model space and the change of basis to the
/// distinguished orthogonal basis of the ambient space.
#[derive(Debug, Clone)]
struct Model {
    kind: ModelKind,
    cs: CoordSystem,
    real: bool,
    /// Columns: ambient basis vectors in model coordinates.
    p: CMat,
    p_inv: CMat,
    /// Commuting operators whose joint eigenspaces give the summands of
    /// `E_C`, in ambient coordinates.
    structure: Vec<(StructureTag, CMat)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum StructureTag {
    /// Eigenvalues `±i`: a complex structure commuting with both groups.
    ComplexStructure,
    /// Eigenvalues `±1`: the isotropic splitting `E1 ⊕ E1*`.
    Grading,
}

/// A fully populated dual pair: ambient space, embeddings, Lie algebras,
/// component representatives and compact loops for both members.
#[derive(Debug, Clone)]
pub struct DualPairSpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub ambient: SpaceRef,
    pub g: GroupData,
    pub gp: GroupData,
    model: Model,
}

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn diag_signs(p: usize, q: usize) -> CMat {
    CMat::from_fn(p + q, p + q, |r, col| {
        if r != col {
            c(0.0)
        } else if r < p {
            c(1.0)
        } else {
            c(-1.0)
        }
    })
}

fn symplectic_j(n: usize) -> CMat {
    let mut j = CMat::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(k, n + k)] = c(1.0);
        j[(n + k, k)] = c(-1.0);
    }
    j
}

fn reflection_at(size: usize, i: usize) -> CMat {
    let mut m = CMat::identity(size, size);
    m[(i, i)] = c(-1.0);
    m
}

fn rotation_generator(size: usize, i: usize, j: usize) -> CMat {
    let mut m = CMat::zeros(size, size);
    m[(j, i)] = c(1.0);
    m[(i, j)] = c(-1.0);
    m
}

fn phase_generator(size: usize, i: usize) -> CMat {
    let mut m = CMat::zeros(size, size);
    m[(i, i)] = C64::new(0.0, 1.0);
    m
}

/// Natural data for one side before embedding.
struct SideSetup {
    name: String,
    field: KField,
    lie_field: KField,
    size: usize,
    kdim: usize,
    form: Option<(CMat, FormKind)>,
    reps: Vec<(String, CMat)>,
    loops: Vec<(String, LoopKind, CMat)>,
}

impl SideSetup {
    fn new(name: String, field: KField, kdim: usize) -> Self {
        let size = if field == KField::Quaternion { 2 * kdim } else { kdim };
        Self { name, field, lie_field: field, size, kdim, form: None, reps: Vec::new(), loops: Vec::new() }
    }
}

fn check_params(family: Family, params: &[usize]) -> Result<()> {
    if params.len() != family.param_count() {
        return Err(Error::SideCondition(format!(
            "{} takes {} parameters, got {}",
            family.tag(),
            family.param_count(),
            params.len()
        )));
    }
    if family.param_count() == 4 {
        if params[0] + params[1] == 0 || params[2] + params[3] == 0 {
            return Err(Error::SideCondition("both signatures must be non-empty".into()));
        }
    } else if params.contains(&0) {
        return Err(Error::SideCondition("sizes must be positive".into()));
    }
    if matches!(family, Family::ComplexOrthogonalReal | Family::QuaternionicSkew) && params.contains(&1) {
        return Err(Error::SideCondition(format!("{} requires n1, n2 != 1", family.tag())));
    }
    Ok(())
}

fn sides(family: Family, params: &[usize]) -> (SideSetup, SideSetup, ModelKind, CoordKind, f64) {
    use KField::*;
    let ortho_real = |p: usize, q: usize| {
        let mut s = SideSetup::new(format!("O({p},{q})"), Real, p + q);
        s.form = Some((diag_signs(p, q), FormKind::Transpose));
        if p > 0 {
            s.reps.push(("refl+".into(), reflection_at(p + q, 0)));
        }
        if q > 0 {
            s.reps.push(("refl-".into(), reflection_at(p + q, p)));
        }
        if p >= 2 {
            s.loops.push((format!("SO({p})"), LoopKind::SpecialOrthogonal, rotation_generator(p + q, 0, 1)));
        }
        if q >= 2 {
            s.loops.push((format!("SO({q})"), LoopKind::SpecialOrthogonal, rotation_generator(p + q, p, p + 1)));
        }
        s
    };
    let unitary = |p: usize, q: usize| {
        let mut s = SideSetup::new(format!("U({p},{q})"), Complex, p + q);
        s.form = Some((diag_signs(p, q), FormKind::ConjTranspose));
        if p > 0 {
            s.loops.push(("U(p)".into(), LoopKind::Unitary, phase_generator(p + q, 0)));
        }
        if q > 0 {
            s.loops.push(("U(q)".into(), LoopKind::Unitary, phase_generator(p + q, p)));
        }
        s
    };
    let symplectic = |n: usize, field: KField, complex_form: bool| {
        let mut s = SideSetup::new(format!("Sp({},{})", 2 * n, field.symbol()), field, 2 * n);
        s.form = Some((symplectic_j(n), FormKind::Transpose));
        if complex_form {
            s.lie_field = Real;
        }
        if field == Real {
            s.loops.push((format!("U({n})"), LoopKind::Unitary, rotation_generator(2 * n, 0, n)));
        }
        s
    };
    // Complex orthogonal groups: `first` selects which basis vector the
    // component representative reflects.
    let ortho_complex = |n: usize, field: KField, first: bool| {
        let mut s = SideSetup::new(format!("O({n},C)"), field, n);
        s.form = Some((CMat::identity(n, n), FormKind::Transpose));
        if field == Real {
            s.lie_field = Real;
        }
        let i = if first { 0 } else { n - 1 };
        s.reps.push((if first { "refl(e1)".into() } else { format!("refl(f{n})") }, reflection_at(n, i)));
        if n >= 2 {
            s.loops.push((format!("SO({n})"), LoopKind::SpecialOrthogonal, rotation_generator(n, 0, 1)));
        }
        s
    };
    let gl = |n: usize, field: KField, rep: &str| {
        let mut s = SideSetup::new(format!("GL({n},{})", field.symbol()), field, n);
        match field {
            Real => {
                s.reps.push((rep.into(), reflection_at(n, 0)));
                if n >= 2 {
                    s.loops.push((format!("SO({n})"), LoopKind::SpecialOrthogonal, rotation_generator(n, 0, 1)));
                }
            }
            Complex => s.loops.push((format!("U({n})"), LoopKind::Unitary, phase_generator(n, 0))),
            Quaternion => {}
        }
        s
    };
    let p = params;
    match family {
        Family::RealOrthogonal => {
            (ortho_real(p[0], p[1]), ortho_real(p[2], p[3]), ModelKind::TypeOne, CoordKind::Real, 1.0)
        }
        Family::Unitary => (unitary(p[0], p[1]), unitary(p[2], p[3]), ModelKind::TypeOne, CoordKind::ComplexKl, 1.0),
        Family::RealSymplectic => {
            (symplectic(p[0], Real, false), symplectic(p[1], Real, false), ModelKind::TypeOne, CoordKind::Real, 1.0)
        }
        Family::ComplexOrthogonalReal => (
            ortho_complex(p[0], Complex, true),
            ortho_complex(p[1], Complex, false),
            ModelKind::TypeOne,
            CoordKind::ComplexKl,
            1.0,
        ),
        Family::ComplexSymplecticReal => (
            symplectic(p[0], Complex, false),
            symplectic(p[1], Complex, false),
            ModelKind::TypeOne,
            CoordKind::ComplexKl,
            1.0,
        ),
        Family::QuaternionicUnitary => {
            let quat = |pp: usize, qq: usize| {
                let mut s = SideSetup::new(format!("Sp({pp},{qq},H)"), Quaternion, pp + qq);
                let h = diag_signs(pp, qq);
                let mut f = CMat::zeros(2 * (pp + qq), 2 * (pp + qq));
                f.view_mut((0, 0), (pp + qq, pp + qq)).copy_from(&h);
                f.view_mut((pp + qq, pp + qq), (pp + qq, pp + qq)).copy_from(&h);
                s.form = Some((f, FormKind::ConjTranspose));
                s
            };
            (quat(p[0], p[1]), quat(p[2], p[3]), ModelKind::TypeOne, CoordKind::Quaternion, 0.5)
        }
        Family::QuaternionicSkew => {
            let skew = |n: usize| {
                let mut s = SideSetup::new(format!("O*({n},H)"), Quaternion, n);
                s.form = Some((-symplectic_j(n), FormKind::ConjTranspose));
                s.loops.push((format!("U({n})"), LoopKind::Unitary, rotation_generator(2 * n, 0, n)));
                s
            };
            (skew(p[0]), skew(p[1]), ModelKind::TypeOne, CoordKind::Quaternion, 0.5)
        }
        Family::GlReal => (gl(p[0], Real, "s"), gl(p[1], Real, "t"), ModelKind::TypeTwo, CoordKind::Real, 1.0),
        Family::GlComplex => {
            (gl(p[0], Complex, "s"), gl(p[1], Complex, "t"), ModelKind::TypeTwo, CoordKind::ComplexKl, 1.0)
        }
        Family::GlQuaternionic => {
            (gl(p[0], Quaternion, "s"), gl(p[1], Quaternion, "t"), ModelKind::TypeTwo, CoordKind::Quaternion, 1.0)
        }
        Family::ComplexOrthogonal => (
            ortho_complex(p[0], Real, true),
            ortho_complex(p[1], Real, false),
            ModelKind::TypeOne,
            CoordKind::ComplexEntries,
            1.0,
        ),
        Family::ComplexSymplectic => (
            symplectic(p[0], Complex, true),
            symplectic(p[1], Complex, true),
            ModelKind::TypeOne,
            CoordKind::ComplexEntries,
            1.0,
        ),
        Family::ComplexGl => {
            let mk = |n: usize, rep: &str| {
                let mut s = gl(n, Complex, rep);
                s.lie_field = Real;
                s
            };
            (mk(p[0], "s"), mk(p[1], "t"), ModelKind::TypeTwo, CoordKind::ComplexEntries, 1.0)
        }
    }
}

/// Orthonormal basis for a Gram matrix that is a symmetric signed
/// permutation: fixed points keep their vector, swapped pairs `(x, y)` with
/// `b(x, y) = c` give `(x ± y)/√2` of norms `±c`. Positive vectors come first.
/// Over `C`, negative vectors are multiplied by `i`.
fn orthonormalize(gram: &CMat, complex: bool) -> Result<(CMat, Vec<i8>)> {
    let d = gram.nrows();
    let mut partner = vec![usize::MAX; d];
    for r in 0..d {
        let nz: Vec<usize> = (0..d).filter(|&s| gram[(r, s)].norm() > 1e-12).collect();
        if nz.len() != 1 || (gram[(r, nz[0])].norm() - 1.0).abs() > 1e-12 || gram[(r, nz[0])].im.abs() > 1e-12 {
            return Err(Error::InvalidSpace("model Gram matrix is not a signed permutation".into()));
        }
        partner[r] = nz[0];
    }
    let mut pos: Vec<Vec<C64>> = Vec::new();
    let mut neg: Vec<Vec<C64>> = Vec::new();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for r in 0..d {
        let p = partner[r];
        let v = gram[(r, p)].re;
        if p == r {
            let mut e = vec![c(0.0); d];
            e[r] = c(1.0);
            if v > 0.0 {
                pos.push(e)
            } else {
                neg.push(e)
            }
        } else if p > r {
            let mut plus = vec![c(0.0); d];
            let mut minus = vec![c(0.0); d];
            plus[r] = c(h);
            plus[p] = c(h);
            minus[r] = c(h);
            minus[p] = c(-h);
            if v > 0.0 {
                pos.push(plus);
                neg.push(minus);
            } else {
                pos.push(minus);
                neg.push(plus);
            }
        }
    }
    let npos = pos.len();
    let mut cols = pos;
    if complex {
        cols.extend(neg.into_iter().map(|v| v.into_iter().map(|z| z * C64::new(0.0, 1.0)).collect()));
    } else {
        cols.extend(neg);
    }
    let p = CMat::from_fn(d, d, |r, col| cols[col][r]);
    let norms = (0..d).map(|i| if complex || i < npos { 1 } else { -1 }).collect();
    Ok((p, norms))
}

fn block_diag(a: &CMat, b: &CMat) -> CMat {
    let (n, m) = (a.nrows(), b.nrows());
    let mut out = CMat::zeros(n + m, n + m);
    out.view_mut((0, 0), (n, n)).copy_from(a);
    out.view_mut((n, n), (m, m)).copy_from(b);
    out
}

/// Builds the pair `family` at `params`, rejecting sizes excluded by the
/// classification.
pub fn build_pair(family: Family, params: &[usize]) -> Result<DualPairSpec> {
    check_params(family, params)?;
    let (gs, gps, kind, coord_kind, form_scale) = sides(family, params);
    let cs = CoordSystem { kind: coord_kind, n: gs.kdim, m: gps.kdim };
    let complex = family.complex_ambient();
    let d1 = cs.dim();
    let dim = if kind == ModelKind::TypeTwo { 2 * d1 } else { d1 };
    if dim > crate::clifford::MAX_DIM {
        return Err(Error::CapExceeded(format!("ambient dimension {dim}")));
    }

    let gram = match kind {
        ModelKind::TypeTwo => {
            let mut g = CMat::zeros(dim, dim);
            for r in 0..d1 {
                g[(r, d1 + r)] = c(1.0);
                g[(d1 + r, r)] = c(1.0);
            }
            g
        }
        ModelKind::TypeOne => {
            let (f1, sharp) = gs.form.clone().expect("type I groups carry a form");
            let (f2, _) = gps.form.clone().expect("type I groups carry a form");
            let units: Vec<CMat> = (0..d1).map(|r| cs.unit(r)).collect();
            CMat::from_fn(d1, d1, |r, s| {
                let z = (sharp.apply(&units[r]) * &f1 * &units[s] * &f2).trace() * form_scale;
                if complex {
                    z
                } else {
                    c(z.re)
                }
            })
        }
    };
    let (p, norms) = orthonormalize(&gram, complex)?;
    let nmat = CMat::from_diagonal(&nalgebra::DVector::from_iterator(dim, norms.iter().map(|&x| c(x as f64))));
    let p_inv = &nmat * p.transpose() * &gram;
    let ambient = if complex {
        QuadraticSpace::complex(dim)?
    } else {
        QuadraticSpace::new(crate::clifford::FieldKind::Real, norms.clone())?
    }
    .shared();

    let mut model = Model { kind, cs, real: !complex, p, p_inv, structure: Vec::new() };
    let two = |op: CMat, inv_t: CMat| if kind == ModelKind::TypeTwo { block_diag(&op, &inv_t) } else { op };
    if matches!(coord_kind, CoordKind::ComplexKl) {
        let j = cs.operator(|x| x * C64::new(0.0, 1.0));
        let jt = j.transpose();
        let s = two(j, jt);
        model.structure.push((StructureTag::ComplexStructure, model.to_ambient(&s)));
    }
    if kind == ModelKind::TypeTwo {
        let z = block_diag(&CMat::identity(d1, d1), &(-CMat::identity(d1, d1)));
        model.structure.push((StructureTag::Grading, model.to_ambient(&z)));
    }

    let mut spec = DualPairSpec {
        family,
        params: params.to_vec(),
        ambient,
        g: GroupData {
            name: gs.name.clone(),
            field: gs.field,
            natural_size: gs.size,
            natural_lie: vec![],
            lie: vec![],
            reps: vec![],
            loops: vec![],
        },
        gp: GroupData {
            name: gps.name.clone(),
            field: gps.field,
            natural_size: gps.size,
            natural_lie: vec![],
            lie: vec![],
            reps: vec![],
            loops: vec![],
        },
        model,
    };
    for (side, setup) in [(Side::G, &gs), (Side::Gp, &gps)] {
        let natural_lie = lie_algebra_basis(setup.lie_field, setup.kdim, setup.form.as_ref().map(|(f, k)| (f, *k)));
        let lie = natural_lie.iter().map(|x| spec.embed_lie(side, x)).collect::<Result<Vec<_>>>()?;
        let reps = setup
            .reps
            .iter()
            .map(|(name, m)| Ok(NamedMap { name: name.clone(), map: spec.embed_group(side, m)? }))
            .collect::<Result<Vec<_>>>()?;
        let loops = setup
            .loops
            .iter()
            .map(|(name, kind, x)| Ok(Loop { name: name.clone(), kind: *kind, generator: spec.embed_lie(side, x)? }))
            .collect::<Result<Vec<_>>>()?;
        let data = match side {
            Side::G => &mut spec.g,
            Side::Gp => &mut spec.gp,
        };
        data.natural_lie = natural_lie;
        data.lie = lie;
        data.reps = reps;
        data.loops = loops;
    }
    Ok(spec)
}

impl Model {
    fn to_ambient(&self, m: &CMat) -> CMat {
        let out = &self.p_inv * m * &self.p;
        if self.real {
            out.map(|z| c(z.re))
        } else {
            out
        }
    }

    fn action(&self, side: Side, natural: &CMat, lie: bool) -> Result<CMat> {
        let op = match (side, lie) {
            (Side::G, _) => self.cs.operator(|x| natural * x),
            (Side::Gp, true) => self.cs.operator(|x| -(x * natural)),
            (Side::Gp, false) => {
                let inv = natural
                    .clone()
                    .try_inverse()
                    .ok_or_else(|| Error::DimensionMismatch("singular group element".into()))?;
                self.cs.operator(|x| x * &inv)
            }
        };
        Ok(match self.kind {
            ModelKind::TypeOne => op,
            ModelKind::TypeTwo => {
                let dual = if lie {
                    -op.transpose()
                } else {
                    op.clone()
                        .try_inverse()
                        .ok_or_else(|| Error::DimensionMismatch("singular group element".into()))?
                        .transpose()
                };
                block_diag(&op, &dual)
            }
        })
    }
}

impl DualPairSpec {
    pub fn group(&self, side: Side) -> &GroupData {
        match side {
            Side::G => &self.g,
            Side::Gp => &self.gp,
        }
    }

    fn check_natural(&self, side: Side, natural: &CMat) -> Result<()> {
        let n = self.group(side).natural_size;
        if natural.shape() != (n, n) {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n} natural matrix, got {:?}",
                natural.shape()
            )));
        }
        Ok(())
    }

    /// Image of a natural group element in `O(E, b)`.
    pub fn embed_group(&self, side: Side, natural: &CMat) -> Result<OrthogonalMap> {
        self.check_natural(side, natural)?;
        OrthogonalMap::new(&self.ambient, self.model.to_ambient(&self.model.action(side, natural, false)?))
    }

    /// Image of a natural Lie-algebra element in `so(E, b)`.
    pub fn embed_lie(&self, side: Side, natural: &CMat) -> Result<LieElement> {
        self.check_natural(side, natural)?;
        LieElement::new(&self.ambient, self.model.to_ambient(&self.model.action(side, natural, true)?))
    }

    pub fn lie_generators(&self, side: Side) -> &[LieElement] {
        &self.group(side).lie
    }

    pub fn component_reps(&self, side: Side) -> &[NamedMap] {
        &self.group(side).reps
    }

    pub fn loops(&self, side: Side) -> &[Loop] {
        &self.group(side).loops
    }

    pub fn signature(&self) -> (usize, usize) {
        self.ambient.signature()
    }

    /// Stable identifier such as `unitary[1,0,1,0]`.
    pub fn id(&self) -> String {
        let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
        format!("{}[{}]", self.family.tag(), p.join(","))
    }

    /// Human-readable name such as `(U(1,0), U(1,0)) in O(2,0)`.
    pub fn name(&self) -> String {
        let (p, q) = self.signature();
        let ambient =
            if self.family.complex_ambient() { format!("O({},C)", self.ambient.dim()) } else { format!("O({p},{q})") };
        format!("({}, {}) in {}", self.g.name, self.gp.name, ambient)
    }

    /// Whether the spinorial Howe duality check applies.
    pub fn in_howe_scope(&self) -> bool {
        !self.family.orthogonal_pair()
    }

    /// `exp` of a random Lie combination, times a random subset of the
    /// component representatives.
    pub fn random_element<R: Rng>(&self, side: Side, scale: f64, rng: &mut R) -> OrthogonalMap {
        let data = self.group(side);
        let x = random_lie_combination(&data.lie, &self.ambient, scale, self.family.complex_ambient(), rng);
        let mut g = x.exp();
        for rep in &data.reps {
            if rng.random_bool(0.5) {
                g = g.compose(&rep.map);
            }
        }
        g
    }

    pub(crate) fn structure_operators(&self) -> &[(StructureTag, CMat)] {
        &self.model.structure
    }
}
