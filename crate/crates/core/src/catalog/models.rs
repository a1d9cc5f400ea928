//! Compact models (𝔥_r, 𝔳_r, 𝔷_r) for the catalog constructions.
//!
//! Complex modules are built from factor generators over ℂ, tensored, pushed
//! through S²/Λ² when needed, and realified with interleaved (Re, Im)
//! coordinates. Quaternionic modules use (entry, quaternion basis) coordinates.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::algebra::{left_mult_matrix, right_mult_matrix, AlgebraElement, AlgebraKind};
use crate::exactalg::matrix::{complex_structure, conjugation};
use crate::exactalg::{q, CMatrix, GaussRational, QMatrix, Rational};
use crate::liecore::algebra::{lie_algebra_from_matrices, MatrixSpan};
use crate::liecore::pair::{build_nilpotent_pair, heisenberg_algebra, BracketTarget, NilpotentPairData};
use crate::repcat::classical::{skew_unit, unitary_basis};
use crate::repcat::clifford::spin_generators;
use crate::repcat::functor::square_rep;
use crate::repcat::{g2_derivations, RepData};

pub type Params = BTreeMap<String, i64>;

/// Real dimension of 𝔳 above which the engine does not attempt a verification.
pub const MAX_VERIFY_DIM: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    SU(usize),
    U(usize),
    SO(usize),
    Sp(usize),
    Spin(usize),
    G2,
    /// spin(7) ⊂ so(8) as the stabilizer of the octonionic bracket.
    Spin7Oct,
}

impl Factor {
    pub fn dim(&self) -> usize {
        match *self {
            Factor::SU(n) | Factor::U(n) | Factor::SO(n) => n,
            Factor::Sp(m) => 2 * m,
            Factor::Spin(k) => 1 << ((k - 1) / 2),
            Factor::G2 => 7,
            Factor::Spin7Oct => 8,
        }
    }

    fn tag(&self) -> String {
        match self {
            Factor::SU(n) => format!("su{n}"),
            Factor::U(n) => format!("u{n}"),
            Factor::SO(n) => format!("so{n}"),
            Factor::Sp(m) => format!("sp{m}"),
            Factor::Spin(k) => format!("spin{k}"),
            Factor::G2 => "g2".into(),
            Factor::Spin7Oct => "spin7".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Std,
    S2,
    L2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    /// Im ℂ: the form Re(u*·iv).
    ImC,
    /// Λ²ℂᴺ: real and imaginary parts of uᵀ(E_ab − E_ba)v.
    LambdaC2,
    /// u(k) on ℂᵏ⊗ℂᵐ: [u, v] = uv* − vu*.
    Unitary(usize),
    /// ℝ⁷ on 𝕆⊗ℂ: the octonionic bracket applied to real and imaginary parts.
    Oct7,
}

#[derive(Clone, Debug)]
pub struct ComplexSpec {
    pub factors: Vec<Factor>,
    pub shape: Shape,
    pub u1: bool,
    pub targets: Vec<Target>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Layout {
    Complex { factors: Vec<usize>, shape: Shape, n: usize },
    Real { n: usize },
    /// ℍ^{k×m}, coordinates ((a·m + b)·4 + s).
    Quaternionic { k: usize, m: usize },
}

#[derive(Clone, Debug)]
pub struct Model {
    pub construction: String,
    pub rep: RepData,
    pub pair: NilpotentPairData,
    pub layout: Layout,
    /// Faithful representation (and its layout) on which θ recipes act;
    /// differs from `rep` for S²/Λ² models.
    pub theta_rep: RepData,
    pub theta_layout: Layout,
}

/// A lone parameter answers to any name, so tables may call the rank n or m.
fn param(p: &Params, k: &str) -> Result<usize> {
    let v = match (p.get(k), p.len()) {
        (Some(v), _) => *v,
        (None, 1) => *p.values().next().unwrap(),
        _ => return Err(Error::Instantiation(format!("missing parameter {k}"))),
    };
    usize::try_from(v).map_err(|_| Error::Instantiation(format!("parameter {k} = {v} is negative")))
}

fn sp_complex(m: usize) -> (Vec<String>, Vec<CMatrix>) {
    // [[A, B], [−B̄, Ā]] with A ∈ u(m), B complex symmetric
    let n = 2 * m;
    let (la, us) = unitary_basis(m, false);
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for (l, a) in la.into_iter().zip(us) {
        let mut x = CMatrix::zeros(n, n);
        for i in 0..m {
            for j in 0..m {
                x.set(i, j, a.get(i, j).clone());
                x.set(m + i, m + j, a.get(i, j).conj());
            }
        }
        labels.push(l);
        mats.push(x);
    }
    for i in 0..m {
        for j in i..m {
            for (tag, z) in [("R", GaussRational::one()), ("I", GaussRational::i())] {
                let mut x = CMatrix::zeros(n, n);
                x.set(i, m + j, z.clone());
                x.set(j, m + i, z.clone());
                x.set(m + i, j, -&z.conj());
                x.set(m + j, i, -&z.conj());
                labels.push(format!("B{tag}{i}{j}"));
                mats.push(x);
            }
        }
    }
    (labels, mats)
}

/// Stabilizer in so(n) of a span of antisymmetric forms: AᵀB_k + B_kA ∈ span.
pub fn form_stabilizer(forms: &[QMatrix], n: usize) -> Result<Vec<QMatrix>> {
    let span = MatrixSpan::new(forms.to_vec())?;
    let skew: Vec<QMatrix> = (0..n).flat_map(|i| (i + 1..n).map(move |j| skew_unit(n, i, j))).collect();
    let zd = forms.len();
    // unknowns: a (skew coefficients) and c_kl
    let nv = skew.len() + zd * zd;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (k, b) in forms.iter().enumerate() {
        let imgs: Vec<QMatrix> = skew.iter().map(|a| a.transpose().mul(b).add(&b.mul(a))).collect();
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![Rational::zero(); nv];
                for (t, m) in imgs.iter().enumerate() {
                    row[t] = m.get(r, c).clone();
                }
                for (l, bl) in span.basis().iter().enumerate() {
                    row[skew.len() + k * zd + l] = -bl.get(r, c).clone();
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let nr = rows.len();
    let sys = QMatrix::from_vec(nr, nv, rows.into_iter().flatten().collect())?;
    let mut out = Vec::new();
    for sol in sys.kernel() {
        let mut a = QMatrix::zeros(n, n);
        for (t, m) in skew.iter().enumerate() {
            if !sol[t].is_zero() {
                a = a.add(&m.scale(&sol[t]));
            }
        }
        if !a.is_zero() {
            out.push(a);
        }
    }
    // kernel vectors differ in a; reduce to a basis
    let span = MatrixSpan::new(out)?;
    Ok(span.basis().to_vec())
}

fn factor_gens(f: &Factor) -> Result<(Vec<String>, Vec<CMatrix>)> {
    let tag = f.tag();
    let relabel = |ls: Vec<String>| ls.into_iter().map(|l| format!("{tag}.{l}")).collect::<Vec<_>>();
    Ok(match *f {
        Factor::SU(n) => {
            let (l, m) = unitary_basis(n, true);
            (relabel(l), m)
        }
        Factor::U(n) => {
            let (l, m) = unitary_basis(n, false);
            (relabel(l), m)
        }
        Factor::SO(n) => {
            let mut l = Vec::new();
            let mut m = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    l.push(format!("{tag}.A{i}{j}"));
                    m.push(CMatrix::from_real(&skew_unit(n, i, j)));
                }
            }
            (l, m)
        }
        Factor::Sp(m) => {
            let (l, x) = sp_complex(m);
            (relabel(l), x)
        }
        Factor::Spin(k) => {
            let g = spin_generators(k, 0);
            ((0..g.len()).map(|a| format!("{tag}.s{a}")).collect(), g)
        }
        Factor::G2 => {
            let r = g2_derivations()?;
            let l = (0..r.matrices.len()).map(|a| format!("{tag}.d{a}")).collect();
            (l, r.matrices.iter().map(CMatrix::from_real).collect())
        }
        Factor::Spin7Oct => {
            let m = spin7_on_octonions()?;
            ((0..m.len()).map(|a| format!("{tag}.s{a}")).collect(), m.iter().map(CMatrix::from_real).collect())
        }
    })
}

/// Octonionic Heisenberg forms Im(u v̄) on 𝕆 = ℝ⁸.
pub fn octonion_forms() -> Result<Vec<QMatrix>> {
    Ok(heisenberg_algebra(1, AlgebraKind::O)?.bracket_forms)
}

/// Cross-product forms on Im 𝕆: coordinate k of Im(xy).
pub fn cross_product_forms() -> Vec<QMatrix> {
    let o = AlgebraKind::O;
    let mut forms = vec![QMatrix::zeros(7, 7); 7];
    for a in 1..8 {
        for b in 1..8 {
            let (s, c) = o.basis_product(a, b);
            if c > 0 {
                forms[c - 1].set(a - 1, b - 1, q(s as i64));
            }
        }
    }
    forms
}

pub fn spin7_on_octonions() -> Result<Vec<QMatrix>> {
    form_stabilizer(&octonion_forms()?, 8)
}

fn kron_factor(mats: &[CMatrix], dims: &[usize], slot: usize) -> Vec<CMatrix> {
    mats.iter()
        .map(|x| {
            let mut out = CMatrix::identity(1);
            for (t, &d) in dims.iter().enumerate() {
                let f = if t == slot { x.clone() } else { CMatrix::identity(d) };
                out = out.kron(&f);
            }
            out
        })
        .collect()
}

fn unit_form_from<F>(n: usize, f: F) -> QMatrix
where
    F: Fn(usize, &GaussRational, usize, &GaussRational) -> Rational,
{
    // evaluate on real basis vectors: index 2c + t is e_c (t = 0) or i·e_c (t = 1)
    let unit = |t: usize| if t == 0 { GaussRational::one() } else { GaussRational::i() };
    let mut m = QMatrix::zeros(2 * n, 2 * n);
    for p in 0..2 * n {
        for r in 0..2 * n {
            let v = f(p / 2, &unit(p % 2), r / 2, &unit(r % 2));
            if !v.is_zero() {
                m.set(p, r, v);
            }
        }
    }
    m
}

/// Hermitian weights making the standard S² basis e_a·e_b = (e_a⊗e_b + e_b⊗e_a)/2
/// orthogonal for the invariant form: 1 on squares, 1/2 off the diagonal.
fn s2_weights(base: usize) -> QMatrix {
    let mut w = Vec::new();
    for a in 0..base {
        for b in a..base {
            w.push(if a == b { q(1) } else { crate::exactalg::qf(1, 2) });
        }
    }
    CMatrix::from_real(&QMatrix::diag(&w)).realify()
}

fn target_forms(t: &Target, n: usize, dims: &[usize], shape: Shape) -> Result<Vec<QMatrix>> {
    Ok(match t {
        Target::ImC if shape == Shape::S2 => vec![complex_structure(n).mul(&s2_weights(dims[0]))],
        Target::ImC => vec![complex_structure(n)],
        Target::LambdaC2 => {
            let c = conjugation(n);
            let mi = GaussRational::from_ints(0, -1);
            let mut out = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    let mut e = CMatrix::zeros(n, n);
                    e.set(a, b, GaussRational::one());
                    e.set(b, a, GaussRational::from_ints(-1, 0));
                    out.push(c.mul(&e.realify()));
                    out.push(c.mul(&e.scale(&mi).realify()));
                }
            }
            out
        }
        Target::Unitary(k) => {
            let k = *k;
            if !n.is_multiple_of(k) || dims.first() != Some(&k) {
                return Err(Error::Instantiation(format!("u({k}) target needs a leading C^{k} factor")));
            }
            let m = n / k;
            let (_, basis) = unitary_basis(k, false);
            basis
                .iter()
                .map(|x| {
                    // Re tr(X*(uv* − vu*)) for u = α e_(a,b), v = β e_(c,d)
                    unit_form_from(n, |pu, al, pv, be| {
                        let (a, b) = (pu / m, pu % m);
                        let (c, d) = (pv / m, pv % m);
                        if b != d {
                            return Rational::zero();
                        }
                        let t1 = &(&x.get(a, c).conj() * al) * &be.conj();
                        let t2 = &(&x.get(c, a).conj() * be) * &al.conj();
                        (&t1 - &t2).re
                    })
                })
                .collect()
        }
        Target::Oct7 => {
            if n != 8 {
                return Err(Error::Instantiation("Im O target needs C^8".into()));
            }
            let i2 = QMatrix::identity(2);
            octonion_forms()?.iter().map(|b| b.kron(&i2)).collect()
        }
    })
}

/// Realified complex model.
pub fn complex_model(label: &str, spec: &ComplexSpec) -> Result<Model> {
    let dims: Vec<usize> = spec.factors.iter().map(Factor::dim).collect();
    let mut labels = Vec::new();
    let mut gens = Vec::new();
    if spec.u1 {
        labels.push("u1".to_string());
        gens.push(CMatrix::identity(1)); // placeholder, sized below
    }
    for (slot, f) in spec.factors.iter().enumerate() {
        let (l, m) = factor_gens(f)?;
        labels.extend(l);
        gens.extend(kron_factor(&m, &dims, slot));
    }
    let base: usize = dims.iter().product();
    let skip = usize::from(spec.u1);
    let mut mats: Vec<CMatrix> = match spec.shape {
        Shape::Std => gens[skip..].to_vec(),
        Shape::S2 | Shape::L2 => {
            if spec.factors.len() != 1 {
                return Err(Error::Instantiation("S2/L2 models take one factor".into()));
            }
            gens[skip..].iter().map(|x| square_rep(x, spec.shape == Shape::S2)).collect()
        }
    };
    let n = match spec.shape {
        Shape::Std => base,
        Shape::S2 => base * (base + 1) / 2,
        Shape::L2 => base * (base - 1) / 2,
    };
    if spec.u1 {
        mats.insert(0, CMatrix::identity(n).scale(&GaussRational::i()));
    }
    if 2 * n > MAX_VERIFY_DIM {
        return Err(Error::SizeLimit(format!("{label}: real dimension {} exceeds {}", 2 * n, MAX_VERIFY_DIM)));
    }
    // the algebra comes from the (faithful) factor action, since S²/Λ² need
    // not be faithful (U(2) on Λ²ℂ²)
    let mut base_gens: Vec<QMatrix> = gens[skip..].iter().map(CMatrix::realify).collect();
    if spec.u1 {
        base_gens.insert(0, CMatrix::identity(base).scale(&GaussRational::i()).realify());
    }
    let (h, _) = lie_algebra_from_matrices(labels, &base_gens)?;
    let theta_rep = RepData::with_algebra(label, h.clone(), base_gens)?;
    let mut rep = RepData::with_algebra(label, h, mats.iter().map(CMatrix::realify).collect())?;
    rep.complex = Some(mats);
    let mut forms = Vec::new();
    for t in &spec.targets {
        forms.extend(target_forms(t, n, &dims, spec.shape)?);
    }
    let pair = build_nilpotent_pair(label, rep.h.clone(), rep.matrices.clone(), BracketTarget::Forms(forms))?;
    Ok(Model {
        construction: label.to_string(),
        rep,
        pair,
        layout: Layout::Complex { factors: dims.clone(), shape: spec.shape, n },
        theta_rep,
        theta_layout: Layout::Complex { factors: dims, shape: Shape::Std, n: base },
    })
}

fn real_model(label: &str, labels: Vec<String>, mats: Vec<QMatrix>, target: BracketTarget, layout: Layout) -> Result<Model> {
    let rep = RepData::from_matrices(label, labels, mats)?;
    let pair = build_nilpotent_pair(label, rep.h.clone(), rep.matrices.clone(), target)?;
    Ok(Model { construction: label.to_string(), theta_rep: rep.clone(), rep, pair, theta_layout: layout.clone(), layout })
}

fn quat(a: usize) -> AlgebraElement {
    AlgebraElement::basis(AlgebraKind::H, a)
}

/// ℍ^{k×m} with the left action of a k×k quaternion matrix X.
fn quat_left(k: usize, m: usize, x: &[(usize, usize, AlgebraElement)]) -> QMatrix {
    let d = 4 * k * m;
    let mut out = QMatrix::zeros(d, d);
    for (a, c, e) in x {
        let l = left_mult_matrix(e);
        for b in 0..m {
            add_block(&mut out, (*a * m + b) * 4, (*c * m + b) * 4, &l);
        }
    }
    out
}

/// ℍ^{k×m} with u ↦ −uY for an m×m quaternion matrix Y.
fn quat_right(k: usize, m: usize, y: &[(usize, usize, AlgebraElement)]) -> QMatrix {
    let d = 4 * k * m;
    let mut out = QMatrix::zeros(d, d);
    for (dd, b, e) in y {
        // (uY)_{ab} = Σ_d u_{ad} Y_{db}
        let r = right_mult_matrix(e).neg();
        for a in 0..k {
            add_block(&mut out, (a * m + *b) * 4, (a * m + *dd) * 4, &r);
        }
    }
    out
}

fn add_block(m: &mut QMatrix, r0: usize, c0: usize, b: &QMatrix) {
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            if !b.get(i, j).is_zero() {
                let v = m.get(r0 + i, c0 + j) + b.get(i, j);
                m.set(r0 + i, c0 + j, v);
            }
        }
    }
}

type QEntries = Vec<(usize, usize, AlgebraElement)>;

/// Quaternionic skew-hermitian basis of sp(n) as sparse entry lists.
fn sp_entries(n: usize) -> Vec<(String, QEntries)> {
    let neg = |a: usize| quat(a).scale(&q(-1));
    let mut out = Vec::new();
    for a in 0..n {
        for u in 1..4 {
            out.push((format!("D{a}{}", ["", "i", "j", "k"][u]), vec![(a, a, quat(u))]));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            out.push((format!("A{a}{b}"), vec![(a, b, quat(0)), (b, a, neg(0))]));
            for u in 1..4 {
                out.push((format!("S{a}{b}{}", ["", "i", "j", "k"][u]), vec![(a, b, quat(u)), (b, a, quat(u))]));
            }
        }
    }
    out
}

/// Real form on ℍ^{k×m} evaluated on basis vectors e_{(a,b)}·e_s.
fn quat_form<F>(k: usize, m: usize, f: F) -> QMatrix
where
    F: Fn((usize, usize, usize), (usize, usize, usize)) -> Rational,
{
    let d = 4 * k * m;
    let mut out = QMatrix::zeros(d, d);
    let split = |p: usize| (p / 4 / m, (p / 4) % m, p % 4);
    for p in 0..d {
        for r in 0..d {
            let v = f(split(p), split(r));
            if !v.is_zero() {
                out.set(p, r, v);
            }
        }
    }
    out
}

fn qmul(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    a.mul(b).expect("quaternions")
}

/// Im ℍ components of u*v on ℍⁿ.
fn im_quat_forms(n: usize) -> Vec<QMatrix> {
    (1..4)
        .map(|c| {
            quat_form(n, 1, |(a, _, s), (b, _, t)| {
                if a != b {
                    return Rational::zero();
                }
                qmul(&quat(s).conj(), &quat(t)).coords[c].clone()
            })
        })
        .collect()
}

/// Traceless quaternion-hermitian n×n basis.
fn herm_traceless(n: usize) -> Vec<QEntries> {
    let mut out = Vec::new();
    for a in 0..n.saturating_sub(1) {
        out.push(vec![(a, a, quat(0)), (a + 1, a + 1, quat(0).scale(&q(-1)))]);
    }
    for a in 0..n {
        for b in a + 1..n {
            out.push(vec![(a, b, quat(0)), (b, a, quat(0))]);
            for u in 1..4 {
                out.push(vec![(a, b, quat(u)), (b, a, quat(u).scale(&q(-1)))]);
            }
        }
    }
    out
}

fn entry(x: &QEntries, a: usize, b: usize) -> AlgebraElement {
    let mut s = AlgebraElement::zero(AlgebraKind::H);
    for (i, j, e) in x {
        if *i == a && *j == b {
            s = s.add(e).expect("quaternions");
        }
    }
    s
}

/// (U(1)·)Sp(n) on ℍⁿ with 𝔷 = Re ℍ₀^{n×n} ⊕ Im ℍ. The first summand is
/// β_H(u, v) = Re(i·u*Hv) for traceless hermitian H; U(1) is right
/// multiplication by i.
pub fn u1_sp_quat(n: usize, u1: bool) -> Result<Model> {
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    if u1 {
        labels.push("u1".to_string());
        let r = right_mult_matrix(&quat(1));
        let blocks: Vec<&QMatrix> = std::iter::repeat_n(&r, n).collect();
        mats.push(QMatrix::block_diag(&blocks));
    }
    for (l, e) in sp_entries(n) {
        labels.push(format!("sp{n}.{l}"));
        mats.push(quat_left(n, 1, &e));
    }
    let i = quat(1);
    let mut forms: Vec<QMatrix> = herm_traceless(n)
        .iter()
        .map(|h| {
            quat_form(n, 1, |(a, _, s), (b, _, t)| {
                let w = qmul(&qmul(&quat(s).conj(), &entry(h, a, b)), &quat(t));
                qmul(&i, &w).re()
            })
        })
        .collect();
    forms.extend(im_quat_forms(n));
    let label = if u1 { format!("u1-sp{n}-quat") } else { format!("sp{n}-quat") };
    real_model(&label, labels, mats, BracketTarget::Forms(forms), Layout::Quaternionic { k: n, m: 1 })
}

/// Sp(1)×Sp(n) on ℍⁿ, 𝔷 = Im ℍ = sp(1) via Im(u*v).
pub fn sp1_sp_quat(n: usize) -> Result<Model> {
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for u in 1..4 {
        labels.push(format!("sp1.{}", ["", "i", "j", "k"][u]));
        let r = right_mult_matrix(&quat(u)).neg();
        let blocks: Vec<&QMatrix> = std::iter::repeat_n(&r, n).collect();
        mats.push(QMatrix::block_diag(&blocks));
    }
    for (l, e) in sp_entries(n) {
        labels.push(format!("sp{n}.{l}"));
        mats.push(quat_left(n, 1, &e));
    }
    real_model(
        &format!("sp1-sp{n}-quat"),
        labels,
        mats,
        BracketTarget::Forms(im_quat_forms(n)),
        Layout::Quaternionic { k: n, m: 1 },
    )
}

/// Sp(k)×Sp(n) on ℍ^{k×n} with 𝔷 = sp(k): [u, v] = uv* − vu*.
pub fn spk_sp_quat(k: usize, n: usize) -> Result<Model> {
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for (l, e) in sp_entries(k) {
        labels.push(format!("sp{k}.{l}"));
        mats.push(quat_left(k, n, &e));
    }
    for (l, e) in sp_entries(n) {
        labels.push(format!("sp{n}.{l}"));
        mats.push(quat_right(k, n, &e));
    }
    let unit = |p: (usize, usize, usize)| (p.0, p.1, quat(p.2));
    let forms = sp_entries(k)
        .iter()
        .map(|(_, x)| {
            // Re tr(X*(uv* − vu*)) = Re(conj(X_ac)·(u_ab·conj(v_cb))) − (u ↔ v)
            quat_form(k, n, |pu, pv| {
                let (a, b, al) = unit(pu);
                let (c, d, be) = unit(pv);
                if b != d {
                    return Rational::zero();
                }
                let t1 = qmul(&entry(x, a, c).conj(), &qmul(&al, &be.conj())).re();
                let t2 = qmul(&entry(x, c, a).conj(), &qmul(&be, &al.conj())).re();
                t1 - t2
            })
        })
        .collect();
    real_model(
        &format!("sp{k}-sp{n}-quat"),
        labels,
        mats,
        BracketTarget::Forms(forms),
        Layout::Quaternionic { k, m: n },
    )
}

/// Build the compact model named by a construction id.
pub fn build_model(construction: &str, p: &Params) -> Result<Model> {
    use Factor::*;
    use Target::*;
    let c = |factors: Vec<Factor>, shape: Shape, u1: bool, targets: Vec<Target>| ComplexSpec { factors, shape, u1, targets };
    let n = || param(p, "n");
    let m = || param(p, "m");
    let l = || param(p, "l");
    let spec = match construction {
        "su" => c(vec![SU(n()?)], Shape::Std, false, vec![ImC]),
        "u" => c(vec![U(n()?)], Shape::Std, false, vec![ImC]),
        "sp" => c(vec![Sp(m()?)], Shape::Std, false, vec![ImC]),
        "u1-sp" => c(vec![Sp(m()?)], Shape::Std, true, vec![ImC]),
        "u1-so" => c(vec![SO(n()?)], Shape::Std, true, vec![ImC]),
        "u-s2" => c(vec![U(m()?)], Shape::S2, false, vec![ImC]),
        "su-l2" => c(vec![SU(m()?)], Shape::L2, false, vec![ImC]),
        "u-l2" => c(vec![U(m()?)], Shape::L2, false, vec![ImC]),
        "su-su" => c(vec![SU(l()?), SU(m()?)], Shape::Std, false, vec![ImC]),
        "u-su" => c(vec![U(l()?), SU(m()?)], Shape::Std, false, vec![ImC]),
        "u2-sp" => c(vec![U(2), Sp(m()?)], Shape::Std, false, vec![ImC]),
        "su3-sp" => c(vec![SU(3), Sp(m()?)], Shape::Std, false, vec![ImC]),
        "u3-sp" => c(vec![U(3), Sp(m()?)], Shape::Std, false, vec![ImC]),
        "u4-sp4" => c(vec![U(4), Sp(4)], Shape::Std, false, vec![ImC]),
        "su-sp4" => c(vec![SU(m()?), Sp(4)], Shape::Std, false, vec![ImC]),
        "u-sp4" => c(vec![U(m()?), Sp(4)], Shape::Std, false, vec![ImC]),
        "u1-spin7" => c(vec![Spin(7)], Shape::Std, true, vec![ImC]),
        "u1-spin9" => c(vec![Spin(9)], Shape::Std, true, vec![ImC]),
        "spin10" => c(vec![Spin(10)], Shape::Std, false, vec![ImC]),
        "u1-spin10" => c(vec![Spin(10)], Shape::Std, true, vec![ImC]),
        "u1-g2" => c(vec![G2], Shape::Std, true, vec![ImC]),
        "u1-su-l2c" => c(vec![SU(n()?)], Shape::Std, true, vec![LambdaC2, ImC]),
        "su-l2c" => c(vec![SU(n()?)], Shape::Std, false, vec![LambdaC2]),
        "u-un" => c(vec![U(n()?)], Shape::Std, false, vec![Unitary(n()?)]),
        "u1-spin7-oct" => c(vec![Spin7Oct], Shape::Std, true, vec![Oct7, ImC]),
        "u2-su-u2" => c(vec![U(2), SU(n()?)], Shape::Std, false, vec![Unitary(2)]),
        "u1-sp2-su" => c(vec![Sp(2), SU(n()?)], Shape::Std, true, vec![ImC]),
        "u2-sp-u2" => c(vec![U(2), Sp(n()?)], Shape::Std, false, vec![Unitary(2)]),
        "so-lambda2" => {
            let n = n()?;
            let (labels, mats) = so_real(n);
            return real_model(
                &format!("so{n}-lambda2"),
                labels,
                mats,
                BracketTarget::FullLambda2,
                Layout::Real { n },
            );
        }
        "spin7-oct" => {
            let mats = spin7_on_octonions()?;
            let labels = (0..mats.len()).map(|a| format!("spin7.s{a}")).collect();
            return real_model("spin7-oct", labels, mats, BracketTarget::Forms(octonion_forms()?), Layout::Real { n: 8 });
        }
        "g2-cross" => {
            let r = g2_derivations()?;
            let labels = (0..r.matrices.len()).map(|a| format!("g2.d{a}")).collect();
            return real_model(
                "g2-cross",
                labels,
                r.matrices,
                BracketTarget::Forms(cross_product_forms()),
                Layout::Real { n: 7 },
            );
        }
        "u1-sp-quat" => return u1_sp_quat(n()?, true),
        "sp1-sp-quat" => return sp1_sp_quat(n()?),
        "sp2-sp-quat" => return spk_sp_quat(2, n()?),
        "u1-e6" => return Err(Error::Unsupported("E6 representations are not constructed".into())),
        other => return Err(Error::Instantiation(format!("unknown construction {other}"))),
    };
    let tag: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
    complex_model(&format!("{construction}[{}]", tag.join(",")), &spec)
}

fn so_real(n: usize) -> (Vec<String>, Vec<QMatrix>) {
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            labels.push(format!("so{n}.A{i}{j}"));
            mats.push(skew_unit(n, i, j));
        }
    }
    (labels, mats)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, i64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn dimensions() {
        let cases: &[(&str, &[(&str, i64)], usize, usize, usize)] = &[
            ("su", &[("n", 2)], 3, 4, 1),
            ("sp", &[("m", 1)], 3, 4, 1),
            ("u-s2", &[("m", 2)], 4, 6, 1),
            ("u1-su-l2c", &[("n", 3)], 9, 6, 7),
            ("u-un", &[("n", 2)], 4, 4, 4),
            ("so-lambda2", &[("n", 3)], 3, 3, 3),
            ("u1-sp-quat", &[("n", 2)], 11, 8, 8),
            ("sp1-sp-quat", &[("n", 2)], 13, 8, 3),
            ("sp2-sp-quat", &[("n", 1)], 13, 8, 10),
            ("u2-su-u2", &[("n", 2)], 7, 8, 4),
            ("u1-g2", &[], 15, 14, 1),
        ];
        for (c, kv, hd, vd, zd) in cases {
            let m = build_model(c, &params(kv)).unwrap();
            assert_eq!((m.pair.h.dim(), m.pair.v_dim, m.pair.z_dim()), (*hd, *vd, *zd), "{c}");
        }
    }

    #[test]
    fn octonion_stabilizers() {
        assert_eq!(spin7_on_octonions().unwrap().len(), 21);
        let f = cross_product_forms();
        assert!(f.iter().all(QMatrix::is_antisymmetric));
        assert_eq!(form_stabilizer(&f, 7).unwrap().len(), 14);
    }

    #[test]
    fn e6_is_not_built() {
        assert!(matches!(build_model("u1-e6", &Params::new()), Err(Error::Unsupported(_))));
    }
}
