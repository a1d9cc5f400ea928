//! Invariant-form spaces, signature sets and signature classes.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::forms::{invariant_bilinear_forms, FormKind};
use crate::error::{Error, Result};
use crate::exactalg::{q, symmetric_signature, QMatrix};
use crate::liecore::factors::{restrict, split_rep};
use crate::liecore::NilpotentPairData;
use crate::repcat::RepData;

/// Beyond this many parameters the pencil is only sampled along axes and pairs.
const PENCIL_CAP: usize = 3;

#[derive(Clone, Debug)]
pub struct InvariantFormSpace {
    pub basis: Vec<QMatrix>,
    pub representative: Option<QMatrix>,
    /// (p, q) of the representative
    pub signature: Option<(usize, usize)>,
    /// every (p, q) met by a nondegenerate element of the sampled pencil
    pub signatures: BTreeSet<(usize, usize)>,
    pub exhaustive: bool,
}

impl InvariantFormSpace {
    pub fn has_nondegenerate(&self) -> bool {
        self.representative.is_some()
    }
}

fn coefficient_grid(m: usize) -> (Vec<Vec<i64>>, bool) {
    if m == 0 {
        return (vec![], true);
    }
    if m <= PENCIL_CAP {
        let vals = [-2i64, -1, 0, 1, 2];
        let mut out = Vec::new();
        for code in 0..vals.len().pow(m as u32) {
            let mut k = code;
            let c: Vec<i64> = (0..m)
                .map(|_| {
                    let v = vals[k % vals.len()];
                    k /= vals.len();
                    v
                })
                .collect();
            if c.iter().any(|&x| x != 0) {
                out.push(c);
            }
        }
        return (out, true);
    }
    let mut out = Vec::new();
    for i in 0..m {
        for s in [1, -1] {
            let mut c = vec![0; m];
            c[i] = s;
            out.push(c);
        }
        for j in i + 1..m {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut c = vec![0; m];
                c[i] = s;
                c[j] = t;
                out.push(c);
            }
        }
    }
    (out, false)
}

/// Signature analysis of the pencil spanned by `basis` (n×n symmetric).
pub fn form_space(basis: Vec<QMatrix>, n: usize) -> InvariantFormSpace {
    let (grid, exhaustive) = coefficient_grid(basis.len());
    let mut signatures = BTreeSet::new();
    let mut representative: Option<(QMatrix, (usize, usize))> = None;
    for c in grid {
        let mut b = QMatrix::zeros(n, n);
        for (x, m) in c.iter().zip(&basis) {
            if *x != 0 {
                b.add_scaled(&q(*x), m);
            }
        }
        let Ok(s) = symmetric_signature(&b) else { continue };
        if s.r != 0 {
            continue;
        }
        signatures.insert(s.pq());
        // prefer the element with the most positive directions
        if representative.as_ref().is_none_or(|(_, (p, _))| s.p > *p) {
            representative = Some((b, s.pq()));
        }
    }
    if n == 0 {
        signatures.insert((0, 0));
        representative = Some((QMatrix::zeros(0, 0), (0, 0)));
    }
    let (representative, signature) = match representative {
        Some((b, s)) => (Some(b), Some(s)),
        None => (None, None),
    };
    InvariantFormSpace { basis, representative, signature, signatures, exhaustive }
}

/// Symmetric B with ρ(X)ᵀB + Bρ(X) = 0 on the generators.
pub fn invariant_forms(rep: &RepData) -> InvariantFormSpace {
    let n = rep.space_dim();
    let gens = rep.generator_matrices();
    if gens.iter().all(QMatrix::is_zero) {
        return trivial_space(n);
    }
    form_space(invariant_bilinear_forms(&gens, n, FormKind::Symmetric), n)
}

/// A trivial module is one summand carrying a definite form.
fn trivial_space(n: usize) -> InvariantFormSpace {
    let id = QMatrix::identity(n);
    let mut signatures = BTreeSet::new();
    signatures.insert((n, 0));
    signatures.insert((0, n));
    InvariantFormSpace { basis: vec![id.clone()], representative: Some(id), signature: Some((n, 0)), signatures, exhaustive: true }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignatureLabel {
    Riemannian,
    Lorentz,
    TransLorentz,
    Split,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignatureClass {
    pub p: usize,
    pub q: usize,
    pub label: SignatureLabel,
    /// whether (p, q) was swapped to get p ≥ q
    pub normalized: bool,
}

impl SignatureClass {
    pub fn new(p: usize, q: usize) -> Self {
        let (a, b, normalized) = if p >= q { (p, q, false) } else { (q, p, true) };
        let label = match b {
            0 => SignatureLabel::Riemannian,
            1 => SignatureLabel::Lorentz,
            2 => SignatureLabel::TransLorentz,
            _ if a == b => SignatureLabel::Split,
            _ => SignatureLabel::Other,
        };
        Self { p: a, q: b, label, normalized }
    }

    pub fn pq(&self) -> (usize, usize) {
        (self.p, self.q)
    }
}

impl fmt::Display for SignatureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Signature of the tensor product of two forms. Antisymmetric factors are
/// given by their dimension in the first slot.
pub fn tensor_signature(a: (usize, usize), ka: FormKind, b: (usize, usize), kb: FormKind) -> Result<(usize, usize)> {
    match (ka, kb) {
        (FormKind::Symmetric, FormKind::Symmetric) => {
            let ((k, l), (r, s)) = (a, b);
            Ok((k * r + l * s, k * s + l * r))
        }
        (FormKind::Antisymmetric, FormKind::Antisymmetric) => {
            let d = (a.0 + a.1) * (b.0 + b.1);
            if !(a.0 + a.1).is_multiple_of(2) || !(b.0 + b.1).is_multiple_of(2) {
                return Err(Error::DimensionMismatch("antisymmetric nondegenerate forms need even dimension".into()));
            }
            Ok((d / 2, d / 2))
        }
        _ => Err(Error::Unsupported("symmetric x antisymmetric is antisymmetric; no metric".into())),
    }
}

#[derive(Clone, Debug)]
pub struct TotalSignature {
    pub v: BTreeSet<(usize, usize)>,
    pub z_summands: Vec<BTreeSet<(usize, usize)>>,
    pub z_summand_dims: Vec<usize>,
    /// raw (p, q) over all choices
    pub achievable: BTreeSet<(usize, usize)>,
    pub classes: BTreeSet<SignatureClass>,
    pub exhaustive: bool,
}

impl TotalSignature {
    /// Normalized membership test.
    pub fn contains(&self, p: usize, q: usize) -> bool {
        let c = SignatureClass::new(p, q);
        self.classes.iter().any(|x| x.pq() == c.pq())
    }

    pub fn normalized(&self) -> BTreeSet<(usize, usize)> {
        self.classes.iter().map(SignatureClass::pq).collect()
    }
}

fn sum_sets(a: &BTreeSet<(usize, usize)>, b: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    a.iter().flat_map(|x| b.iter().map(move |y| (x.0 + y.0, x.1 + y.1))).collect()
}

fn rep_space(rho: &[QMatrix], n: usize) -> InvariantFormSpace {
    if rho.iter().all(QMatrix::is_zero) {
        return trivial_space(n);
    }
    form_space(invariant_bilinear_forms(rho, n, FormKind::Symmetric), n)
}

/// 𝔷 split into irreducible summands, the trivial part kept as one summand.
pub fn z_summands(p: &NilpotentPairData) -> Vec<QMatrix> {
    let zd = p.z_dim();
    if zd == 0 {
        return vec![];
    }
    let parts = split_rep(&p.rho_z, zd);
    let mut trivial: Vec<Vec<crate::exactalg::Rational>> = Vec::new();
    let mut out = Vec::new();
    for (w, _) in parts {
        let r = restrict(&p.rho_z, &w);
        if r.iter().all(QMatrix::is_zero) {
            trivial.extend((0..w.cols()).map(|j| w.col(j)));
        } else {
            out.push(w);
        }
    }
    if !trivial.is_empty() {
        out.push(QMatrix::from_columns(zd, &trivial));
    }
    out
}

/// All (p, q) obtained from invariant forms on 𝔳 and on each 𝔷-summand,
/// including every sign flip.
pub fn total_signature(p: &NilpotentPairData) -> Result<TotalSignature> {
    total_signature_with(p, &z_summands(p))
}

pub fn total_signature_with(p: &NilpotentPairData, summands: &[QMatrix]) -> Result<TotalSignature> {
    let vs = rep_space(&p.rho_v, p.v_dim());
    if !vs.has_nondegenerate() {
        return Err(Error::NoInvariantForm(format!("{}: no nondegenerate invariant form on v", p.label)));
    }
    let mut exhaustive = vs.exhaustive;
    let mut z_sets = Vec::new();
    let mut dims = Vec::new();
    for (k, w) in summands.iter().enumerate() {
        let r = restrict(&p.rho_z, w);
        let s = rep_space(&r, w.cols());
        if !s.has_nondegenerate() {
            return Err(Error::NoInvariantForm(format!("{}: no nondegenerate invariant form on z-summand {k}", p.label)));
        }
        exhaustive &= s.exhaustive;
        dims.push(w.cols());
        z_sets.push(s.signatures);
    }
    let mut achievable = vs.signatures.clone();
    for s in &z_sets {
        achievable = sum_sets(&achievable, s);
    }
    let classes = achievable.iter().map(|&(a, b)| SignatureClass::new(a, b)).collect();
    Ok(TotalSignature { v: vs.signatures, z_summands: z_sets, z_summand_dims: dims, achievable, classes, exhaustive })
}
