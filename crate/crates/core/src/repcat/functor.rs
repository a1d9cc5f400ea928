//! Functorial constructions on representations.

use super::RepData;
use crate::error::{Error, Result};
use crate::exactalg::{CMatrix, GaussRational, QMatrix};

/// Real dimension cap for functor outputs.
pub const MAX_REAL_DIM: usize = 64;

#[derive(Clone, Debug)]
pub enum Functor {
    /// Outer tensor product with a representation of another algebra.
    Tensor(Box<RepData>),
    Lambda2,
    S2,
    Dual,
    /// Forget the complex structure, keeping the realified matrices.
    Realify,
}

fn pair_index(n: usize, sym: bool) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 0..n {
        for b in a..n {
            if sym || a < b {
                v.push((a, b));
            }
        }
    }
    v
}

/// Action of X on Λ² (sym = false) or S² (sym = true) in the basis
/// e_a∧e_b (a < b) or e_a·e_b (a ≤ b).
fn square_action(x: &CMatrix, sym: bool) -> CMatrix {
    let n = x.rows();
    let idx = pair_index(n, sym);
    let pos = |a: usize, b: usize| -> Option<(usize, bool)> {
        if a == b && !sym {
            return None;
        }
        let (lo, hi, flipped) = if a <= b { (a, b, false) } else { (b, a, true) };
        let p = idx.iter().position(|&e| e == (lo, hi)).expect("pair");
        Some((p, flipped && !sym))
    };
    let mut out = CMatrix::zeros(idx.len(), idx.len());
    for (col, &(a, b)) in idx.iter().enumerate() {
        for c in 0..n {
            for (src, other, first) in [(a, b, true), (b, a, false)] {
                let coef = x.get(c, src);
                if coef.is_zero() {
                    continue;
                }
                let (u, v) = if first { (c, other) } else { (other, c) };
                if let Some((row, neg)) = pos(u, v) {
                    let cur = out.get(row, col).clone();
                    let val = if neg { &cur - coef } else { &cur + coef };
                    out.set(row, col, val);
                }
            }
        }
    }
    out
}

/// Induced action of an invertible T on Λ² or S²: e_a∘e_b ↦ Te_a∘Te_b.
pub fn square_group(t: &CMatrix, sym: bool) -> CMatrix {
    let n = t.rows();
    let idx = pair_index(n, sym);
    let mut out = CMatrix::zeros(idx.len(), idx.len());
    for (col, &(a, b)) in idx.iter().enumerate() {
        for c in 0..n {
            for d in 0..n {
                if c == d && !sym {
                    continue;
                }
                let coef = t.get(c, a) * t.get(d, b);
                if coef.is_zero() {
                    continue;
                }
                let (lo, hi) = if c <= d { (c, d) } else { (d, c) };
                let row = idx.iter().position(|&e| e == (lo, hi)).expect("pair");
                let cur = out.get(row, col).clone();
                let val = if !sym && c > d { &cur - &coef } else { &cur + &coef };
                out.set(row, col, val);
            }
        }
    }
    out
}

/// Action of X on Λ² / S² (Lie algebra level).
pub fn square_rep(x: &CMatrix, sym: bool) -> CMatrix {
    square_action(x, sym)
}

fn to_real(ms: &[CMatrix], complex: bool) -> Vec<QMatrix> {
    if complex {
        ms.iter().map(CMatrix::realify).collect()
    } else {
        ms.iter().map(|m| m.real_part().expect("real input")).collect()
    }
}

pub fn functor_rep(base: &RepData, functor: Functor) -> Result<RepData> {
    let is_complex = base.complex.is_some();
    let cms: Vec<CMatrix> = match &base.complex {
        Some(c) => c.clone(),
        None => base.matrices.iter().map(CMatrix::from_real).collect(),
    };
    let check_size = |d: usize| {
        if d > MAX_REAL_DIM {
            Err(Error::SizeLimit(format!("functor output of real dimension {d} exceeds {MAX_REAL_DIM}")))
        } else {
            Ok(())
        }
    };
    let finish = |label: String, out: Vec<CMatrix>| -> Result<RepData> {
        let real = to_real(&out, is_complex);
        check_size(real.first().map(QMatrix::rows).unwrap_or(0))?;
        let mut r = RepData::with_algebra(label, base.h.clone(), real)?;
        if is_complex {
            r.complex = Some(out);
        }
        Ok(r)
    };
    match functor {
        Functor::Lambda2 => {
            let out = cms.iter().map(|m| square_action(m, false)).collect();
            finish(format!("Lambda2({})", base.label), out)
        }
        Functor::S2 => {
            let out = cms.iter().map(|m| square_action(m, true)).collect();
            finish(format!("S2({})", base.label), out)
        }
        Functor::Dual => {
            let neg = GaussRational::from_ints(-1, 0);
            let out = cms.iter().map(|m| m.transpose().scale(&neg)).collect();
            finish(format!("dual({})", base.label), out)
        }
        Functor::Realify => {
            if !is_complex {
                return Err(Error::Unsupported("realify needs a complex representation".into()));
            }
            let mut r = base.clone();
            r.complex = None;
            r.label = format!("realify({})", base.label);
            Ok(r)
        }
        Functor::Tensor(other) => {
            let both_complex = is_complex && other.complex.is_some();
            let h = base.h.direct_sum(&other.h);
            let label = format!("{} (x) {}", base.label, other.label);
            if both_complex {
                let oc = other.complex.clone().expect("complex");
                let (n1, n2) = (cms[0].rows(), oc[0].rows());
                let mut out: Vec<CMatrix> = cms.iter().map(|m| m.kron(&CMatrix::identity(n2))).collect();
                out.extend(oc.iter().map(|m| CMatrix::identity(n1).kron(m)));
                let real: Vec<QMatrix> = out.iter().map(CMatrix::realify).collect();
                check_size(real[0].rows())?;
                let mut r = RepData::with_algebra(label, h, real)?;
                r.complex = Some(out);
                Ok(r)
            } else {
                let (n1, n2) = (base.space_dim(), other.space_dim());
                check_size(n1 * n2)?;
                let mut out: Vec<QMatrix> = base.matrices.iter().map(|m| m.kron(&QMatrix::identity(n2))).collect();
                out.extend(other.matrices.iter().map(|m| QMatrix::identity(n1).kron(m)));
                RepData::with_algebra(label, h, out)
            }
        }
    }
}
