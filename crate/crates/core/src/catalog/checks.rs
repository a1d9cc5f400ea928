//! Extra structural checks attached to individual real-form records.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::algebra::{hsp_to_matrix, AlgebraElement, AlgebraKind};
use crate::exactalg::{q, symmetric_signature, QMatrix, Rational};
use crate::liecore::pair::forms_from_bracket;
use crate::liecore::{heisenberg_algebra, NilpotentPairData};

pub const KNOWN_CHECKS: &[&str] = &["split-quaternion"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub fn run_check(name: &str, dual: &NilpotentPairData) -> Result<CheckOutcome> {
    match name {
        "split-quaternion" => split_quaternion(dual),
        _ => Err(Error::Unsupported(format!("unknown check {name}"))),
    }
}

fn pf4(a: &QMatrix) -> Rational {
    a.get(0, 1) * a.get(2, 3) - a.get(0, 2) * a.get(1, 3) + a.get(0, 3) * a.get(1, 2)
}

/// ξ ↦ Pf(Σ ξ_k B_k) on 𝔷* for a 4-dimensional 𝔳. Its signature is, up to
/// swapping, an isomorphism invariant of the 2-step algebra.
pub fn pfaffian_signature(forms: &[QMatrix]) -> Result<(usize, usize)> {
    let m = forms.len();
    let mut g = QMatrix::zeros(m, m);
    let half = q(1) / q(2);
    for k in 0..m {
        g.set(k, k, pf4(&forms[k]));
        for l in k + 1..m {
            let s = pf4(&forms[k].add(&forms[l])) - pf4(&forms[k]) - pf4(&forms[l]);
            g.set(k, l, &s * &half);
            g.set(l, k, s * &half);
        }
    }
    let t = symmetric_signature(&g)?;
    Ok(if t.p >= t.q { (t.p, t.q) } else { (t.q, t.p) })
}

/// 𝔳 = ℍ_sp with bracket Im(u·v̄).
pub fn split_heisenberg_forms() -> Vec<QMatrix> {
    let e = |a| AlgebraElement::basis(AlgebraKind::Hsp, a);
    forms_from_bracket(4, 3, |a, b| e(a).mul(&e(b).conj()).expect("same algebra").coords[1..].to_vec())
}

/// ℍ_sp ≅ M₂(ℝ) with conjugation = adjugate and norm = det.
fn matrix_model_ok() -> Result<bool> {
    let e = |a| AlgebraElement::basis(AlgebraKind::Hsp, a);
    let adj = |m: &QMatrix| -> Result<QMatrix> {
        QMatrix::from_vec(2, 2, vec![m.get(1, 1).clone(), -m.get(0, 1), -m.get(1, 0), m.get(0, 0).clone()])
    };
    for a in 0..4 {
        let ma = hsp_to_matrix(&e(a))?;
        if e(a).norm() != ma.determinant()? {
            return Ok(false);
        }
        for b in 0..4 {
            let lhs = hsp_to_matrix(&e(a).mul(&e(b).conj())?)?;
            if lhs != ma.mul(&adj(&hsp_to_matrix(&e(b))?)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The dual nilpotent algebra is the split-quaternionic Heisenberg algebra
/// (and not the compact one). Only meaningful for dim 𝔳 = 4, dim 𝔷 = 3.
fn split_quaternion(dual: &NilpotentPairData) -> Result<CheckOutcome> {
    let name = "split-quaternion".to_string();
    if dual.v_dim != 4 || dual.bracket_forms.len() != 3 {
        return Ok(CheckOutcome {
            name,
            passed: false,
            detail: format!("needs dim v = 4, dim z = 3; got {}, {}", dual.v_dim, dual.bracket_forms.len()),
        });
    }
    let model = matrix_model_ok()?;
    let got = pfaffian_signature(&dual.bracket_forms)?;
    let split = pfaffian_signature(&split_heisenberg_forms())?;
    let compact = pfaffian_signature(&heisenberg_algebra(1, AlgebraKind::H)?.bracket_forms)?;
    let passed = model && got == split && got != compact;
    Ok(CheckOutcome {
        name,
        passed,
        detail: format!("2x2 model {model}; Pfaffian form {got:?}, split {split:?}, compact {compact:?}"),
    })
}
