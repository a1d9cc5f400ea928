//! Clifford algebras Cl(k, ℓ), spin representations and the type of the
//! real spinor module.

use serde::{Deserialize, Serialize};

use super::RepData;
use crate::error::{Error, Result};
use crate::exactalg::{q, qf, symmetric_signature, CMatrix, GaussRational, QMatrix, SignatureTriple};
use crate::involut::commutant::{commutant, DivisionType};
use crate::liecore::factors::{restrict, split_rep};
use crate::sigengine::forms::{invariant_bilinear_forms, FormKind};

/// Where the real spinor module lands, read off from its commutant and
/// its invariant bilinear forms. Dimensions are real dimensions of the module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SpinModuleType {
    /// ℝ-type with symmetric form: SO(p, q).
    Orthogonal { p: usize, q: usize },
    /// ℝ-type with antisymmetric form: Sp(d/2; ℝ).
    RealSymplectic { dim: usize },
    /// ℝ-type, no form: SL(d; ℝ).
    RealLinear { dim: usize },
    /// ℂ-type with hermitian form: SU(a, b) on ℂ^{a+b}.
    Unitary { a: usize, b: usize },
    /// ℂ-type with complex bilinear form or none.
    ComplexOther { dim: usize, sym: usize, antisym: usize },
    /// ℍ-type with a 3-dim space of symmetric forms: SO*(2m) on ℍ^m.
    QuaternionicSkew { m: usize, p: usize, q: usize },
    /// ℍ-type with one symmetric form: Sp(a, b) on ℍ^{a+b}.
    QuaternionicUnitary { a: usize, b: usize },
    /// ℍ-type, no form: SL(m; ℍ).
    QuaternionicLinear { m: usize },
    Reducible,
}

impl SpinModuleType {
    pub fn group_label(&self) -> String {
        match self {
            SpinModuleType::Orthogonal { p, q } => format!("SO({p},{q})"),
            SpinModuleType::RealSymplectic { dim } => format!("Sp({};R)", dim / 2),
            SpinModuleType::RealLinear { dim } => format!("SL({dim};R)"),
            SpinModuleType::Unitary { a, b } => format!("SU({a},{b})"),
            SpinModuleType::ComplexOther { dim, .. } => format!("GL({};C)-type", dim / 2),
            SpinModuleType::QuaternionicSkew { m, .. } => format!("SO*({})", 2 * m),
            SpinModuleType::QuaternionicUnitary { a, b } => format!("Sp({a},{b})"),
            SpinModuleType::QuaternionicLinear { m } => format!("SL({m};H)"),
            SpinModuleType::Reducible => "reducible".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CliffordData {
    pub k: usize,
    pub l: usize,
    /// e_1..e_{k+ℓ} with e_i² = +1 (i ≤ k) and −1 otherwise.
    pub gammas: Vec<CMatrix>,
    /// Complex dimension of the spin module used below.
    pub spinor_complex_dim: usize,
    /// Real irreducible spinor module of spin(k, ℓ).
    pub spin_rep: RepData,
    pub division: DivisionType,
    pub sym_forms: Vec<QMatrix>,
    pub antisym_forms: Vec<QMatrix>,
    /// Signature of the first symmetric invariant form, if any.
    pub form_signature: Option<SignatureTriple>,
    pub module_type: SpinModuleType,
}

fn pauli() -> [CMatrix; 3] {
    [
        CMatrix::from_pairs(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
        CMatrix::from_pairs(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        CMatrix::from_pairs(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
    ]
}

/// Hermitian gammas γ_1..γ_n with γ_i γ_j + γ_j γ_i = 2δ_ij, size 2^{⌊n/2⌋}.
pub fn euclidean_gammas(n: usize) -> Vec<CMatrix> {
    let [s1, s2, s3] = pauli();
    let m = n / 2;
    let id2 = CMatrix::identity(2);
    let tensor = |parts: Vec<&CMatrix>| -> CMatrix {
        parts.into_iter().fold(CMatrix::identity(1), |acc, p| acc.kron(p))
    };
    let mut out = Vec::with_capacity(n);
    for j in 0..m {
        for s in [&s1, &s2] {
            let mut parts: Vec<&CMatrix> = Vec::with_capacity(m);
            for t in 0..m {
                parts.push(if t < j {
                    &s3
                } else if t == j {
                    s
                } else {
                    &id2
                });
            }
            out.push(tensor(parts));
        }
    }
    if n % 2 == 1 {
        out.push(tensor(vec![&s3; m]));
    }
    out
}

/// Gammas with signature η = diag(+1ᵏ, −1^ℓ).
pub fn signed_gammas(k: usize, l: usize) -> Vec<CMatrix> {
    let i = GaussRational::i();
    euclidean_gammas(k + l)
        .into_iter()
        .enumerate()
        .map(|(a, g)| if a < k { g } else { g.scale(&i) })
        .collect()
}

/// Complex spin representation of spin(k, ℓ) of dimension 2^{⌊(k+ℓ−1)/2⌋}
/// built from the even Clifford algebra: with e_N the last generator,
/// f_i = e_i e_N (i < N) generate a Clifford algebra on N − 1 generators and
/// {f_i f_j / 2, f_i / 2} span spin(k, ℓ).
pub fn spin_generators(k: usize, l: usize) -> Vec<CMatrix> {
    let n = k + l;
    assert!(n >= 2);
    let en_sq: i64 = if l >= 1 { -1 } else { 1 };
    // f_i² = −e_i²·e_N²
    let signs: Vec<i64> = (0..n - 1).map(|a| -(if a < k { 1 } else { -1 }) * en_sq).collect();
    let i = GaussRational::i();
    let f: Vec<CMatrix> = euclidean_gammas(n - 1)
        .into_iter()
        .zip(&signs)
        .map(|(g, s)| if *s > 0 { g } else { g.scale(&i) })
        .collect();
    let half = GaussRational::real(qf(1, 2));
    let mut gens = Vec::new();
    for a in 0..n - 1 {
        for b in a + 1..n - 1 {
            gens.push(f[a].mul(&f[b]).scale(&half));
        }
    }
    for fa in &f {
        gens.push(fa.scale(&half));
    }
    gens
}

/// Real spin representation of spin(k, ℓ), realified (not yet split).
pub fn spin_rep_realified(k: usize, l: usize) -> Result<RepData> {
    let gens = spin_generators(k, l);
    let labels = (0..gens.len()).map(|a| format!("s{a}")).collect();
    RepData::from_complex(format!("spin({k},{l}) spinors realified"), labels, gens)
}

pub fn clifford_spin(k: usize, l: usize) -> Result<CliffordData> {
    let n = k + l;
    if n > 10 {
        return Err(Error::SizeLimit(format!("Cl({k},{l}): k+l must be <= 10")));
    }
    if n < 2 {
        return Err(Error::Unsupported(format!("Cl({k},{l}): need k+l >= 2")));
    }
    let gammas = signed_gammas(k, l);
    let full = spin_rep_realified(k, l)?;
    let spinor_complex_dim = full.space_dim() / 2;
    let blocks = split_rep(&full.generator_matrices(), full.space_dim());
    let (w, _) = &blocks[0];
    let mats = restrict(&full.matrices, w);
    let spin_rep = RepData::with_algebra(format!("spin({k},{l}) real spinor module"), full.h.clone(), mats)?;
    let d = spin_rep.space_dim();
    let gens = spin_rep.generator_matrices();
    let division = commutant(&gens, d).division;
    let sym_forms = invariant_bilinear_forms(&gens, d, FormKind::Symmetric);
    let antisym_forms = invariant_bilinear_forms(&gens, d, FormKind::Antisymmetric);
    let form_signature = sym_forms.first().map(|b| symmetric_signature(b).expect("symmetric"));
    let sig = form_signature.filter(|s| s.r == 0);
    let module_type = match (division, sym_forms.len(), antisym_forms.len(), sig) {
        (DivisionType::R, 1, _, Some(s)) => SpinModuleType::Orthogonal { p: s.p, q: s.q },
        (DivisionType::R, 0, 1, _) => SpinModuleType::RealSymplectic { dim: d },
        (DivisionType::R, 0, 0, _) => SpinModuleType::RealLinear { dim: d },
        (DivisionType::C, 1, 1, Some(s)) => SpinModuleType::Unitary { a: s.p / 2, b: s.q / 2 },
        (DivisionType::C, sy, an, _) => SpinModuleType::ComplexOther { dim: d, sym: sy, antisym: an },
        (DivisionType::H, 3, _, Some(s)) => SpinModuleType::QuaternionicSkew { m: d / 4, p: s.p, q: s.q },
        (DivisionType::H, 1, _, Some(s)) => SpinModuleType::QuaternionicUnitary { a: s.p / 4, b: s.q / 4 },
        (DivisionType::H, 0, _, _) => SpinModuleType::QuaternionicLinear { m: d / 4 },
        _ => SpinModuleType::Reducible,
    };
    Ok(CliffordData {
        k,
        l,
        gammas,
        spinor_complex_dim,
        spin_rep,
        division,
        sym_forms,
        antisym_forms,
        form_signature,
        module_type,
    })
}

/// e_i e_j + e_j e_i = 2 η_ij on all pairs.
pub fn check_clifford_relations(c: &CliffordData) -> bool {
    let n = c.gammas.len();
    let size = c.gammas.first().map(CMatrix::rows).unwrap_or(0);
    for i in 0..n {
        for j in i..n {
            let ac = c.gammas[i].mul(&c.gammas[j]).add(&c.gammas[j].mul(&c.gammas[i]));
            let expect = if i != j {
                CMatrix::zeros(size, size)
            } else {
                let eta = if i < c.k { q(2) } else { q(-2) };
                CMatrix::identity(size).scale(&GaussRational::real(eta))
            };
            if ac != expect {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_dimensional() {
        let c = clifford_spin(3, 0).unwrap();
        assert!(check_clifford_relations(&c));
        assert_eq!(c.spinor_complex_dim, 2);
        assert_eq!(c.spin_rep.h.dim(), 3);
        assert_eq!(c.division, DivisionType::H);
        assert!(clifford_spin(6, 5).is_err());
    }

    #[test]
    fn spin_4_3_is_split_orthogonal() {
        let c = clifford_spin(4, 3).unwrap();
        assert!(check_clifford_relations(&c));
        assert_eq!(c.module_type, SpinModuleType::Orthogonal { p: 4, q: 4 });
        let c = clifford_spin(7, 0).unwrap();
        assert_eq!(c.module_type, SpinModuleType::Orthogonal { p: 8, q: 0 });
    }
}

