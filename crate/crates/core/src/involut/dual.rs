//! Cartan duality 𝔤' = 𝔤^σ ⊕ i𝔤^{−σ} and rigidity of the radical.

use num_traits::Zero;

use super::extension::ExtensionWitness;
use super::involution::InvolutionData;
use crate::error::{Error, Result};
use crate::exactalg::{q, QMatrix, Rational};
use crate::liecore::algebra::{to_dense, to_sparse};
use crate::liecore::{LieAlgebra, NilpotentPairData};

#[derive(Clone, Debug)]
pub struct CartanDual {
    /// 𝔤' in the adapted basis (𝔥⁺, 𝔥⁻, 𝔷⁺, 𝔷⁻, 𝔳⁺, 𝔳⁻); minus vectors stand for i·w.
    pub algebra: LieAlgebra,
    /// Columns: adapted eigenbasis in coordinates of 𝔤 = (𝔥, 𝔷, 𝔳).
    pub basis: QMatrix,
    pub minus: Vec<bool>,
    pub pair: NilpotentPairData,
    /// Induced involution on 𝔤' (diagonal ±1 in the adapted basis).
    pub sigma: QMatrix,
}

fn eigenbasis(m: &QMatrix) -> Result<(Vec<Vec<Rational>>, Vec<Vec<Rational>>)> {
    let n = m.rows();
    let id = QMatrix::identity(n);
    let plus = m.sub(&id).kernel();
    let minus = m.add(&id).kernel();
    if plus.len() + minus.len() != n {
        return Err(Error::InvalidInvolution("map is not diagonalizable with eigenvalues +-1".into()));
    }
    Ok((plus, minus))
}

/// Read a pair back from 𝔤 = 𝔥 ⋉ (𝔷 ⊕ 𝔳) given in basis order (𝔥, 𝔷, 𝔳).
pub fn pair_from_full(label: String, g: &LieAlgebra, hd: usize, zd: usize, vd: usize) -> Result<NilpotentPairData> {
    if g.dim() != hd + zd + vd {
        return Err(Error::DimensionMismatch("split does not match algebra dimension".into()));
    }
    let mut h = LieAlgebra::with_labels(g.labels()[..hd].to_vec());
    for i in 0..hd {
        for j in i + 1..hd {
            let row = g.bracket_basis(i, j);
            if row.iter().any(|(c, _)| *c >= hd) {
                return Err(Error::InvalidStructure("h is not a subalgebra".into()));
            }
            h.set_bracket(i, j, row.clone());
        }
    }
    let block = |i: usize, off: usize, d: usize| -> QMatrix {
        let mut m = QMatrix::zeros(d, d);
        for a in 0..d {
            let col = to_dense(g.dim(), g.bracket_basis(i, off + a));
            for b in 0..d {
                m.set(b, a, col[off + b].clone());
            }
        }
        m
    };
    let rho_z = (0..hd).map(|i| block(i, hd, zd)).collect();
    let rho_v = (0..hd).map(|i| block(i, hd + zd, vd)).collect();
    let mut forms = vec![QMatrix::zeros(vd, vd); zd];
    for a in 0..vd {
        for b in 0..vd {
            if a == b {
                continue;
            }
            let col = to_dense(g.dim(), g.bracket_basis(hd + zd + a, hd + zd + b));
            for (k, f) in forms.iter_mut().enumerate() {
                f.set(a, b, col[hd + k].clone());
            }
        }
    }
    Ok(NilpotentPairData { label, v_dim: vd, h, rho_v, rho_z, bracket_forms: forms })
}

/// Structure constants of 𝔤' from an exact involution σ = θ ⊕ σ_z ⊕ σ_v.
pub fn cartan_dual(p: &NilpotentPairData, theta: &InvolutionData, w: &ExtensionWitness) -> Result<CartanDual> {
    let sv = w
        .sigma_v_exact()
        .ok_or_else(|| Error::Unsupported("cartan dual needs a rational sigma_v".into()))?;
    let sz = w.sigma_z.clone().ok_or_else(|| Error::Unsupported("cartan dual needs sigma_z".into()))?;
    cartan_dual_of(p, &theta.theta, &sz, &sv)
}

pub fn cartan_dual_of(p: &NilpotentPairData, theta: &QMatrix, sz: &QMatrix, sv: &QMatrix) -> Result<CartanDual> {
    let g = p.full_algebra();
    let (hd, zd, vd) = (p.h.dim(), p.z_dim(), p.v_dim());
    let sigma = QMatrix::block_diag(&[theta, sz, sv]);
    if !sigma.mul(&sigma).is_identity() || !g.is_automorphism(&sigma) {
        return Err(Error::InvalidInvolution("sigma is not an involutive automorphism of g".into()));
    }
    let d = g.dim();
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(d);
    let mut minus = Vec::with_capacity(d);
    let mut labels = Vec::with_capacity(d);
    for (off, blk, name) in [(0, theta, "h"), (hd, sz, "z"), (hd + zd, sv, "v")] {
        let (pl, mi) = eigenbasis(blk)?;
        let n = blk.rows();
        for (sign, vs) in [(false, pl), (true, mi)] {
            for (k, v) in vs.into_iter().enumerate() {
                let mut full = vec![Rational::zero(); d];
                full[off..off + n].clone_from_slice(&v);
                cols.push(full);
                minus.push(sign);
                labels.push(format!("{name}{}{k}", if sign { "-" } else { "+" }));
            }
        }
    }
    let basis = QMatrix::from_columns(d, &cols);
    let adapted = g.change_basis(&basis)?;
    let algebra = twist(&adapted, &minus, labels);
    let sigma_dual = QMatrix::diag(&minus.iter().map(|&m| if m { q(-1) } else { q(1) }).collect::<Vec<_>>());
    let pair = pair_from_full(format!("{}'", p.label), &algebra, hd, zd, vd)?;
    Ok(CartanDual { algebra, basis, minus, pair, sigma: sigma_dual })
}

/// [iw₁, iw₂] = −[w₁, w₂]; every other structure constant is unchanged.
fn twist(adapted: &LieAlgebra, minus: &[bool], labels: Vec<String>) -> LieAlgebra {
    let d = adapted.dim();
    let mut out = LieAlgebra::with_labels(labels);
    for a in 0..d {
        for b in a + 1..d {
            let row = adapted.bracket_basis(a, b);
            if row.is_empty() {
                continue;
            }
            let s = if minus[a] && minus[b] { q(-1) } else { q(1) };
            out.set_bracket(a, b, row.iter().map(|(k, x)| (*k, x * &s)).collect());
        }
    }
    out
}

/// Dual of the dual, brought back to the original basis.
pub fn double_dual(d: &CartanDual) -> Result<LieAlgebra> {
    let back = twist(&d.algebra, &d.minus, d.algebra.labels().to_vec());
    let pinv = d.basis.inverse().ok_or_else(|| Error::InvalidStructure("singular adapted basis".into()))?;
    back.change_basis(&pinv)
}

/// Isomorphism 𝔤'(σ₁) → 𝔤'(σ₂) when σ₂ agrees with σ₁ on 𝔥, 𝔷 and on each
/// 𝔳-block up to sign: (z, v) ↦ (−z, iv) on flipped blocks.
///
/// `blocks` lists (𝔳-coordinate ranges, 𝔷-coordinate ranges) per block.
pub fn check_radical_rigidity(
    p: &NilpotentPairData,
    theta: &QMatrix,
    s1: (&QMatrix, &QMatrix),
    s2: (&QMatrix, &QMatrix),
    blocks: &[(Vec<usize>, Vec<usize>)],
) -> Result<QMatrix> {
    let (hd, zd) = (p.h.dim(), p.z_dim());
    let d1 = cartan_dual_of(p, theta, s1.0, s1.1)?;
    let d2 = cartan_dual_of(p, theta, s2.0, s2.1)?;
    let d = d1.algebra.dim();
    // φ on 𝔤_ℂ: per coordinate multiply by ε ∈ {1, −1, i} (encoded as 0, 2, 1 powers of i)
    let mut power = vec![0u8; d];
    for (vs, zs) in blocks {
        let flip = {
            let a = s1.1.submatrix(vs, vs);
            let b = s2.1.submatrix(vs, vs);
            if a == b {
                false
            } else if a.neg() == b {
                true
            } else {
                return Err(Error::Hypothesis("sigma_v blocks differ by something other than a sign".into()));
            }
        };
        if flip {
            for &v in vs {
                power[hd + zd + v] = 1;
            }
            for &z in zs {
                power[hd + z] = 2;
            }
        }
    }
    // Dual basis vectors as complex vectors (re, im) in 𝔤 coordinates.
    let complex_cols = |dd: &CartanDual| -> Vec<(Vec<Rational>, Vec<Rational>)> {
        (0..d)
            .map(|a| {
                let c = dd.basis.col(a);
                let z = vec![Rational::zero(); d];
                if dd.minus[a] {
                    (z, c)
                } else {
                    (c, z)
                }
            })
            .collect()
    };
    let c1 = complex_cols(&d1);
    let c2 = complex_cols(&d2);
    // realified coordinates: [re; im], solve in the 𝔤'₂ basis
    let mut m2 = QMatrix::zeros(2 * d, d);
    for (a, (re, im)) in c2.iter().enumerate() {
        for i in 0..d {
            m2.set(i, a, re[i].clone());
            m2.set(d + i, a, im[i].clone());
        }
    }
    let mut phi = QMatrix::zeros(d, d);
    for (a, (re, im)) in c1.iter().enumerate() {
        let mut target = vec![Rational::zero(); 2 * d];
        for i in 0..d {
            let (r, s) = (re[i].clone(), im[i].clone());
            let (r2, s2v) = match power[i] {
                0 => (r, s),
                1 => (-s, r),
                _ => (-r, -s),
            };
            target[i] = r2;
            target[d + i] = s2v;
        }
        let x = crate::exactalg::linsolve::solve_vector(&m2, &target)
            .ok_or_else(|| Error::Hypothesis("phi does not map g'_1 into g'_2".into()))?;
        for (i, v) in x.into_iter().enumerate() {
            phi.set(i, a, v);
        }
    }
    // φ is an isomorphism iff pulling 𝔤'₂ back along φ gives 𝔤'₁
    let pulled = d2.algebra.change_basis(&phi)?;
    if !same_constants(&pulled, &d1.algebra) {
        return Err(Error::Hypothesis("phi does not intertwine the dual brackets".into()));
    }
    Ok(phi)
}

pub fn same_constants(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    let d = a.dim();
    if d != b.dim() {
        return false;
    }
    (0..d).all(|i| (i + 1..d).all(|j| to_sparse(&to_dense(d, a.bracket_basis(i, j))) == to_sparse(&to_dense(d, b.bracket_basis(i, j)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::algebra::AlgebraKind;
    use crate::exactalg::matrix::conjugation;
    use crate::involut::extension::extend_involution;
    use crate::liecore::algebra::lie_algebra_from_matrices;
    use crate::liecore::pair::{build_nilpotent_pair, heisenberg_algebra, BracketTarget};
    use crate::repcat::classical::{classical_rep, Family};
    use crate::repcat::RepData;

    fn heis_conj(n: usize) -> (NilpotentPairData, InvolutionData, ExtensionWitness) {
        let rep = classical_rep(Family::U, n).unwrap();
        let forms = heisenberg_algebra(n, AlgebraKind::C).unwrap().bracket_forms;
        let p = build_nilpotent_pair("u", rep.h.clone(), rep.matrices.clone(), BracketTarget::Forms(forms)).unwrap();
        let r = RepData::with_algebra("r", p.h.clone(), p.rho_v.clone()).unwrap();
        let th = InvolutionData::from_conjugation(&r, &conjugation(n)).unwrap();
        let w = extend_involution(&p, &th).unwrap();
        (p, th, w)
    }

    #[test]
    fn conjugation_dual_of_u2_is_gl2() {
        let (p, th, w) = heis_conj(2);
        let d = cartan_dual(&p, &th, &w).unwrap();
        // A01 ↦ E01 − E10, i·S01 ↦ −(E01 + E10), i·D_a ↦ −E_aa
        let m = |e: [i64; 4]| QMatrix::from_i64(&[&e[..2], &e[2..]]);
        let gl = [m([0, 1, -1, 0]), m([0, -1, -1, 0]), m([-1, 0, 0, 0]), m([0, 0, 0, -1])];
        let (glalg, _) = lie_algebra_from_matrices(vec!["a".into(), "b".into(), "c".into(), "d".into()], &gl).unwrap();
        assert_eq!(d.minus[..4], [false, true, true, true][..]);
        assert!(same_constants(&d.pair.h, &glalg));
        assert!(d.pair.check().is_ok());
        assert_eq!(d.pair.n_dim(), 5);
    }

    #[test]
    fn double_dual_is_identity() {
        for n in 1..=3 {
            let (p, th, w) = heis_conj(n);
            let d = cartan_dual(&p, &th, &w).unwrap();
            assert!(same_constants(&double_dual(&d).unwrap(), &p.full_algebra()));
        }
    }

    #[test]
    fn sign_flip_on_v_gives_isomorphic_dual() {
        let (p, th, w) = heis_conj(2);
        let sv = w.sigma_v_exact().unwrap();
        let sz = w.sigma_z.clone().unwrap();
        let blocks = vec![((0..4).collect(), vec![0])];
        let phi = check_radical_rigidity(&p, &th.theta, (&sz, &sv), (&sz, &sv.neg()), &blocks).unwrap();
        assert!(!phi.determinant().unwrap().is_zero());
    }
}
