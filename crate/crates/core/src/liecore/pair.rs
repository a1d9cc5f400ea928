//! 2-step nilpotent algebras 𝔫 = 𝔷 ⊕ 𝔳 together with an 𝔥-action.
//!
//! The bracket 𝔳 × 𝔳 → 𝔷 is stored as one antisymmetric form per basis
//! vector of 𝔷: [u, v]_k = uᵀ B_k v. 𝔷 therefore carries its own basis and
//! the forms are the (dual) projection from Λ²𝔳.

use num_traits::Zero;

use super::algebra::{check_lie_algebra, to_sparse, LieAlgebra, LieCheck, MatrixSpan};
use crate::error::{Error, Result};
use crate::exactalg::algebra::{AlgebraElement, AlgebraKind};
use crate::exactalg::{q, QMatrix, Rational};

#[derive(Clone, Debug)]
pub struct NilpotentPairData {
    pub label: String,
    pub v_dim: usize,
    pub h: LieAlgebra,
    /// ρ_v(e_i) for every basis vector of 𝔥.
    pub rho_v: Vec<QMatrix>,
    /// Induced action on 𝔷.
    pub rho_z: Vec<QMatrix>,
    pub bracket_forms: Vec<QMatrix>,
}

/// First failing structural check of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairCheck {
    Ok,
    FormNotAntisymmetric(usize),
    NotHomomorphism { i: usize, j: usize },
    NotEquivariant { generator: usize },
    Nilradical(LieCheck),
    NotTwoStep,
}

impl PairCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, PairCheck::Ok)
    }
}

/// Linear functionals on Λ²𝔳 picked out by a bracket target.
#[derive(Clone, Debug)]
pub enum BracketTarget {
    /// Explicit antisymmetric forms, one per 𝔷 basis vector.
    Forms(Vec<QMatrix>),
    /// All of Λ²𝔳.
    FullLambda2,
}

impl NilpotentPairData {
    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn z_dim(&self) -> usize {
        self.bracket_forms.len()
    }

    pub fn n_dim(&self) -> usize {
        self.v_dim() + self.z_dim()
    }

    /// [u, v] ∈ 𝔷.
    pub fn bracket_v(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        self.bracket_forms.iter().map(|b| b.bilinear(u, v)).collect()
    }

    /// 𝔫 as a Lie algebra with basis (𝔷, 𝔳).
    pub fn nilradical(&self) -> LieAlgebra {
        let (zd, vd) = (self.z_dim(), self.v_dim());
        let labels = (0..zd).map(|k| format!("z{k}")).chain((0..vd).map(|a| format!("v{a}"))).collect();
        let mut l = LieAlgebra::with_labels(labels);
        for a in 0..vd {
            for b in a + 1..vd {
                let row: Vec<(usize, Rational)> = self
                    .bracket_forms
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| !f.get(a, b).is_zero())
                    .map(|(k, f)| (k, f.get(a, b).clone()))
                    .collect();
                if !row.is_empty() {
                    l.set_bracket(zd + a, zd + b, row);
                }
            }
        }
        l
    }

    /// 𝔤 = 𝔥 ⋉ 𝔫 with basis (𝔥, 𝔷, 𝔳).
    pub fn full_algebra(&self) -> LieAlgebra {
        let hd = self.h.dim();
        let (zd, vd) = (self.z_dim(), self.v_dim());
        let labels = self
            .h
            .labels()
            .iter()
            .cloned()
            .chain((0..zd).map(|k| format!("z{k}")))
            .chain((0..vd).map(|a| format!("v{a}")))
            .collect();
        let mut g = LieAlgebra::with_labels(labels);
        for i in 0..hd {
            for j in i + 1..hd {
                g.set_bracket(i, j, self.h.bracket_basis(i, j).clone());
            }
            for k in 0..zd {
                let col = self.rho_z[i].col(k);
                g.set_bracket(i, hd + k, to_sparse(&col).into_iter().map(|(c, x)| (hd + c, x)).collect());
            }
            for a in 0..vd {
                let col = self.rho_v[i].col(a);
                g.set_bracket(i, hd + zd + a, to_sparse(&col).into_iter().map(|(c, x)| (hd + zd + c, x)).collect());
            }
        }
        let n = self.nilradical();
        for a in 0..zd + vd {
            for b in a + 1..zd + vd {
                let br = n.bracket_basis(a, b);
                if !br.is_empty() {
                    g.set_bracket(hd + a, hd + b, br.iter().map(|(c, x)| (hd + c, x.clone())).collect());
                }
            }
        }
        g
    }

    pub fn check(&self) -> PairCheck {
        for (k, b) in self.bracket_forms.iter().enumerate() {
            if !b.is_antisymmetric() {
                return PairCheck::FormNotAntisymmetric(k);
            }
        }
        let hd = self.h.dim();
        for i in 0..hd {
            for j in i + 1..hd {
                let br = self.h.bracket_basis(i, j);
                let lhs = self.rho_v[i].commutator(&self.rho_v[j]);
                let mut rhs = QMatrix::zeros(lhs.rows(), lhs.cols());
                let mut rhs_z = QMatrix::zeros(self.z_dim(), self.z_dim());
                for (k, c) in br {
                    rhs.add_scaled(c, &self.rho_v[*k]);
                    rhs_z.add_scaled(c, &self.rho_z[*k]);
                }
                if lhs != rhs || self.rho_z[i].commutator(&self.rho_z[j]) != rhs_z {
                    return PairCheck::NotHomomorphism { i, j };
                }
            }
        }
        for (g, (rv, rz)) in self.rho_v.iter().zip(&self.rho_z).enumerate() {
            if !equivariant(&self.bracket_forms, rv, rz) {
                return PairCheck::NotEquivariant { generator: g };
            }
        }
        let n = self.nilradical();
        let c = check_lie_algebra(&n);
        if !c.is_ok() {
            return PairCheck::Nilradical(c);
        }
        if self.z_dim() > 0 && !n.is_two_step_nilpotent() && !n.is_abelian() {
            return PairCheck::NotTwoStep;
        }
        PairCheck::Ok
    }

    /// Dimension of the center of 𝔫.
    pub fn center_dim(&self) -> usize {
        self.nilradical().center().len()
    }

    /// Direct sum of two pairs sharing the same 𝔥 (ρ's are block-diagonal).
    pub fn block_sum(&self, o: &NilpotentPairData) -> Result<NilpotentPairData> {
        if self.h != o.h {
            return Err(Error::InvalidStructure("block_sum needs the same acting algebra".into()));
        }
        let (v1, v2) = (self.v_dim(), o.v_dim());
        let pad = |b: &QMatrix, first: bool| {
            let z1 = QMatrix::zeros(v1, v1);
            let z2 = QMatrix::zeros(v2, v2);
            if first {
                QMatrix::block_diag(&[b, &z2])
            } else {
                QMatrix::block_diag(&[&z1, b])
            }
        };
        let forms = self
            .bracket_forms
            .iter()
            .map(|b| pad(b, true))
            .chain(o.bracket_forms.iter().map(|b| pad(b, false)))
            .collect();
        let rho_v = self.rho_v.iter().zip(&o.rho_v).map(|(a, b)| QMatrix::block_diag(&[a, b])).collect();
        let rho_z = self.rho_z.iter().zip(&o.rho_z).map(|(a, b)| QMatrix::block_diag(&[a, b])).collect();
        Ok(NilpotentPairData {
            label: format!("{} + {}", self.label, o.label),
            v_dim: v1 + v2,
            h: self.h.clone(),
            rho_v,
            rho_z,
            bracket_forms: forms,
        })
    }
}

fn equivariant(forms: &[QMatrix], rv: &QMatrix, rz: &QMatrix) -> bool {
    let rvt = rv.transpose();
    for (k, b) in forms.iter().enumerate() {
        let lhs = rvt.mul(b).add(&b.mul(rv));
        let mut rhs = QMatrix::zeros(b.rows(), b.cols());
        for (l, bl) in forms.iter().enumerate() {
            rhs.add_scaled(rz.get(k, l), bl);
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Antisymmetric forms from a bilinear bracket given on basis pairs.
pub fn forms_from_bracket<F>(v_dim: usize, z_dim: usize, f: F) -> Vec<QMatrix>
where
    F: Fn(usize, usize) -> Vec<Rational>,
{
    let mut forms = vec![QMatrix::zeros(v_dim, v_dim); z_dim];
    for a in 0..v_dim {
        for b in a + 1..v_dim {
            let z = f(a, b);
            for (k, c) in z.iter().enumerate() {
                if !c.is_zero() {
                    forms[k].set(a, b, c.clone());
                    forms[k].set(b, a, -c.clone());
                }
            }
        }
    }
    forms
}

/// Basis forms E_ab − E_ba, a < b, of Λ².
pub fn lambda2_forms(v_dim: usize) -> Vec<QMatrix> {
    let mut out = Vec::new();
    for a in 0..v_dim {
        for b in a + 1..v_dim {
            let mut m = QMatrix::zeros(v_dim, v_dim);
            m.set(a, b, q(1));
            m.set(b, a, q(-1));
            out.push(m);
        }
    }
    out
}

/// Assemble a pair from an 𝔥-representation on 𝔳 and a bracket target; the
/// 𝔷-action is solved for, and failure to solve means the target is not an
/// equivariant quotient of Λ²𝔳.
pub fn build_nilpotent_pair(
    label: impl Into<String>,
    h: LieAlgebra,
    rho_v: Vec<QMatrix>,
    target: BracketTarget,
) -> Result<NilpotentPairData> {
    let label = label.into();
    if rho_v.len() != h.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} matrices for an algebra of dim {}",
            rho_v.len(),
            h.dim()
        )));
    }
    let v_dim = rho_v.first().map(QMatrix::rows).unwrap_or(0);
    let forms = match target {
        BracketTarget::Forms(f) => f,
        BracketTarget::FullLambda2 => lambda2_forms(v_dim),
    };
    for (k, b) in forms.iter().enumerate() {
        if b.rows() != v_dim || !b.is_antisymmetric() {
            return Err(Error::InvalidStructure(format!("bracket form {k} is not an antisymmetric form on v")));
        }
    }
    let span = MatrixSpan::new(forms.clone())?;
    let zd = forms.len();
    let mut rho_z = Vec::with_capacity(rho_v.len());
    for (g, rv) in rho_v.iter().enumerate() {
        let rvt = rv.transpose();
        let mut rz = QMatrix::zeros(zd, zd);
        for (k, b) in forms.iter().enumerate() {
            let img = rvt.mul(b).add(&b.mul(rv));
            let c = span
                .coords(&img)
                .ok_or_else(|| Error::NotEquivariant(format!("{label}: generator {g} moves form {k} out of the target")))?;
            for (l, x) in c.into_iter().enumerate() {
                rz.set(k, l, x);
            }
        }
        rho_z.push(rz);
    }
    let p = NilpotentPairData { label, v_dim, h, rho_v, rho_z, bracket_forms: forms };
    match p.check() {
        PairCheck::Ok => Ok(p),
        other => Err(Error::InvalidStructure(format!("{}: {:?}", p.label, other))),
    }
}

/// 𝔥_{n;𝔽} = Im 𝔽 + 𝔽ⁿ with [(z₁,v₁),(z₂,v₂)] = (Im(v₁·v₂*), 0).
///
/// Coordinates of 𝔽ⁿ are (entry, algebra basis) pairs in row-major order.
/// The acting algebra is {0}; catalog code attaches actual actions.
pub fn heisenberg_algebra(n: usize, f: AlgebraKind) -> Result<NilpotentPairData> {
    if n == 0 {
        return Err(Error::Unsupported("heisenberg algebra needs n >= 1".into()));
    }
    if f == AlgebraKind::Hsp {
        return Err(Error::Unsupported("split quaternions are not a Heisenberg coefficient field".into()));
    }
    if f == AlgebraKind::O && n > 2 {
        return Err(Error::Unsupported(format!("octonionic Heisenberg algebra only for n <= 2 (got {n})")));
    }
    let d = f.dim();
    let v_dim = n * d;
    let z_dim = d - 1;
    let unit = |a: usize| {
        let (i, b) = (a / d, a % d);
        (i, AlgebraElement::basis(f, b))
    };
    let forms = forms_from_bracket(v_dim, z_dim, |a, b| {
        let (i, x) = unit(a);
        let (j, y) = unit(b);
        if i != j {
            return vec![Rational::zero(); z_dim];
        }
        let p = x.mul(&y.conj()).expect("same algebra");
        p.coords[1..].to_vec()
    });
    Ok(NilpotentPairData {
        label: format!("h_{{{n};{}}}", f.label()),
        v_dim,
        h: LieAlgebra::abelian(0),
        rho_v: Vec::new(),
        rho_z: Vec::new(),
        bracket_forms: forms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_dimensions() {
        let r = heisenberg_algebra(1, AlgebraKind::R).unwrap();
        assert_eq!((r.z_dim(), r.v_dim()), (0, 1));
        assert!(r.nilradical().is_abelian());
        for n in 1..=3 {
            let c = heisenberg_algebra(n, AlgebraKind::C).unwrap();
            assert_eq!(c.n_dim(), 2 * n + 1);
            assert_eq!(c.center_dim(), 1);
            assert!(c.check().is_ok());
        }
        let o = heisenberg_algebra(1, AlgebraKind::O).unwrap();
        assert_eq!(o.n_dim(), 15);
        assert_eq!(o.center_dim(), 7);
        assert_eq!(o.nilradical().derived_algebra().len(), 7);
        let h2 = heisenberg_algebra(2, AlgebraKind::H).unwrap();
        assert_eq!(h2.n_dim(), 11);
        assert_eq!(h2.center_dim(), 3);
        assert!(heisenberg_algebra(3, AlgebraKind::O).is_err());
    }

    #[test]
    fn so_n_target_equivariance() {
        // so(3) on R^3 with bracket u v^T - v u^T
        let e = |i: usize, j: usize| {
            let mut m = QMatrix::zeros(3, 3);
            m.set(i, j, q(1));
            m.set(j, i, q(-1));
            m
        };
        let gens = vec![e(0, 1), e(0, 2), e(1, 2)];
        let (h, _) = super::super::algebra::lie_algebra_from_matrices(
            vec!["a".into(), "b".into(), "c".into()],
            &gens,
        )
        .unwrap();
        let p = build_nilpotent_pair("so3", h.clone(), gens.clone(), BracketTarget::FullLambda2).unwrap();
        assert!(p.check().is_ok());
        assert!(check_lie_algebra(&p.full_algebra()).is_ok());
        // a single non-invariant form is rejected
        let bad = BracketTarget::Forms(vec![e(0, 1)]);
        assert!(matches!(build_nilpotent_pair("bad", h, gens, bad), Err(Error::NotEquivariant(_))));
    }
}
