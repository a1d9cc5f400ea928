//! Defining representations of so(n), su(n), u(n) and sp(n).

use serde::{Deserialize, Serialize};

use super::RepData;
use crate::error::{Error, Result};
use crate::exactalg::algebra::{left_mult_matrix, right_mult_matrix, AlgebraElement, AlgebraKind};
use crate::exactalg::{q, CMatrix, GaussRational, QMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    So,
    Su,
    U,
    Sp,
}

/// E_ij − E_ji on ℝⁿ.
pub fn skew_unit(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m.set(i, j, q(1));
    m.set(j, i, q(-1));
    m
}

fn c_unit(n: usize, entries: &[(usize, usize, GaussRational)]) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    for (i, j, z) in entries {
        m.set(*i, *j, z.clone());
    }
    m
}

/// Skew-hermitian basis of u(n) (or su(n) when `traceless`).
pub fn unitary_basis(n: usize, traceless: bool) -> (Vec<String>, Vec<CMatrix>) {
    let one = GaussRational::one();
    let i = GaussRational::i();
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            labels.push(format!("A{a}{b}"));
            mats.push(c_unit(n, &[(a, b, one.clone()), (b, a, -&one)]));
            labels.push(format!("S{a}{b}"));
            mats.push(c_unit(n, &[(a, b, i.clone()), (b, a, i.clone())]));
        }
    }
    if traceless {
        for a in 0..n.saturating_sub(1) {
            labels.push(format!("D{a}"));
            mats.push(c_unit(n, &[(a, a, i.clone()), (a + 1, a + 1, -&i)]));
        }
    } else {
        for a in 0..n {
            labels.push(format!("D{a}"));
            mats.push(c_unit(n, &[(a, a, i.clone())]));
        }
    }
    (labels, mats)
}

/// Real 4n×4n matrix of a quaternionic n×n matrix acting on column vectors
/// from the left (coordinates (row, quaternion basis) row-major).
pub fn quaternion_matrix(n: usize, entries: &[(usize, usize, AlgebraElement)]) -> QMatrix {
    let mut m = QMatrix::zeros(4 * n, 4 * n);
    for (i, j, x) in entries {
        let l = left_mult_matrix(x);
        for a in 0..4 {
            for b in 0..4 {
                let v = m.get(4 * i + a, 4 * j + b) + l.get(a, b);
                m.set(4 * i + a, 4 * j + b, v);
            }
        }
    }
    m
}

/// Right multiplication by the quaternion unit `a` ∈ {1: i, 2: j, 3: k} on ℍⁿ.
pub fn right_unit(n: usize, a: usize) -> QMatrix {
    let r = right_mult_matrix(&AlgebraElement::basis(AlgebraKind::H, a));
    let blocks: Vec<&QMatrix> = std::iter::repeat_n(&r, n).collect();
    QMatrix::block_diag(&blocks)
}

/// Quaternionic skew-hermitian basis of sp(n) on ℍⁿ = ℝ^{4n}.
pub fn sp_basis(n: usize) -> (Vec<String>, Vec<QMatrix>) {
    let h = |a| AlgebraElement::basis(AlgebraKind::H, a);
    let neg = |a| AlgebraElement::basis(AlgebraKind::H, a).scale(&q(-1));
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for a in 0..n {
        for u in 1..4 {
            labels.push(format!("D{a}{}", ["", "i", "j", "k"][u]));
            mats.push(quaternion_matrix(n, &[(a, a, h(u))]));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            labels.push(format!("A{a}{b}"));
            mats.push(quaternion_matrix(n, &[(a, b, h(0)), (b, a, neg(0))]));
            for u in 1..4 {
                labels.push(format!("S{a}{b}{}", ["", "i", "j", "k"][u]));
                mats.push(quaternion_matrix(n, &[(a, b, h(u)), (b, a, h(u))]));
            }
        }
    }
    (labels, mats)
}

pub fn classical_rep(family: Family, n: usize) -> Result<RepData> {
    match family {
        Family::So => {
            if n < 2 {
                return Err(Error::Unsupported(format!("so({n})")));
            }
            let mut labels = Vec::new();
            let mut mats = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    labels.push(format!("E{i}{j}"));
                    mats.push(skew_unit(n, i, j));
                }
            }
            RepData::from_matrices(format!("so({n}) on R^{n}"), labels, mats)
        }
        Family::U | Family::Su => {
            let traceless = family == Family::Su;
            if n == 0 || (traceless && n < 2) {
                return Err(Error::Unsupported(format!("{:?}({n})", family)));
            }
            let (labels, mats) = unitary_basis(n, traceless);
            let name = if traceless { "su" } else { "u" };
            RepData::from_complex(format!("{name}({n}) on C^{n} realified"), labels, mats)
        }
        Family::Sp => {
            if n == 0 {
                return Err(Error::Unsupported("sp(0)".into()));
            }
            let (labels, mats) = sp_basis(n);
            RepData::from_matrices(format!("sp({n}) on H^{n}"), labels, mats)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::matrix::complex_structure;
    use crate::liecore::check_lie_algebra;

    #[test]
    fn dimensions_and_brackets() {
        let so3 = classical_rep(Family::So, 3).unwrap();
        assert_eq!(so3.matrices.len(), 3);
        assert!(so3.is_skew());
        let u2 = classical_rep(Family::U, 2).unwrap();
        assert_eq!((u2.h.dim(), u2.space_dim()), (4, 4));
        let j = complex_structure(2);
        assert!(u2.matrices.iter().all(|m| m.commutator(&j).is_zero()));
        let su3 = classical_rep(Family::Su, 3).unwrap();
        assert_eq!(su3.h.dim(), 8);
        let sp1 = classical_rep(Family::Sp, 1).unwrap();
        assert_eq!((sp1.h.dim(), sp1.space_dim()), (3, 4));
        let sp2 = classical_rep(Family::Sp, 2).unwrap();
        assert_eq!(sp2.h.dim(), 10);
        for r in [&so3, &u2, &su3, &sp1, &sp2] {
            assert!(check_lie_algebra(&r.h).is_ok());
            r.check_homomorphism().unwrap();
            assert!(r.is_skew());
        }
        for a in 1..4 {
            let ra = right_unit(2, a);
            assert!(sp2.matrices.iter().all(|m| m.commutator(&ra).is_zero()));
        }
    }
}
