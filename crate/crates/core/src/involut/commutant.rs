//! Intertwiner spaces and commutants of matrix representations.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactalg::linsolve::{LinearSystem, SparseRow};
use crate::exactalg::{q, symmetric_signature, QMatrix, Rational};

/// All T (rows_b × rows_a) with B_i·T = T·A_i for every i.
pub fn intertwiners(a: &[QMatrix], b: &[QMatrix], na: usize, nb: usize) -> Vec<QMatrix> {
    assert_eq!(a.len(), b.len(), "intertwiners: generator count mismatch");
    let nvars = nb * na;
    let var = |r: usize, c: usize| r * na + c;
    // Equations for each generator built in parallel, then fed sequentially.
    let eqs: Vec<Vec<SparseRow>> = a
        .par_iter()
        .zip(b.par_iter())
        .map(|(ai, bi)| {
            let mut out = Vec::with_capacity(nb * na);
            for r in 0..nb {
                for c in 0..na {
                    let mut row: Vec<(usize, Rational)> = Vec::new();
                    for k in 0..nb {
                        let x = bi.get(r, k);
                        if !x.is_zero() {
                            row.push((var(k, c), x.clone()));
                        }
                    }
                    for k in 0..na {
                        let x = ai.get(k, c);
                        if !x.is_zero() {
                            row.push((var(r, k), -x.clone()));
                        }
                    }
                    let row = crate::exactalg::linsolve::sparse_row(row);
                    if !row.is_empty() {
                        out.push(row);
                    }
                }
            }
            out
        })
        .collect();
    let mut sys = LinearSystem::new(nvars);
    for gen in eqs {
        for row in gen {
            sys.add_homogeneous(row);
            if sys.rank() == nvars {
                return Vec::new();
            }
        }
    }
    sys.nullspace()
        .into_iter()
        .map(|v| QMatrix::from_vec(nb, na, v).expect("shape"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DivisionType {
    R,
    C,
    H,
    NonDivision,
}

/// Commutant with a normalized basis when it is a division algebra:
/// ℝ: [1]; ℂ: [1, J] with J² = −a; ℍ: [1, I, J, K] with I² = −a, J² = −b, K = IJ.
#[derive(Clone, Debug)]
pub struct CommutantData {
    pub basis: Vec<QMatrix>,
    pub division: DivisionType,
    /// Normalized basis as above, when division.
    pub units: Vec<QMatrix>,
    /// The constants −I², −J² (positive) of the normalized basis.
    pub norms: Vec<Rational>,
}

pub fn commutant(rho: &[QMatrix], n: usize) -> CommutantData {
    let basis = if rho.is_empty() {
        // everything commutes
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut m = QMatrix::zeros(n, n);
                m.set(i, j, q(1));
                out.push(m);
            }
        }
        out
    } else {
        intertwiners(rho, rho, n, n)
    };
    classify(basis, n)
}

fn trace_form(basis: &[QMatrix]) -> QMatrix {
    let m = basis.len();
    let mut t = QMatrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let x = basis[i].mul(&basis[j]).trace();
            t.set(i, j, x.clone());
            t.set(j, i, x);
        }
    }
    t
}

fn is_scalar(m: &QMatrix) -> Option<Rational> {
    let c = m.get(0, 0).clone();
    (*m == QMatrix::scalar(m.rows(), c.clone())).then_some(c)
}

fn classify(basis: Vec<QMatrix>, n: usize) -> CommutantData {
    let non = |basis: Vec<QMatrix>| CommutantData { basis, division: DivisionType::NonDivision, units: vec![], norms: vec![] };
    let m = basis.len();
    if n == 0 || !matches!(m, 1 | 2 | 4) {
        return non(basis);
    }
    let sig = match symmetric_signature(&trace_form(&basis)) {
        Ok(s) => s,
        Err(_) => return non(basis),
    };
    let one = QMatrix::identity(n);
    let nq = q(n as i64);
    // trace-free parts of the basis
    let tf: Vec<QMatrix> = basis.iter().map(|b| b.sub(&one.scale(&(b.trace() / &nq)))).filter(|b| !b.is_zero()).collect();
    match (m, sig.pq(), sig.r) {
        (1, (1, 0), 0) => CommutantData { basis, division: DivisionType::R, units: vec![one], norms: vec![] },
        (2, (1, 1), 0) => {
            let j = tf[0].clone();
            match is_scalar(&j.mul(&j)) {
                Some(c) if c < Rational::zero() => {
                    CommutantData { basis, division: DivisionType::C, units: vec![one, j], norms: vec![-c] }
                }
                _ => non(basis),
            }
        }
        (4, (1, 3), 0) => {
            // Gram–Schmidt the trace-free part under −tr(xy), then check the
            // quaternion relations exactly.
            let mut orth: Vec<QMatrix> = Vec::new();
            for b in tf.iter() {
                let mut v = b.clone();
                for o in &orth {
                    let num = v.mul(o).trace();
                    let den = o.mul(o).trace();
                    v = v.sub(&o.scale(&(num / den)));
                }
                if !v.is_zero() {
                    orth.push(v);
                }
            }
            if orth.len() != 3 {
                return non(basis);
            }
            let (i, j) = (orth[0].clone(), orth[1].clone());
            let k = i.mul(&j);
            let (Some(a), Some(b)) = (is_scalar(&i.mul(&i)), is_scalar(&j.mul(&j))) else { return non(basis) };
            let anti = i.mul(&j).add(&j.mul(&i)).is_zero();
            if a >= Rational::zero() || b >= Rational::zero() || !anti {
                return non(basis);
            }
            CommutantData { basis, division: DivisionType::H, units: vec![one, i, j, k], norms: vec![-a, -b] }
        }
        _ => non(basis),
    }
}

/// Coordinates of `x` in the normalized division basis.
pub fn division_coords(c: &CommutantData, x: &QMatrix) -> Option<Vec<Rational>> {
    let n = x.rows();
    let coords: Vec<Rational> = c
        .units
        .iter()
        .map(|u| {
            // tr(x·ū) / tr(u·ū) with ū = u for 1 and −u otherwise
            let num = x.mul(u).trace();
            let den = u.mul(u).trace();
            if den.is_zero() {
                Rational::zero()
            } else {
                num / den
            }
        })
        .collect();
    let mut back = QMatrix::zeros(n, n);
    for (u, a) in c.units.iter().zip(&coords) {
        back.add_scaled(a, u);
    }
    (back == *x).then_some(coords)
}

/// Whether the commutant contains an element squaring to −1 (a complex structure).
pub fn has_complex_structure(c: &CommutantData) -> bool {
    match c.division {
        DivisionType::C => is_rational_square(&c.norms[0]),
        DivisionType::H => true,
        _ => false,
    }
}

pub fn is_rational_square(x: &Rational) -> bool {
    if *x < Rational::zero() {
        return false;
    }
    let is_sq = |n: &num_bigint::BigInt| {
        let r = n.sqrt();
        &(&r * &r) == n
    };
    is_sq(x.numer()) && is_sq(x.denom())
}

pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if !is_rational_square(x) {
        return None;
    }
    Some(Rational::new(x.numer().sqrt(), x.denom().sqrt()))
}

/// Generic element chooser for kernels: an invertible element is one with
/// nonzero determinant.
pub fn is_invertible(m: &QMatrix) -> bool {
    m.is_square() && m.determinant().map(|d| !d.is_zero()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::matrix::complex_structure;

    #[test]
    fn complex_and_real_commutants() {
        // so(2) on R^2: commutant C
        let j = complex_structure(1);
        let c = commutant(std::slice::from_ref(&j), 2);
        assert_eq!(c.division, DivisionType::C);
        // so(3) on R^3: commutant R
        let e = |i: usize, k: usize| {
            let mut m = QMatrix::zeros(3, 3);
            m.set(i, k, q(1));
            m.set(k, i, q(-1));
            m
        };
        let c = commutant(&[e(0, 1), e(1, 2)], 3);
        assert_eq!(c.division, DivisionType::R);
        // reducible: so(2) + trivial on R^3
        let c = commutant(&[e(0, 1)], 3);
        assert_eq!(c.division, DivisionType::NonDivision);
    }

    #[test]
    fn quaternion_commutant() {
        use crate::exactalg::algebra::{left_mult_matrix, AlgebraElement, AlgebraKind};
        let l = |a| left_mult_matrix(&AlgebraElement::basis(AlgebraKind::H, a));
        let c = commutant(&[l(1), l(2), l(3)], 4);
        assert_eq!(c.division, DivisionType::H);
        assert!(has_complex_structure(&c));
        assert_eq!(division_coords(&c, &c.units[3]).unwrap(), vec![q(0), q(0), q(0), q(1)]);
    }
}
