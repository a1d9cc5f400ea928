//! Real algebras ℝ, ℂ, ℍ, ℍ_sp and 𝕆 given by multiplication tables over ℚ.
//!
//! Octonion convention: basis 1 = e0, e1..e7, with e_a·e_b = e_c for each
//! oriented triple below (and cyclic shifts); reversing the order flips the
//! sign, and e_a² = −1.
//!
//! ```text
//! (1,2,3) (1,4,5) (1,7,6) (2,4,6) (2,5,7) (3,4,7) (3,6,5)
//! ```
//!
//! Split quaternions: 1, i, j, k with i² = −1, j² = k² = +1, ij = k,
//! jk = −i, ki = j. They are realized as 2×2 real matrices via
//! 1 ↦ I, i ↦ (0 −1; 1 0), j ↦ diag(1, −1), k ↦ (0 1; 1 0), under which
//! conjugation is the adjugate (a b; c d) ↦ (d −b; −c a).

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::QMatrix;
use super::rational::{fmt_rational, q, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum AlgebraKind {
    R,
    C,
    H,
    #[serde(rename = "H_split")]
    Hsp,
    O,
}

pub const OCTONION_TRIPLES: [(usize, usize, usize); 7] =
    [(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)];

impl AlgebraKind {
    pub fn dim(self) -> usize {
        match self {
            AlgebraKind::R => 1,
            AlgebraKind::C => 2,
            AlgebraKind::H | AlgebraKind::Hsp => 4,
            AlgebraKind::O => 8,
        }
    }

    pub fn is_associative(self) -> bool {
        self != AlgebraKind::O
    }

    pub fn label(self) -> &'static str {
        match self {
            AlgebraKind::R => "R",
            AlgebraKind::C => "C",
            AlgebraKind::H => "H",
            AlgebraKind::Hsp => "H_split",
            AlgebraKind::O => "O",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(AlgebraKind::R),
            "C" => Ok(AlgebraKind::C),
            "H" => Ok(AlgebraKind::H),
            "H_split" | "Hsp" => Ok(AlgebraKind::Hsp),
            "O" => Ok(AlgebraKind::O),
            _ => Err(Error::Unsupported(format!("unknown algebra tag {s}"))),
        }
    }

    /// e_a · e_b = sign · e_c.
    pub fn basis_product(self, a: usize, b: usize) -> (i32, usize) {
        if a == 0 {
            return (1, b);
        }
        if b == 0 {
            return (1, a);
        }
        match self {
            AlgebraKind::R => unreachable!(),
            AlgebraKind::C => (-1, 0),
            AlgebraKind::H => quat_product(a, b, [-1, -1, -1]),
            AlgebraKind::Hsp => quat_product(a, b, [-1, 1, 1]),
            AlgebraKind::O => octonion_product(a, b),
        }
    }

    /// Sign of e_a · ē_a for a basis element (the diagonal norm form).
    pub fn norm_sign(self, a: usize) -> i32 {
        match (self, a) {
            (AlgebraKind::Hsp, 2 | 3) => -1,
            _ => 1,
        }
    }
}

fn quat_product(a: usize, b: usize, squares: [i32; 3]) -> (i32, usize) {
    if a == b {
        return (squares[a - 1], 0);
    }
    // ℍ: ij = k, jk = i, ki = j. ℍ_sp: ij = k, jk = −i, ki = j.
    let split = squares[1] == 1;
    let (s, c) = match (a, b) {
        (1, 2) => (1, 3),
        (2, 1) => (-1, 3),
        (2, 3) => (1, 1),
        (3, 2) => (-1, 1),
        (3, 1) => (1, 2),
        (1, 3) => (-1, 2),
        _ => unreachable!(),
    };
    if split && c == 1 {
        (-s, c)
    } else {
        (s, c)
    }
}

fn octonion_product(a: usize, b: usize) -> (i32, usize) {
    if a == b {
        return (-1, 0);
    }
    for &(x, y, z) in &OCTONION_TRIPLES {
        for (p, r, s) in [(x, y, z), (y, z, x), (z, x, y)] {
            if (a, b) == (p, r) {
                return (1, s);
            }
            if (a, b) == (r, p) {
                return (-1, s);
            }
        }
    }
    unreachable!("octonion table incomplete for ({a},{b})")
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub kind: AlgebraKind,
    pub coords: Vec<Rational>,
}

impl AlgebraElement {
    pub fn new(kind: AlgebraKind, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != kind.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coords for algebra {} of dim {}",
                coords.len(),
                kind.label(),
                kind.dim()
            )));
        }
        Ok(Self { kind, coords })
    }

    pub fn from_i64(kind: AlgebraKind, coords: &[i64]) -> Result<Self> {
        Self::new(kind, coords.iter().map(|&c| q(c)).collect())
    }

    pub fn zero(kind: AlgebraKind) -> Self {
        Self { kind, coords: vec![Rational::zero(); kind.dim()] }
    }

    pub fn one(kind: AlgebraKind) -> Self {
        Self::basis(kind, 0)
    }

    pub fn basis(kind: AlgebraKind, a: usize) -> Self {
        let mut e = Self::zero(kind);
        e.coords[a] = q(1);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Self { kind: self.kind, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Self { kind: self.kind, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { kind: self.kind, coords: self.coords.iter().map(|a| a * s).collect() }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.kind != o.kind {
            return Err(Error::AlgebraMismatch(self.kind.label().into(), o.kind.label().into()));
        }
        Ok(())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        algebra_multiply(self, o)
    }

    pub fn conj(&self) -> Self {
        let mut c = self.clone();
        for x in c.coords.iter_mut().skip(1) {
            *x = -x.clone();
        }
        c
    }

    pub fn re(&self) -> Rational {
        self.coords[0].clone()
    }

    pub fn im(&self) -> Self {
        let mut c = self.clone();
        c.coords[0] = Rational::zero();
        c
    }

    /// x · x̄ as a rational (the norm form; indefinite for ℍ_sp).
    pub fn norm(&self) -> Rational {
        self.coords
            .iter()
            .enumerate()
            .map(|(a, x)| x * x * q(self.kind.norm_sign(a) as i64))
            .sum()
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(fmt_rational).collect();
        write!(f, "{}[{}]", self.kind.label(), c.join(", "))
    }
}

pub fn algebra_multiply(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.check(y)?;
    let k = x.kind;
    let mut out = AlgebraElement::zero(k);
    for (a, xa) in x.coords.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in y.coords.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let (s, c) = k.basis_product(a, b);
            let t = xa * yb;
            if s > 0 {
                out.coords[c] += t;
            } else {
                out.coords[c] -= t;
            }
        }
    }
    Ok(out)
}

/// Matrix of y ↦ x·y in the canonical basis.
pub fn left_mult_matrix(x: &AlgebraElement) -> QMatrix {
    mult_matrix(x, true)
}

/// Matrix of y ↦ y·x in the canonical basis.
pub fn right_mult_matrix(x: &AlgebraElement) -> QMatrix {
    mult_matrix(x, false)
}

fn mult_matrix(x: &AlgebraElement, left: bool) -> QMatrix {
    let d = x.kind.dim();
    let mut m = QMatrix::zeros(d, d);
    for b in 0..d {
        let e = AlgebraElement::basis(x.kind, b);
        let p = if left { algebra_multiply(x, &e) } else { algebra_multiply(&e, x) }.expect("same kind");
        for a in 0..d {
            m.set(a, b, p.coords[a].clone());
        }
    }
    m
}

/// 2×2 real matrix of a split quaternion.
pub fn hsp_to_matrix(x: &AlgebraElement) -> Result<QMatrix> {
    if x.kind != AlgebraKind::Hsp {
        return Err(Error::AlgebraMismatch(x.kind.label().into(), "H_split".into()));
    }
    let [a, b, c, d] = [&x.coords[0], &x.coords[1], &x.coords[2], &x.coords[3]];
    QMatrix::from_vec(2, 2, vec![a + c, d - b, b + d, a - c])
}

/// Inverse of [`hsp_to_matrix`].
pub fn hsp_from_matrix(m: &QMatrix) -> Result<AlgebraElement> {
    if (m.rows(), m.cols()) != (2, 2) {
        return Err(Error::DimensionMismatch("split quaternion needs a 2x2 matrix".into()));
    }
    let half = q(1) / q(2);
    let (m00, m01, m10, m11) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    AlgebraElement::new(
        AlgebraKind::Hsp,
        vec![
            (m00 + m11) * &half,
            (m10 - m01) * &half,
            (m00 - m11) * &half,
            (m01 + m10) * &half,
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgebraKind::*;

    fn e(k: AlgebraKind, a: usize) -> AlgebraElement {
        AlgebraElement::basis(k, a)
    }

    #[test]
    fn quaternion_ij_is_k() {
        assert_eq!(e(H, 1).mul(&e(H, 2)).unwrap(), e(H, 3));
        assert!(e(H, 1).mul(&e(C, 1)).is_err());
    }

    #[test]
    fn octonion_witness() {
        let lhs = e(O, 1).mul(&e(O, 2).mul(&e(O, 4)).unwrap()).unwrap();
        let rhs = e(O, 1).mul(&e(O, 2)).unwrap().mul(&e(O, 4)).unwrap();
        assert_eq!(lhs, e(O, 7).scale(&q(-1)));
        assert_eq!(rhs, e(O, 7));
    }

    #[test]
    fn split_quaternion_model() {
        for a in 0..4 {
            for b in 0..4 {
                let (x, y) = (e(Hsp, a), e(Hsp, b));
                let lhs = hsp_to_matrix(&x.mul(&y).unwrap()).unwrap();
                let rhs = hsp_to_matrix(&x).unwrap().mul(&hsp_to_matrix(&y).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        let x = AlgebraElement::from_i64(Hsp, &[3, -1, 2, 5]).unwrap();
        let m = hsp_to_matrix(&x).unwrap();
        let prod = x.mul(&x.conj()).unwrap();
        assert_eq!(prod, AlgebraElement::one(Hsp).scale(&m.determinant().unwrap()));
        assert_eq!(hsp_from_matrix(&m).unwrap(), x);
        // conjugation is the adjugate
        let adj = QMatrix::from_vec(
            2,
            2,
            vec![m.get(1, 1).clone(), -m.get(0, 1).clone(), -m.get(1, 0).clone(), m.get(0, 0).clone()],
        )
        .unwrap();
        assert_eq!(hsp_to_matrix(&x.conj()).unwrap(), adj);
    }

    #[test]
    fn table_laws() {
        for k in [R, C, H, Hsp, O] {
            let d = k.dim();
            for a in 0..d {
                for b in 0..d {
                    let (x, y) = (e(k, a), e(k, b));
                    let xy = x.mul(&y).unwrap();
                    assert_eq!(xy.conj(), y.conj().mul(&x.conj()).unwrap(), "{k:?} {a} {b}");
                    let l = x.mul(&x.mul(&y).unwrap()).unwrap();
                    let r = x.mul(&x).unwrap().mul(&y).unwrap();
                    assert_eq!(l, r, "left alternative {k:?} {a} {b}");
                    let l = y.mul(&x).unwrap().mul(&x).unwrap();
                    let r = y.mul(&x.mul(&x).unwrap()).unwrap();
                    assert_eq!(l, r, "right alternative {k:?} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn octonion_norm_is_multiplicative() {
        let x = AlgebraElement::from_i64(O, &[1, -2, 0, 3, 1, -1, 2, 4]).unwrap();
        let y = AlgebraElement::from_i64(O, &[2, 1, -3, 0, 5, 1, -1, 1]).unwrap();
        assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
    }
}
