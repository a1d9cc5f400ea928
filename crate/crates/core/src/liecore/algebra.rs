//! Finite-dimensional real Lie algebras given by sparse structure constants.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::linsolve::{sparse_row, LinearSystem, SparseRow};
use crate::exactalg::{QMatrix, Rational};

/// [e_i, e_j] = Σ_k c_ijk e_k, stored sparsely for every ordered pair.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    table: Vec<SparseRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieCheck {
    Ok,
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

impl LieCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, LieCheck::Ok)
    }
}

impl fmt::Display for LieCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieCheck::Ok => write!(f, "ok"),
            LieCheck::Antisymmetry { i, j } => write!(f, "antisymmetry fails at (e{i}, e{j})"),
            LieCheck::Jacobi { i, j, k } => write!(f, "Jacobi fails at (e{i}, e{j}, e{k})"),
        }
    }
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        Self::with_labels((0..dim).map(|i| format!("e{i}")).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let d = labels.len();
        Self { labels, table: vec![Vec::new(); d * d] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Set [e_i, e_j] = v and [e_j, e_i] = −v.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: SparseRow) {
        let d = self.dim();
        let neg = v.iter().map(|(k, c)| (*k, -c.clone())).collect();
        self.table[i * d + j] = v;
        self.table[j * d + i] = neg;
    }

    /// Set only [e_i, e_j]; used to build deliberately broken tables.
    pub fn set_bracket_raw(&mut self, i: usize, j: usize, v: SparseRow) {
        let d = self.dim();
        self.table[i * d + j] = v;
    }

    /// Build from a dense c[i][j][k] array.
    pub fn from_structure_constants(c: &[Vec<Vec<Rational>>]) -> Self {
        let d = c.len();
        let mut l = Self::abelian(d);
        for i in 0..d {
            for j in 0..d {
                l.table[i * d + j] =
                    c[i][j].iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, v.clone())).collect();
            }
        }
        l
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j)
            .iter()
            .find(|(c, _)| *c == k)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseRow {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in &self.table[i * d + j] {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    fn bracket_sparse(&self, x: &SparseRow, y: &SparseRow) -> SparseRow {
        let d = self.dim();
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, xi) in x {
            for (j, yj) in y {
                let s = xi * yj;
                for (k, c) in &self.table[i * d + j] {
                    *acc.entry(*k).or_insert_with(Rational::zero) += &s * c;
                }
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Matrix of ad(e_i).
    pub fn ad(&self, i: usize) -> QMatrix {
        let d = self.dim();
        let mut m = QMatrix::zeros(d, d);
        for j in 0..d {
            for (k, c) in &self.table[i * d + j] {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    pub fn killing_form(&self) -> QMatrix {
        let d = self.dim();
        let ads: Vec<QMatrix> = (0..d).map(|i| self.ad(i)).collect();
        let mut k = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = ads[i].mul(&ads[j]).trace();
                k.set(i, j, t.clone());
                k.set(j, i, t);
            }
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Basis of the center, as coordinate vectors.
    pub fn center(&self) -> Vec<Vec<Rational>> {
        let d = self.dim();
        // x central iff Σ_i x_i c_ijk = 0 for all j, k
        let mut sys = LinearSystem::new(d);
        for j in 0..d {
            let mut eqs: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
            for i in 0..d {
                for (k, c) in &self.table[i * d + j] {
                    eqs.entry(*k).or_default().push((i, c.clone()));
                }
            }
            for (_, row) in eqs {
                sys.add_homogeneous(sparse_row(row));
            }
        }
        sys.nullspace()
    }

    /// Basis (in row-reduced form) of [𝔤, 𝔤].
    pub fn derived_algebra(&self) -> Vec<Vec<Rational>> {
        span_basis(self.dim(), self.table.iter())
    }

    /// [𝔤, [𝔤, 𝔤]] = 0 and [𝔤, 𝔤] ≠ 0.
    pub fn is_two_step_nilpotent(&self) -> bool {
        let d = self.dim();
        if self.is_abelian() {
            return false;
        }
        for i in 0..d {
            for j in 0..d {
                let b = &self.table[i * d + j];
                if b.is_empty() {
                    continue;
                }
                for k in 0..d {
                    let e: SparseRow = vec![(k, Rational::from_integer(1.into()))];
                    if !self.bracket_sparse(&e, b).is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Direct sum; basis of `o` follows basis of `self`.
    pub fn direct_sum(&self, o: &LieAlgebra) -> LieAlgebra {
        let (a, b) = (self.dim(), o.dim());
        let mut labels = self.labels.clone();
        labels.extend(o.labels.iter().cloned());
        let mut l = LieAlgebra::with_labels(labels);
        for i in 0..a {
            for j in 0..a {
                l.table[i * (a + b) + j] = self.table[i * a + j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                l.table[(a + i) * (a + b) + a + j] =
                    o.table[i * b + j].iter().map(|(k, c)| (a + k, c.clone())).collect();
            }
        }
        l
    }

    /// Structure constants after the change of basis f_a = Σ_i P_ia e_i.
    pub fn change_basis(&self, p: &QMatrix) -> Result<LieAlgebra> {
        let d = self.dim();
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::InvalidStructure("change of basis is singular".into()))?;
        let cols: Vec<Vec<Rational>> = (0..d).map(|a| p.col(a)).collect();
        let mut l = LieAlgebra::abelian(d);
        for a in 0..d {
            for b in a + 1..d {
                let br = self.bracket(&cols[a], &cols[b]);
                let coords = pinv.mul_vec(&br);
                l.set_bracket(a, b, to_sparse(&coords));
            }
        }
        Ok(l)
    }

    /// Whether x ↦ M x (M square on coordinates) preserves the bracket on basis pairs.
    pub fn is_automorphism(&self, m: &QMatrix) -> bool {
        let d = self.dim();
        let cols: Vec<Vec<Rational>> = (0..d).map(|a| m.col(a)).collect();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = m.mul_vec(&to_dense(d, &self.table[i * d + j]));
                let rhs = self.bracket(&cols[i], &cols[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        write!(f, "LieAlgebra(dim {}", d)?;
        for i in 0..d {
            for j in i + 1..d {
                let b = &self.table[i * d + j];
                if !b.is_empty() {
                    write!(f, ", [{},{}]={:?}", i, j, b)?;
                }
            }
        }
        write!(f, ")")
    }
}

pub fn to_sparse(v: &[Rational]) -> SparseRow {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

pub fn to_dense(d: usize, v: &SparseRow) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); d];
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

/// Row-reduced basis of the span of sparse vectors in ℚ^d.
pub fn span_basis<'a, I: Iterator<Item = &'a SparseRow>>(d: usize, vs: I) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut sys = LinearSystem::new(d);
    for v in vs {
        if v.is_empty() {
            continue;
        }
        if sys.add_homogeneous(v.clone()) {
            rows.push(to_dense(d, v));
        }
    }
    if rows.is_empty() {
        return rows;
    }
    let m = QMatrix::from_vec(rows.len(), d, rows.concat()).expect("shape");
    let (r, piv) = m.rref();
    (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
}

pub fn check_lie_algebra(l: &LieAlgebra) -> LieCheck {
    let d = l.dim();
    for i in 0..d {
        if !l.table[i * d + i].is_empty() {
            return LieCheck::Antisymmetry { i, j: i };
        }
        for j in i + 1..d {
            let a = &l.table[i * d + j];
            let b = &l.table[j * d + i];
            let sum = sparse_row(a.iter().cloned().chain(b.iter().cloned()));
            if !sum.is_empty() {
                return LieCheck::Antisymmetry { i, j };
            }
        }
    }
    let one = Rational::from_integer(1.into());
    let e = |k: usize| -> SparseRow { vec![(k, one.clone())] };
    for i in 0..d {
        for j in i + 1..d {
            let ij = &l.table[i * d + j];
            for k in j + 1..d {
                let t1 = l.bracket_sparse(&e(i), &l.table[j * d + k]);
                let t2 = l.bracket_sparse(&e(j), &l.table[k * d + i]);
                let t3 = l.bracket_sparse(&e(k), ij);
                if !sparse_row(t1.into_iter().chain(t2).chain(t3)).is_empty() {
                    return LieCheck::Jacobi { i, j, k };
                }
            }
        }
    }
    LieCheck::Ok
}

/// Coordinates of matrices with respect to a fixed linearly independent
/// family, read off from a set of pivot entries.
#[derive(Clone, Debug)]
pub struct MatrixSpan {
    basis: Vec<QMatrix>,
    positions: Vec<usize>,
    inv_t: QMatrix,
}

impl MatrixSpan {
    pub fn new(basis: Vec<QMatrix>) -> Result<Self> {
        let k = basis.len();
        if k == 0 {
            return Ok(Self { basis, positions: Vec::new(), inv_t: QMatrix::zeros(0, 0) });
        }
        let n = basis[0].data().len();
        let mut sys = LinearSystem::new(n);
        let mut rows = Vec::with_capacity(k);
        for b in &basis {
            let row = to_sparse(b.data());
            if !sys.add_homogeneous(row) {
                return Err(Error::InvalidStructure("matrix family is linearly dependent".into()));
            }
            rows.push(b.data().to_vec());
        }
        let m = QMatrix::from_vec(k, n, rows.concat())?;
        let (_, positions) = m.rref();
        let s = m.submatrix(&(0..k).collect::<Vec<_>>(), &positions);
        let inv_t = s.inverse().expect("pivot minor invertible").transpose();
        Ok(Self { basis, positions, inv_t })
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `x`, or `None` if `x` is outside the span.
    pub fn coords(&self, x: &QMatrix) -> Option<Vec<Rational>> {
        let xs: Vec<Rational> = self.positions.iter().map(|&p| x.data()[p].clone()).collect();
        let c = self.inv_t.mul_vec(&xs);
        let mut rebuilt = QMatrix::zeros(x.rows(), x.cols());
        for (a, ca) in c.iter().enumerate() {
            rebuilt.add_scaled(ca, &self.basis[a]);
        }
        (rebuilt == *x).then_some(c)
    }

    pub fn combine(&self, c: &[Rational]) -> QMatrix {
        let b0 = &self.basis[0];
        let mut out = QMatrix::zeros(b0.rows(), b0.cols());
        for (a, ca) in c.iter().enumerate() {
            out.add_scaled(ca, &self.basis[a]);
        }
        out
    }
}

/// Lie algebra spanned by a commutator-closed family of matrices.
pub fn lie_algebra_from_matrices(labels: Vec<String>, basis: &[QMatrix]) -> Result<(LieAlgebra, MatrixSpan)> {
    let span = MatrixSpan::new(basis.to_vec())?;
    let mut l = LieAlgebra::with_labels(labels);
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let c = basis[i].commutator(&basis[j]);
            let coords = span
                .coords(&c)
                .ok_or_else(|| Error::InvalidStructure(format!("span not closed under [{i},{j}]")))?;
            l.set_bracket(i, j, to_sparse(&coords));
        }
    }
    Ok((l, span))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    pub(crate) fn so3() -> LieAlgebra {
        let mut l = LieAlgebra::abelian(3);
        l.set_bracket(0, 1, vec![(2, q(1))]);
        l.set_bracket(1, 2, vec![(0, q(1))]);
        l.set_bracket(2, 0, vec![(1, q(1))]);
        l
    }

    #[test]
    fn so3_and_abelian() {
        assert!(check_lie_algebra(&LieAlgebra::abelian(4)).is_ok());
        let l = so3();
        assert!(check_lie_algebra(&l).is_ok());
        assert!(l.center().is_empty());
        assert_eq!(l.derived_algebra().len(), 3);
        assert!(!l.is_two_step_nilpotent());
        let k = l.killing_form();
        assert_eq!(k, QMatrix::scalar(3, q(-2)));
    }

    #[test]
    fn perturbed_so3_fails_jacobi() {
        let mut l = so3();
        l.set_bracket(0, 1, vec![(0, q(1)), (2, q(1))]);
        assert_eq!(check_lie_algebra(&l), LieCheck::Jacobi { i: 0, j: 1, k: 2 });
        let mut l = so3();
        l.set_bracket_raw(0, 1, vec![(2, q(2))]);
        assert_eq!(check_lie_algebra(&l), LieCheck::Antisymmetry { i: 0, j: 1 });
    }

    #[test]
    fn from_matrices_roundtrip() {
        let e = |i: usize, j: usize| {
            let mut m = QMatrix::zeros(3, 3);
            m.set(i, j, q(1));
            m.set(j, i, q(-1));
            m
        };
        let (l, span) = lie_algebra_from_matrices(
            vec!["a".into(), "b".into(), "c".into()],
            &[e(1, 2), e(2, 0), e(0, 1)],
        )
        .unwrap();
        assert!(check_lie_algebra(&l).is_ok());
        assert_eq!(l.killing_form(), QMatrix::scalar(3, q(-2)));
        assert!(span.coords(&QMatrix::identity(3)).is_none());
        let p = QMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]);
        let l2 = l.change_basis(&p).unwrap();
        assert!(check_lie_algebra(&l2).is_ok());
    }
}
