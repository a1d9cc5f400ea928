//! Matrix realizations of the compact algebras and representations used by
//! the catalog.

pub mod classical;
pub mod clifford;
pub mod functor;
pub mod g2;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{CMatrix, QMatrix, Rational};
use crate::liecore::algebra::{lie_algebra_from_matrices, span_basis, to_sparse, LieAlgebra, MatrixSpan};

pub use classical::{classical_rep, Family};
pub use clifford::{clifford_spin, CliffordData, SpinModuleType};
pub use functor::{functor_rep, Functor};
pub use g2::g2_derivations;

#[derive(Clone, Debug)]
pub struct RepData {
    pub label: String,
    pub h: LieAlgebra,
    /// ρ(e_i) for each basis vector of 𝔥, acting on ℝ^space_dim.
    pub matrices: Vec<QMatrix>,
    /// Complex form of the representation, when it was built over ℂ.
    pub complex: Option<Vec<CMatrix>>,
    /// Indices of a Lie-generating subset of the basis of 𝔥.
    pub generators: Vec<usize>,
}

impl RepData {
    /// Build from a faithful family of matrices spanning a Lie algebra.
    pub fn from_matrices(label: impl Into<String>, labels: Vec<String>, matrices: Vec<QMatrix>) -> Result<Self> {
        let (h, _) = lie_algebra_from_matrices(labels, &matrices)?;
        let generators = generating_subset(&h);
        Ok(Self { label: label.into(), h, matrices, complex: None, generators })
    }

    pub fn from_complex(label: impl Into<String>, labels: Vec<String>, cm: Vec<CMatrix>) -> Result<Self> {
        let real: Vec<QMatrix> = cm.iter().map(CMatrix::realify).collect();
        let mut r = Self::from_matrices(label, labels, real)?;
        r.complex = Some(cm);
        Ok(r)
    }

    /// Representation of a known algebra (possibly not faithful).
    pub fn with_algebra(label: impl Into<String>, h: LieAlgebra, matrices: Vec<QMatrix>) -> Result<Self> {
        if h.dim() != matrices.len() {
            return Err(Error::DimensionMismatch(format!("{} matrices for dim {}", matrices.len(), h.dim())));
        }
        let generators = generating_subset(&h);
        let r = Self { label: label.into(), h, matrices, complex: None, generators };
        r.check_homomorphism()?;
        Ok(r)
    }

    pub fn space_dim(&self) -> usize {
        self.matrices.first().map(QMatrix::rows).unwrap_or(0)
    }

    pub fn generator_matrices(&self) -> Vec<QMatrix> {
        self.generators.iter().map(|&i| self.matrices[i].clone()).collect()
    }

    /// ρ of a coordinate vector of 𝔥.
    pub fn apply(&self, x: &[Rational]) -> QMatrix {
        let n = self.space_dim();
        let mut m = QMatrix::zeros(n, n);
        for (c, r) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                m.add_scaled(c, r);
            }
        }
        m
    }

    /// [ρX, ρY] = ρ[X, Y] on all basis pairs.
    pub fn check_homomorphism(&self) -> Result<()> {
        let d = self.h.dim();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.matrices[i].commutator(&self.matrices[j]);
                let mut rhs = QMatrix::zeros(lhs.rows(), lhs.cols());
                for (k, c) in self.h.bracket_basis(i, j) {
                    rhs.add_scaled(c, &self.matrices[*k]);
                }
                if lhs != rhs {
                    return Err(Error::InvalidStructure(format!("{}: not a homomorphism at ({i},{j})", self.label)));
                }
            }
        }
        Ok(())
    }

    /// Span of the representation matrices, for reading θ off a conjugation.
    pub fn span(&self) -> Result<MatrixSpan> {
        MatrixSpan::new(self.matrices.clone())
    }

    pub fn is_skew(&self) -> bool {
        self.matrices.iter().all(QMatrix::is_antisymmetric)
    }

    /// Direct sum of two reps of the same algebra.
    pub fn direct_sum(&self, o: &RepData) -> Result<RepData> {
        if self.h != o.h {
            return Err(Error::InvalidStructure("direct sum needs the same algebra".into()));
        }
        let matrices = self.matrices.iter().zip(&o.matrices).map(|(a, b)| QMatrix::block_diag(&[a, b])).collect();
        Ok(RepData {
            label: format!("{} + {}", self.label, o.label),
            h: self.h.clone(),
            matrices,
            complex: None,
            generators: self.generators.clone(),
        })
    }

    /// Add a central summand acting by the given matrix (e.g. a U(1) factor).
    pub fn with_center(&self, label: impl Into<String>, c: QMatrix) -> Result<RepData> {
        let mut mats = vec![c];
        mats.extend(self.matrices.iter().cloned());
        let mut labels = vec!["c".to_string()];
        labels.extend(self.h.labels().iter().cloned());
        let h = relabel(&LieAlgebra::abelian(1).direct_sum(&self.h), labels);
        RepData::with_algebra(label, h, mats)
    }
}

fn relabel(h: &LieAlgebra, labels: Vec<String>) -> LieAlgebra {
    let mut out = LieAlgebra::with_labels(labels);
    for i in 0..h.dim() {
        for j in i + 1..h.dim() {
            let b = h.bracket_basis(i, j);
            if !b.is_empty() {
                out.set_bracket(i, j, b.clone());
            }
        }
    }
    out
}

/// Greedy Lie-generating subset of a basis.
pub fn generating_subset(h: &LieAlgebra) -> Vec<usize> {
    let d = h.dim();
    let mut chosen: Vec<usize> = Vec::new();
    let mut closure: Vec<Vec<Rational>> = Vec::new();
    let in_span = |span: &Vec<Vec<Rational>>, v: &[Rational]| -> bool {
        let mut rows: Vec<_> = span.iter().map(|r| to_sparse(r)).collect();
        let before = span_basis(d, rows.iter()).len();
        rows.push(to_sparse(v));
        span_basis(d, rows.iter()).len() == before
    };
    for i in 0..d {
        if closure.len() == d {
            break;
        }
        let mut e = vec![Rational::zero(); d];
        e[i] = Rational::from_integer(1.into());
        if !closure.is_empty() && in_span(&closure, &e) {
            continue;
        }
        chosen.push(i);
        // recompute the Lie closure of the chosen elements
        let mut basis: Vec<Vec<Rational>> = closure.clone();
        basis.push(e);
        loop {
            let mut rows: Vec<_> = basis.iter().map(|r| to_sparse(r)).collect();
            for a in 0..basis.len() {
                for b in a + 1..basis.len() {
                    rows.push(to_sparse(&h.bracket(&basis[a], &basis[b])));
                }
            }
            let next = span_basis(d, rows.iter());
            if next.len() == basis.len() {
                basis = next;
                break;
            }
            basis = next;
        }
        closure = basis;
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so_n_generated_by_few() {
        let r = classical_rep(Family::So, 5).unwrap();
        assert!(r.generators.len() < r.h.dim());
        // the Lie closure of the generators is everything
        let d = r.h.dim();
        let mut basis: Vec<Vec<Rational>> = r
            .generators
            .iter()
            .map(|&i| {
                let mut e = vec![Rational::zero(); d];
                e[i] = Rational::from_integer(1.into());
                e
            })
            .collect();
        for _ in 0..4 {
            let mut rows: Vec<_> = basis.iter().map(|x| to_sparse(x)).collect();
            for a in 0..basis.len() {
                for b in a + 1..basis.len() {
                    rows.push(to_sparse(&r.h.bracket(&basis[a], &basis[b])));
                }
            }
            basis = span_basis(d, rows.iter());
        }
        assert_eq!(basis.len(), d);
    }
}
