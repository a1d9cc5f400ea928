//! Involutions of 𝔥 and how they are specified.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{QMatrix, Rational};
use crate::liecore::LieAlgebra;
use crate::repcat::RepData;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionData {
    /// θ on coordinates of 𝔥 (columns are images of basis vectors).
    pub theta: QMatrix,
    pub is_involutive: bool,
    pub fixed_subalgebra: Vec<Vec<Rational>>,
}

impl InvolutionData {
    pub fn new(h: &LieAlgebra, theta: QMatrix) -> Result<Self> {
        if theta.rows() != h.dim() || !theta.is_square() {
            return Err(Error::DimensionMismatch("theta must be square on h".into()));
        }
        if !h.is_automorphism(&theta) {
            return Err(Error::InvalidInvolution("theta does not preserve the bracket of h".into()));
        }
        let is_involutive = theta.mul(&theta).is_identity();
        let n = h.dim();
        let fixed_subalgebra = theta.sub(&QMatrix::identity(n)).kernel();
        Ok(Self { theta, is_involutive, fixed_subalgebra })
    }

    pub fn identity(h: &LieAlgebra) -> Self {
        Self::new(h, QMatrix::identity(h.dim())).expect("identity is an automorphism")
    }

    /// θ(X) = T ρ(X) T⁻¹ read back through a faithful representation.
    pub fn from_conjugation(rep: &RepData, t: &QMatrix) -> Result<Self> {
        let tinv = t
            .inverse()
            .ok_or_else(|| Error::InvalidInvolution("conjugating matrix is singular".into()))?;
        let span = rep.span()?;
        let d = rep.h.dim();
        let mut theta = QMatrix::zeros(d, d);
        for (j, m) in rep.matrices.iter().enumerate() {
            let img = t.mul(m).mul(&tinv);
            let c = span
                .coords(&img)
                .ok_or_else(|| Error::InvalidInvolution(format!("conjugation moves generator {j} outside the image")))?;
            for (i, x) in c.into_iter().enumerate() {
                theta.set(i, j, x);
            }
        }
        let inv = Self::new(&rep.h, theta)?;
        if !inv.is_involutive {
            return Err(Error::InvalidInvolution("conjugation does not square to the identity on h".into()));
        }
        Ok(inv)
    }

    /// Block-diagonal θ on a direct sum h₁ ⊕ h₂.
    pub fn direct_sum(&self, o: &InvolutionData, h: &LieAlgebra) -> Result<Self> {
        Self::new(h, QMatrix::block_diag(&[&self.theta, &o.theta]))
    }

    pub fn minus_eigenspace(&self) -> Vec<Vec<Rational>> {
        let n = self.theta.rows();
        self.theta.add(&QMatrix::identity(n)).kernel()
    }

    /// Image ρ(θ(e_i)) for each basis vector.
    pub fn twisted(&self, rep: &RepData) -> Vec<QMatrix> {
        (0..rep.h.dim())
            .map(|j| {
                let col = self.theta.col(j);
                let mut m = QMatrix::zeros(rep.space_dim(), rep.space_dim());
                for (i, c) in col.iter().enumerate() {
                    if !c.is_zero() {
                        m.add_scaled(c, &rep.matrices[i]);
                    }
                }
                m
            })
            .collect()
    }
}
