//! Inertia of symmetric rational forms by exact congruence reduction.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::QMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub struct SignatureTriple {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl SignatureTriple {
    pub fn new(p: usize, q: usize, r: usize) -> Self {
        Self { p, q, r }
    }

    pub fn dim(&self) -> usize {
        self.p + self.q + self.r
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.r == 0
    }

    /// (p, q) of a nondegenerate form.
    pub fn pq(&self) -> (usize, usize) {
        (self.p, self.q)
    }
}

impl fmt::Display for SignatureTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 0 {
            write!(f, "({},{})", self.p, self.q)
        } else {
            write!(f, "({},{};{})", self.p, self.q, self.r)
        }
    }
}

/// Sylvester inertia of a symmetric matrix.
///
/// Diagonal pivots are used when available; when every remaining diagonal
/// entry vanishes but some off-diagonal b_ij does not, row/column j is added
/// to i, which makes the (i,i) entry 2·b_ij ≠ 0.
pub fn symmetric_signature(b: &QMatrix) -> Result<SignatureTriple> {
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = b.rows();
    let mut m: Vec<Vec<Rational>> = (0..n).map(|i| b.row(i).to_vec()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut p, mut q) = (0, 0);
    while !active.is_empty() {
        let diag = active.iter().copied().find(|&i| !m[i][i].is_zero());
        let piv = match diag {
            Some(i) => i,
            None => {
                let pair = active.iter().copied().find_map(|i| {
                    active.iter().copied().find(|&j| j != i && !m[i][j].is_zero()).map(|j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                // congruence by E = I + e_i e_jᵀ: row_i += row_j, col_i += col_j
                for k in 0..n {
                    let v = m[j][k].clone();
                    m[i][k] += v;
                }
                for k in 0..n {
                    let v = m[k][j].clone();
                    m[k][i] += v;
                }
                i
            }
        };
        let d = m[piv][piv].clone();
        if d > Rational::zero() {
            p += 1;
        } else {
            q += 1;
        }
        active.retain(|&k| k != piv);
        for &k in &active {
            let f = &m[k][piv] / &d;
            if f.is_zero() {
                continue;
            }
            for &l in &active {
                let sub = &f * &m[piv][l];
                if !sub.is_zero() {
                    m[k][l] -= sub;
                }
            }
            m[k][piv] = Rational::zero();
        }
        for &l in &active {
            m[piv][l] = Rational::zero();
        }
    }
    Ok(SignatureTriple { p, q, r: n - p - q })
}
