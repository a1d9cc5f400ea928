//! Invariant bilinear forms ρ(X)ᵀB + Bρ(X) = 0.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::exactalg::linsolve::{sparse_row, LinearSystem, SparseRow};
use crate::exactalg::{QMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    Symmetric,
    Antisymmetric,
}

/// Basis of invariant symmetric (or antisymmetric) forms for the given generators.
pub fn invariant_bilinear_forms(gens: &[QMatrix], n: usize, kind: FormKind) -> Vec<QMatrix> {
    // unknowns: B_ab for a <= b (symmetric) or a < b (antisymmetric)
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    for a in 0..n {
        for b in a..n {
            if kind == FormKind::Antisymmetric && a == b {
                continue;
            }
            let k = index.len();
            index.insert((a, b), k);
        }
    }
    let nv = index.len();
    // B_ab in terms of unknowns: (var, sign)
    let entry = |a: usize, b: usize| -> Option<(usize, i64)> {
        if a == b && kind == FormKind::Antisymmetric {
            return None;
        }
        if a <= b {
            Some((index[&(a, b)], 1))
        } else {
            let s = if kind == FormKind::Symmetric { 1 } else { -1 };
            Some((index[&(b, a)], s))
        }
    };
    let eqs: Vec<Vec<SparseRow>> = gens
        .par_iter()
        .map(|r| {
            let mut out = Vec::new();
            // (ρᵀB + Bρ)_ab = Σ_c ρ_ca B_cb + Σ_c B_ac ρ_cb, for a <= b
            for a in 0..n {
                for b in a..n {
                    let mut row: Vec<(usize, Rational)> = Vec::new();
                    for c in 0..n {
                        let x = r.get(c, a);
                        if !x.is_zero() {
                            if let Some((v, s)) = entry(c, b) {
                                row.push((v, x * Rational::from_integer(s.into())));
                            }
                        }
                        let y = r.get(c, b);
                        if !y.is_zero() {
                            if let Some((v, s)) = entry(a, c) {
                                row.push((v, y * Rational::from_integer(s.into())));
                            }
                        }
                    }
                    let row = sparse_row(row);
                    if !row.is_empty() {
                        out.push(row);
                    }
                }
            }
            out
        })
        .collect();
    let mut sys = LinearSystem::new(nv);
    for g in eqs {
        for row in g {
            sys.add_homogeneous(row);
        }
        if sys.rank() == nv {
            return Vec::new();
        }
    }
    sys.nullspace()
        .into_iter()
        .map(|v| {
            let mut m = QMatrix::zeros(n, n);
            for a in 0..n {
                for b in 0..n {
                    if let Some((k, s)) = entry(a, b) {
                        m.set(a, b, &v[k] * Rational::from_integer(s.into()));
                    }
                }
            }
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::{classical_rep, Family};

    #[test]
    fn so_n_forms() {
        let r = classical_rep(Family::So, 4).unwrap();
        let s = invariant_bilinear_forms(&r.generator_matrices(), 4, FormKind::Symmetric);
        assert_eq!(s.len(), 1);
        assert!(s[0].is_symmetric());
        let a = invariant_bilinear_forms(&r.generator_matrices(), 4, FormKind::Antisymmetric);
        assert!(a.is_empty());
        for b in &s {
            for m in &r.matrices {
                assert!(m.transpose().mul(b).add(&b.mul(m)).is_zero());
            }
        }
    }
}
