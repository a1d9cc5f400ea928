//! 𝔤₂ as the derivation algebra of the octonions.

use num_traits::Zero;

use super::RepData;
use crate::error::Result;
use crate::exactalg::algebra::AlgebraKind;
use crate::exactalg::linsolve::{sparse_row, LinearSystem};
use crate::exactalg::{q, QMatrix, Rational};

/// Solve D(xy) = D(x)y + xD(y) on basis pairs; the 14 solutions act on Im 𝕆 = ℝ⁷.
pub fn g2_derivations() -> Result<RepData> {
    let o = AlgebraKind::O;
    let var = |r: usize, c: usize| r * 8 + c;
    let mut sys = LinearSystem::new(64);
    for a in 0..8 {
        for b in 0..8 {
            let (s, c) = o.basis_product(a, b);
            // D(e_a e_b) = s·D(e_c): coefficient of e_r is s·D_rc
            // D(e_a) e_b = Σ_t D_ta e_t e_b; e_a D(e_b) = Σ_t D_tb e_a e_t
            let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); 8];
            for (r, row) in rows.iter_mut().enumerate() {
                row.push((var(r, c), q(s as i64)));
            }
            for t in 0..8 {
                let (s1, r1) = o.basis_product(t, b);
                rows[r1].push((var(t, a), q(-(s1 as i64))));
                let (s2, r2) = o.basis_product(a, t);
                rows[r2].push((var(t, b), q(-(s2 as i64))));
            }
            for row in rows {
                let row = sparse_row(row);
                if !row.is_empty() {
                    sys.add_homogeneous(row);
                }
            }
        }
    }
    let sols = sys.nullspace();
    let mut mats = Vec::with_capacity(sols.len());
    for v in sols {
        let full = QMatrix::from_vec(8, 8, v)?;
        debug_assert!((0..8).all(|r| full.get(r, 0).is_zero()));
        let idx: Vec<usize> = (1..8).collect();
        mats.push(full.submatrix(&idx, &idx));
    }
    let labels = (0..mats.len()).map(|i| format!("d{i}")).collect();
    RepData::from_matrices("g2 on Im O", labels, mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::symmetric_signature;
    use crate::liecore::check_lie_algebra;

    #[test]
    fn fourteen_dimensional_compact() {
        let g = g2_derivations().unwrap();
        assert_eq!(g.h.dim(), 14);
        assert_eq!(g.space_dim(), 7);
        assert!(check_lie_algebra(&g.h).is_ok());
        let k = symmetric_signature(&g.h.killing_form()).unwrap();
        assert_eq!((k.p, k.q, k.r), (0, 14, 0));
    }
}
