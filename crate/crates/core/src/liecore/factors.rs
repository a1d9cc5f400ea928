//! Splitting 𝔳 into irreducible 𝔥-blocks and the matching split of 𝔷.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::algebra::to_sparse;
use super::pair::NilpotentPairData;
use crate::exactalg::linsolve::LinearSystem;
use crate::exactalg::{q, QMatrix, Rational};
use crate::involut::commutant::{commutant, intertwiners, DivisionType};

#[derive(Clone, Debug)]
pub struct IrreducibleFactorSplit {
    /// Basis of each block 𝔳_i as the columns of a matrix in 𝔳-coordinates.
    pub blocks: Vec<QMatrix>,
    pub block_division: Vec<DivisionType>,
    /// Basis of [𝔳_i, 𝔳_i] in 𝔷-coordinates.
    pub z_blocks: Vec<Vec<Vec<Rational>>>,
    /// Complement 𝔷_0 of Σ[𝔳_i, 𝔳_i], orthogonal for the standard form on 𝔷.
    pub z0: Vec<Vec<Rational>>,
    /// Equivalence class label of each block's 𝔥-action.
    pub classes: Vec<usize>,
    pub cross_brackets_vanish: bool,
    pub multiplicity_free: bool,
}

impl IrreducibleFactorSplit {
    /// Change of basis [W_1 | W_2 | …] of 𝔳.
    pub fn change_of_basis(&self) -> QMatrix {
        let n = self.blocks.first().map(QMatrix::rows).unwrap_or(0);
        let mut cols = Vec::new();
        for b in &self.blocks {
            for j in 0..b.cols() {
                cols.push(b.col(j));
            }
        }
        QMatrix::from_columns(n, &cols)
    }

    /// Whether the hypotheses of the factor decomposition hold.
    pub fn hypotheses_hold(&self) -> bool {
        self.cross_brackets_vanish && self.multiplicity_free
    }
}

/// Restriction of ρ to an invariant subspace with basis the columns of W.
pub fn restrict(rho: &[QMatrix], w: &QMatrix) -> Vec<QMatrix> {
    let wt = w.transpose();
    let gram_inv = wt.mul(w).inverse().expect("independent columns");
    let left = gram_inv.mul(&wt);
    rho.iter().map(|r| left.mul(&r.mul(w))).collect()
}

fn min_poly(s: &QMatrix) -> Vec<Rational> {
    let n = s.rows();
    let mut powers = vec![QMatrix::identity(n)];
    loop {
        let next = powers.last().unwrap().mul(s);
        let cols: Vec<Vec<Rational>> = powers.iter().map(|p| p.data().to_vec()).collect();
        let a = QMatrix::from_columns(n * n, &cols);
        if let Some(c) = crate::exactalg::linsolve::solve_vector(&a, next.data()) {
            // s^k = Σ c_i s^i
            let mut p: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            p.push(Rational::one());
            return p;
        }
        powers.push(next);
    }
}

fn eval_poly(p: &[Rational], s: &QMatrix) -> QMatrix {
    let n = s.rows();
    let mut acc = QMatrix::zeros(n, n);
    for c in p.iter().rev() {
        acc = acc.mul(s).add(&QMatrix::scalar(n, c.clone()));
    }
    acc
}

fn poly_eval_q(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(n / d));
        }
        d += 1;
    }
    Some(out)
}

fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let mut start = 0;
    while start < ints.len() && ints[start].is_zero() {
        start += 1;
    }
    if start > 0 {
        roots.push(Rational::zero());
    }
    let (Some(a0), Some(an)) = (ints.get(start), ints.last()) else { return roots };
    let (Some(ps), Some(qs)) = (divisors(a0), divisors(an)) else { return roots };
    for pn in &ps {
        for qd in &qs {
            for sgn in [1, -1] {
                let x = Rational::new(pn * sgn, qd.clone());
                if !roots.contains(&x) && poly_eval_q(p, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

/// Split V = ker (S−λ)^k ⊕ ker g(S) for a rational eigenvalue λ of S.
fn split_by(s: &QMatrix) -> Option<(Vec<Vec<Rational>>, Vec<Vec<Rational>>)> {
    let p = min_poly(s);
    if p.len() <= 2 {
        return None; // scalar
    }
    let lam = rational_roots(&p).into_iter().next()?;
    // divide out (x − λ) as often as possible
    let mut g = p.clone();
    let mut k = 0;
    loop {
        if !poly_eval_q(&g, &lam).is_zero() {
            break;
        }
        // synthetic division
        let deg = g.len() - 1;
        let mut quo = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for i in (0..=deg).rev() {
            let v = &g[i] + &carry * &lam;
            if i > 0 {
                quo[i - 1] = v.clone();
            }
            carry = v;
        }
        g = quo;
        k += 1;
    }
    let n = s.rows();
    let f = s.sub(&QMatrix::scalar(n, lam)).pow(k);
    let v1 = f.kernel();
    let v2 = eval_poly(&g, s).kernel();
    (!v1.is_empty() && !v2.is_empty()).then_some((v1, v2))
}

fn candidates(basis: &[QMatrix]) -> Vec<QMatrix> {
    let mut out: Vec<QMatrix> = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            out.push(basis[i].add(&basis[j].scale(&q(2))));
            out.push(basis[i].mul(&basis[j]));
        }
        out.push(basis[i].add(&basis[i].transpose()));
    }
    out
}

/// Decompose ρ on ℝⁿ into irreducible blocks (columns in ambient coordinates).
pub fn split_rep(rho: &[QMatrix], n: usize) -> Vec<(QMatrix, DivisionType)> {
    let c = commutant(rho, n);
    if c.division != DivisionType::NonDivision || n <= 1 {
        let d = if n == 1 { DivisionType::R } else { c.division };
        return vec![(QMatrix::identity(n), d)];
    }
    for s in candidates(&c.basis) {
        if let Some((v1, v2)) = split_by(&s) {
            let mut out = Vec::new();
            for v in [v1, v2] {
                let w = QMatrix::from_columns(n, &v);
                let sub = restrict(rho, &w);
                for (blk, d) in split_rep(&sub, w.cols()) {
                    out.push((w.mul(&blk), d));
                }
            }
            return out;
        }
    }
    // no rational splitting element found; report as one non-division block
    vec![(QMatrix::identity(n), DivisionType::NonDivision)]
}

pub fn decompose_factors(p: &NilpotentPairData) -> IrreducibleFactorSplit {
    let n = p.v_dim();
    let parts = split_rep(&p.rho_v, n);
    let blocks: Vec<QMatrix> = parts.iter().map(|(w, _)| w.clone()).collect();
    let block_division = parts.iter().map(|(_, d)| *d).collect();
    let zd = p.z_dim();
    let mut cross = true;
    let mut z_blocks = Vec::new();
    for (i, wi) in blocks.iter().enumerate() {
        let mut vecs = Vec::new();
        for (j, wj) in blocks.iter().enumerate() {
            for a in 0..wi.cols() {
                for b in 0..wj.cols() {
                    let br = p.bracket_v(&wi.col(a), &wj.col(b));
                    if i == j {
                        vecs.push(to_sparse(&br));
                    } else if br.iter().any(|x| !x.is_zero()) {
                        cross = false;
                    }
                }
            }
        }
        z_blocks.push(super::algebra::span_basis(zd, vecs.iter()));
    }
    let all: Vec<Vec<Rational>> = z_blocks.iter().flatten().cloned().collect();
    let z0 = if all.is_empty() {
        (0..zd).map(|k| {
            let mut e = vec![Rational::zero(); zd];
            e[k] = Rational::one();
            e
        }).collect()
    } else {
        QMatrix::from_vec(all.len(), zd, all.concat()).expect("shape").kernel()
    };
    // equivalence classes via intertwiners between blocks
    let restricted: Vec<Vec<QMatrix>> = blocks.iter().map(|w| restrict(&p.rho_v, w)).collect();
    let mut classes: Vec<usize> = Vec::with_capacity(blocks.len());
    for i in 0..blocks.len() {
        let mut cls = i;
        for j in 0..i {
            if blocks[i].cols() == blocks[j].cols()
                && !intertwiners(&restricted[i], &restricted[j], blocks[i].cols(), blocks[j].cols()).is_empty()
            {
                cls = classes[j];
                break;
            }
        }
        classes.push(cls);
    }
    let mut sorted = classes.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let multiplicity_free = sorted.len() == classes.len();
    IrreducibleFactorSplit {
        blocks,
        block_division,
        z_blocks,
        z0,
        classes,
        cross_brackets_vanish: cross,
        multiplicity_free,
    }
}

/// Each central element of 𝔥 can be written as a sum of central elements
/// acting nontrivially on at most one block.
pub fn is_principal(p: &NilpotentPairData, split: &IrreducibleFactorSplit) -> bool {
    let hd = p.h.dim();
    if hd == 0 {
        return true;
    }
    let center = p.h.center();
    if center.is_empty() {
        return true;
    }
    let rho_c: Vec<QMatrix> = center
        .iter()
        .map(|c| {
            let mut m = QMatrix::zeros(p.v_dim(), p.v_dim());
            for (i, ci) in c.iter().enumerate() {
                m.add_scaled(ci, &p.rho_v[i]);
            }
            m
        })
        .collect();
    let restricted: Vec<Vec<QMatrix>> = split.blocks.iter().map(|w| restrict(&rho_c, w)).collect();
    // dim of {c : c acts as zero on every block except possibly `keep`}
    let sub_dim = |keep: Option<usize>| -> usize {
        let mut sys = LinearSystem::new(center.len());
        for (b, mats) in restricted.iter().enumerate() {
            if Some(b) == keep {
                continue;
            }
            let sz = mats[0].data().len();
            for e in 0..sz {
                let row = crate::exactalg::linsolve::sparse_row(
                    mats.iter().enumerate().map(|(ci, m)| (ci, m.data()[e].clone())),
                );
                if !row.is_empty() {
                    sys.add_homogeneous(row);
                }
            }
        }
        center.len() - sys.rank()
    };
    let k0 = sub_dim(None);
    let total: usize = (0..split.blocks.len()).map(|b| sub_dim(Some(b)) - k0).sum::<usize>() + k0;
    total == center.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::matrix::complex_structure;
    use crate::liecore::{build_nilpotent_pair, BracketTarget, LieAlgebra};

    fn u1_pair(weight: i64, copies: usize) -> NilpotentPairData {
        // U(1) acting on (C)^copies with the given weight on each copy
        let j = complex_structure(1).scale(&q(weight));
        let blocks: Vec<&QMatrix> = std::iter::repeat_n(&j, copies).collect();
        let rho = QMatrix::block_diag(&blocks);
        let n = 2 * copies;
        let forms = (0..copies)
            .map(|c| {
                let mut m = QMatrix::zeros(n, n);
                m.set(2 * c, 2 * c + 1, q(1));
                m.set(2 * c + 1, 2 * c, q(-1));
                m
            })
            .collect();
        build_nilpotent_pair("u1", LieAlgebra::abelian(1), vec![rho], BracketTarget::Forms(forms)).unwrap()
    }

    #[test]
    fn single_block() {
        let p = u1_pair(1, 1);
        let s = decompose_factors(&p);
        assert_eq!(s.blocks.len(), 1);
        assert_eq!(s.block_division, vec![DivisionType::C]);
        assert!(s.hypotheses_hold());
        assert!(is_principal(&p, &s));
    }

    #[test]
    fn equivalent_blocks_flagged() {
        let p = u1_pair(1, 2);
        let s = decompose_factors(&p);
        assert_eq!(s.blocks.len(), 2);
        assert!(!s.multiplicity_free);
        // the same circle acts on both blocks
        assert!(!is_principal(&p, &s));
    }
}
