//! Incremental sparse Gaussian elimination over ℚ.
//!
//! Equations arrive one at a time and are reduced only on their leading
//! entry against the pivot stored for that column, which keeps fill-in low
//! for the structured systems produced by intertwiner equations.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::matrix::QMatrix;
use super::rational::Rational;

pub type SparseRow = Vec<(usize, Rational)>;

/// Build a sorted sparse row from arbitrary (col, coeff) pairs, merging duplicates.
pub fn sparse_row<I: IntoIterator<Item = (usize, Rational)>>(entries: I) -> SparseRow {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, v) in entries {
        if v.is_zero() {
            continue;
        }
        let e = acc.entry(c).or_insert_with(Rational::zero);
        *e += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a - f·b` on sorted sparse rows.
fn axpy(a: &SparseRow, f: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0);
        let cb = b.get(j).map(|e| e.0);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = &a[i].1 - f * &b[j].1;
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(f * &b[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    nvars: usize,
    rows: Vec<(SparseRow, Rational)>,
    pivot_of: HashMap<usize, usize>,
    inconsistent: bool,
}

/// Solution set: `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

impl LinearSystem {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, rows: Vec::new(), pivot_of: HashMap::new(), inconsistent: false }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Add Σ row · x = rhs. Returns true if the equation was independent.
    pub fn add_equation(&mut self, row: SparseRow, rhs: Rational) -> bool {
        let mut row = row;
        let mut rhs = rhs;
        row.retain(|(_, v)| !v.is_zero());
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0), "row not sorted");
        while let Some((lead, coeff)) = row.first().cloned() {
            match self.pivot_of.get(&lead) {
                Some(&p) => {
                    let (prow, prhs) = &self.rows[p];
                    // pivot rows are normalised to leading coefficient 1
                    rhs -= &coeff * prhs;
                    row = axpy(&row, &coeff, prow);
                }
                None => {
                    let inv = Rational::one() / coeff;
                    for e in row.iter_mut() {
                        e.1 *= &inv;
                    }
                    rhs *= &inv;
                    self.pivot_of.insert(lead, self.rows.len());
                    self.rows.push((row, rhs));
                    return true;
                }
            }
        }
        if !rhs.is_zero() {
            self.inconsistent = true;
        }
        false
    }

    pub fn add_homogeneous(&mut self, row: SparseRow) -> bool {
        self.add_equation(row, Rational::zero())
    }

    /// Solve by back-substitution. `None` when inconsistent.
    pub fn solve(&self) -> Option<Solution> {
        if self.inconsistent {
            return None;
        }
        // Fully reduce each pivot row so it references free columns only,
        // processing pivots from the right.
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].0[0].0));
        let mut reduced: HashMap<usize, (SparseRow, Rational)> = HashMap::new();
        for r in order {
            let (row, rhs) = &self.rows[r];
            let lead = row[0].0;
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            let mut c0 = rhs.clone();
            for (c, v) in &row[1..] {
                if let Some((prow, prhs)) = reduced.get(c) {
                    // x_c = prhs - Σ prow·x_free
                    c0 -= v * prhs;
                    for (fc, fv) in prow {
                        let e = acc.entry(*fc).or_insert_with(Rational::zero);
                        *e -= v * fv;
                    }
                } else {
                    let e = acc.entry(*c).or_insert_with(Rational::zero);
                    *e += v;
                }
            }
            let frow: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            reduced.insert(lead, (frow, c0));
        }
        let mut particular = vec![Rational::zero(); self.nvars];
        for (&lead, (_, c0)) in &reduced {
            particular[lead] = c0.clone();
        }
        let free: Vec<usize> = (0..self.nvars).filter(|c| !self.pivot_of.contains_key(c)).collect();
        let free_index: HashMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut kernel = vec![vec![Rational::zero(); self.nvars]; free.len()];
        for (k, &f) in free.iter().enumerate() {
            kernel[k][f] = Rational::one();
        }
        for (&lead, (frow, _)) in &reduced {
            for (fc, fv) in frow {
                kernel[free_index[fc]][lead] = -fv.clone();
            }
        }
        Some(Solution { particular, kernel })
    }

    /// Kernel basis of the homogeneous part.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut hom = self.clone();
        hom.inconsistent = false;
        for r in hom.rows.iter_mut() {
            r.1 = Rational::zero();
        }
        hom.solve().map(|s| s.kernel).unwrap_or_default()
    }
}

/// Solve A·x = b. Returns one solution or `None`.
pub fn solve_vector(a: &QMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    solve_linear(a, b).map(|s| s.particular)
}

/// Solve A·x = b, returning the full affine solution set.
pub fn solve_linear(a: &QMatrix, b: &[Rational]) -> Option<Solution> {
    assert_eq!(a.rows(), b.len());
    let mut sys = LinearSystem::new(a.cols());
    for i in 0..a.rows() {
        let row: SparseRow = a
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect();
        sys.add_equation(row, b[i].clone());
        if sys.is_inconsistent() {
            return None;
        }
    }
    sys.solve()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{q, qf};

    #[test]
    fn small_system() {
        // x + y + z = 6, y - z = 0, x - z = 1
        let mut s = LinearSystem::new(3);
        s.add_equation(sparse_row([(0, q(1)), (1, q(1)), (2, q(1))]), q(6));
        s.add_equation(sparse_row([(1, q(1)), (2, q(-1))]), q(0));
        s.add_equation(sparse_row([(0, q(1)), (2, q(-1))]), q(1));
        let sol = s.solve().unwrap();
        assert!(sol.kernel.is_empty());
        assert_eq!(sol.particular, vec![qf(8, 3), qf(5, 3), qf(5, 3)]);
    }

    #[test]
    fn inconsistent_and_kernel() {
        let mut s = LinearSystem::new(3);
        s.add_equation(sparse_row([(0, q(1)), (1, q(1))]), q(1));
        assert_eq!(s.solve().unwrap().kernel.len(), 2);
        s.add_equation(sparse_row([(0, q(2)), (1, q(2))]), q(3));
        assert!(s.solve().is_none());
    }

    #[test]
    fn matches_dense_kernel() {
        let a = QMatrix::from_i64(&[&[1, 2, 0, -1], &[0, 0, 1, 3], &[1, 2, 1, 2]]);
        let sol = solve_linear(&a, &[q(0), q(0), q(0)]).unwrap();
        assert_eq!(sol.kernel.len(), a.kernel().len());
        for v in &sol.kernel {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }
}
