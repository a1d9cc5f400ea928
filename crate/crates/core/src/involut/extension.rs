//! Deciding whether θ on 𝔥 extends to an involutive automorphism σ of
//! 𝔤 = 𝔥 ⋉ (𝔷 ⊕ 𝔳).
//!
//! Every extension acts on 𝔳 by an intertwiner τ with ρ(θX)τ = τρ(X). For
//! irreducible 𝔳 those are S·τ₀ with S in the commutant D, and
//! (Sτ₀)² = S·S^θ·τ₀², S^θ = τ₀Sτ₀⁻¹. Two independent procedures decide
//! whether some S makes this a positive scalar: an algebraic one inside D,
//! and a brute-force search over the quadratic map s ↦ (Sτ₀)² with a
//! semidefiniteness certificate when nothing is found.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::commutant::{commutant, division_coords, intertwiners, is_invertible, rational_sqrt, CommutantData, DivisionType};
use super::involution::InvolutionData;
use crate::error::{Error, Result};
use crate::exactalg::{q, symmetric_signature, QMatrix, Rational};
use crate::liecore::algebra::MatrixSpan;
use crate::liecore::NilpotentPairData;
use crate::repcat::RepData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Extendable,
    NotExtendable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleVerdict {
    /// A rational S with (Sτ₀)² a positive scalar was found.
    Found,
    /// (Sτ₀)² = λ forces λ ≤ 0 by a semidefinite certificate.
    Infeasible,
    Undecided,
    /// Commutant too large for the search.
    Skipped,
}

impl OracleVerdict {
    pub fn agrees_with(self, v: Verdict) -> bool {
        matches!((self, v), (OracleVerdict::Found, Verdict::Extendable) | (OracleVerdict::Infeasible, Verdict::NotExtendable))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub division: DivisionType,
    /// The equation in D that would have to be solved.
    pub equation: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct ExtensionWitness {
    pub tau: QMatrix,
    pub division: DivisionType,
    pub verdict: Verdict,
    /// R = Sτ₀ with R² = λ·I; σ_v = R/√λ.
    pub sigma_v: Option<QMatrix>,
    pub sigma_v_square: Option<Rational>,
    /// Induced map on 𝔷 (only when a bracket was supplied).
    pub sigma_z: Option<QMatrix>,
    pub obstruction: Option<Obstruction>,
    pub oracle: OracleVerdict,
    /// S in commutant coordinates, as found by the decider.
    pub note: String,
}

impl ExtensionWitness {
    pub fn is_extendable(&self) -> bool {
        self.verdict == Verdict::Extendable
    }

    /// σ_v exactly, when √λ is rational.
    pub fn sigma_v_exact(&self) -> Option<QMatrix> {
        let r = self.sigma_v.as_ref()?;
        let l = rational_sqrt(self.sigma_v_square.as_ref()?)?;
        Some(r.scale(&(Rational::one() / l)))
    }

    pub fn oracle_agrees(&self) -> bool {
        self.oracle.agrees_with(self.verdict)
    }
}

/// All real-linear τ with ρ(θX)τ = τρ(X).
pub fn solve_intertwiner(rep: &RepData, theta: &InvolutionData) -> Vec<QMatrix> {
    let n = rep.space_dim();
    let tw = theta.twisted(rep);
    let a: Vec<QMatrix> = rep.generators.iter().map(|&i| rep.matrices[i].clone()).collect();
    let b: Vec<QMatrix> = rep.generators.iter().map(|&i| tw[i].clone()).collect();
    intertwiners(&a, &b, n, n)
}

fn pick_invertible(space: &[QMatrix]) -> Option<QMatrix> {
    for t in space {
        if is_invertible(t) {
            return Some(t.clone());
        }
    }
    for i in 0..space.len() {
        for j in i + 1..space.len() {
            let t = space[i].add(&space[j].scale(&q(2)));
            if is_invertible(&t) {
                return Some(t);
            }
        }
    }
    None
}

fn scalar_of(m: &QMatrix) -> Option<Rational> {
    let c = m.get(0, 0).clone();
    (*m == QMatrix::scalar(m.rows(), c.clone())).then_some(c)
}

/// Decider inside the division algebra D. Returns (verdict, S, obstruction, note).
fn decide(c: &CommutantData, tau: &QMatrix) -> Option<(Verdict, Option<QMatrix>, Option<Obstruction>, String)> {
    let tinv = tau.inverse()?;
    let t2 = tau.mul(tau);
    let t2c = division_coords(c, &t2)?;
    match c.division {
        DivisionType::R => {
            let t = t2c[0].clone();
            if t > Rational::zero() {
                Some((Verdict::Extendable, Some(c.units[0].clone()), None, format!("tau^2 = {t} > 0")))
            } else {
                Some((
                    Verdict::NotExtendable,
                    None,
                    Some(Obstruction {
                        division: DivisionType::R,
                        equation: format!("s^2 * ({t}) = lambda > 0, s in R"),
                        reason: "s^2 >= 0 and tau^2 < 0".into(),
                    }),
                    String::new(),
                ))
            }
        }
        DivisionType::C => {
            let j = &c.units[1];
            let phi_j = tau.mul(j).mul(&tinv);
            let linear = phi_j == *j;
            let a = c.norms[0].clone();
            let (t0, t1) = (t2c[0].clone(), t2c[1].clone());
            if linear {
                // S² ranges over all of ℂ
                if t1.is_zero() && t0 > Rational::zero() {
                    return Some((Verdict::Extendable, Some(c.units[0].clone()), None, "S = 1".into()));
                }
                if t1.is_zero() {
                    return Some((Verdict::Extendable, Some(j.clone()), None, format!("S = J, J^2 = -{a}")));
                }
                Some((Verdict::Extendable, None, None, "S^2 = lambda / tau^2 solvable in C".into()))
            } else if phi_j == j.scale(&q(-1)) {
                if !t1.is_zero() {
                    return None;
                }
                if t0 > Rational::zero() {
                    Some((Verdict::Extendable, Some(c.units[0].clone()), None, "S = 1 (conjugate-linear tau)".into()))
                } else {
                    Some((
                        Verdict::NotExtendable,
                        None,
                        Some(Obstruction {
                            division: DivisionType::C,
                            equation: format!("N(s) * ({t0}) = lambda > 0 with N(s) = s0^2 + {a}*s1^2"),
                            reason: "the norm of C is positive definite and tau^2 is a negative real".into(),
                        }),
                        String::new(),
                    ))
                }
            } else {
                None
            }
        }
        DivisionType::H => Some((
            Verdict::Extendable,
            None,
            None,
            "every quaternion has a square root; Skolem-Noether makes S^theta inner".into(),
        )),
        DivisionType::NonDivision => None,
    }
}

/// Quadratic map s ↦ (Σ s_a B_a τ)² in commutant coordinates.
struct QuadMap {
    m: usize,
    /// q[a][b] for a ≤ b, coordinates in the commutant basis
    q: Vec<Vec<Vec<Rational>>>,
    id_coords: Vec<Rational>,
    n: usize,
}

impl QuadMap {
    fn new(c: &CommutantData, tau: &QMatrix) -> Option<Self> {
        let m = c.basis.len();
        let span = MatrixSpan::new(c.basis.clone()).ok()?;
        let bt: Vec<QMatrix> = c.basis.iter().map(|b| b.mul(tau)).collect();
        let mut qv = vec![vec![Vec::new(); m]; m];
        for a in 0..m {
            for b in a..m {
                let mab = if a == b { bt[a].mul(&bt[a]) } else { bt[a].mul(&bt[b]).add(&bt[b].mul(&bt[a])) };
                qv[a][b] = span.coords(&mab)?;
            }
        }
        let n = tau.rows();
        let id_coords = span.coords(&QMatrix::identity(n))?;
        Some(Self { m, q: qv, id_coords, n })
    }

    fn eval(&self, s: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.m];
        for a in 0..self.m {
            for b in a..self.m {
                let w = &s[a] * &s[b];
                if w.is_zero() {
                    continue;
                }
                for (o, x) in out.iter_mut().zip(&self.q[a][b]) {
                    *o += &w * x;
                }
            }
        }
        out
    }

    /// Gram matrix of s ↦ f(Q(s)) for a functional given on commutant coordinates.
    fn gram(&self, f: impl Fn(&[Rational]) -> Rational) -> QMatrix {
        let mut g = QMatrix::zeros(self.m, self.m);
        for a in 0..self.m {
            for b in a..self.m {
                let v = f(&self.q[a][b]);
                if a == b {
                    g.set(a, a, v);
                } else {
                    let h = v / q(2);
                    g.set(a, b, h.clone());
                    g.set(b, a, h);
                }
            }
        }
        g
    }
}

fn is_nsd(g: &QMatrix) -> bool {
    symmetric_signature(g).map(|s| s.p == 0).unwrap_or(false)
}

/// Brute-force search plus certificate; independent of the division-algebra decider.
fn oracle(c: &CommutantData, tau: &QMatrix) -> (OracleVerdict, Option<(QMatrix, Rational)>) {
    let m = c.basis.len();
    if m == 0 || m > 4 {
        return (OracleVerdict::Skipped, None);
    }
    let Some(qm) = QuadMap::new(c, tau) else { return (OracleVerdict::Skipped, None) };
    // λ is the coefficient of the identity when Q(s) is scalar
    let idx = qm.id_coords.iter().position(|x| !x.is_zero()).expect("identity nonzero");
    let range: Vec<i64> = vec![0, 1, -1, 2, -2, 3, -3];
    let total = range.len().pow(m as u32);
    for code in 1..total {
        let mut s = Vec::with_capacity(m);
        let mut k = code;
        for _ in 0..m {
            s.push(q(range[k % range.len()]));
            k /= range.len();
        }
        let val = qm.eval(&s);
        let lam = &val[idx] / &qm.id_coords[idx];
        if lam <= Rational::zero() {
            continue;
        }
        if val.iter().zip(&qm.id_coords).all(|(v, i)| *v == &lam * i) {
            let mut sm = QMatrix::zeros(qm.n, qm.n);
            for (a, sa) in s.iter().enumerate() {
                sm.add_scaled(sa, &c.basis[a]);
            }
            return (OracleVerdict::Found, Some((sm, lam)));
        }
    }
    // certificate: some functional that equals λ on scalars is ≤ 0 on the whole image
    let nq = q(qm.n as i64);
    let basis_tr: Vec<Rational> = c.basis.iter().map(|b| b.trace()).collect();
    // normalized trace functional ℓ(X) = tr(X)/n on coordinates
    let ell = |v: &[Rational]| -> Rational {
        v.iter().zip(&basis_tr).map(|(x, t)| x * t).sum::<Rational>() / &nq
    };
    let g0 = qm.gram(ell);
    if is_nsd(&g0) {
        return (OracleVerdict::Infeasible, None);
    }
    // add multiples of functionals vanishing on scalars: coordinate a minus its value at 1
    let mut extra: Vec<QMatrix> = Vec::new();
    for a in 0..m {
        let id = qm.id_coords.clone();
        let ida = id[a].clone();
        extra.push(qm.gram(|v| &v[a] - &ida * ell(v)));
    }
    let mus = [-2i64, -1, 1, 2];
    for code in 0..mus.len().pow(m as u32) {
        let mut g = g0.clone();
        let mut k = code;
        for e in &extra {
            g.add_scaled(&q(mus[k % mus.len()]), e);
            k /= mus.len();
        }
        if is_nsd(&g) {
            return (OracleVerdict::Infeasible, None);
        }
    }
    (OracleVerdict::Undecided, None)
}

/// Extension decision on 𝔳 alone.
pub fn extend_on_rep(rep: &RepData, theta: &InvolutionData) -> Result<ExtensionWitness> {
    let space = solve_intertwiner(rep, theta);
    if space.is_empty() {
        return Err(Error::EmptyIntertwiner(format!("{}: theta twists v to an inequivalent module", rep.label)));
    }
    let tau = pick_invertible(&space)
        .ok_or_else(|| Error::EmptyIntertwiner(format!("{}: no invertible intertwiner", rep.label)))?;
    let c = commutant(&rep.generator_matrices(), rep.space_dim());
    let (oracle_verdict, oracle_sol) = oracle(&c, &tau);
    let decided = decide(&c, &tau);
    let (verdict, s, obstruction, note) = match decided {
        Some(d) => d,
        None => match oracle_verdict {
            OracleVerdict::Found => (Verdict::Extendable, None, None, "oracle witness".into()),
            OracleVerdict::Infeasible => (
                Verdict::NotExtendable,
                None,
                Some(Obstruction {
                    division: c.division,
                    equation: "(S tau)^2 = lambda I, lambda > 0".into(),
                    reason: "semidefinite certificate".into(),
                }),
                String::new(),
            ),
            _ => return Err(Error::Unsupported(format!("{}: extension undecided", rep.label))),
        },
    };
    let mut sigma = None;
    let mut lam = None;
    if verdict == Verdict::Extendable {
        let from_decider = s.and_then(|s| {
            let r = s.mul(&tau);
            scalar_of(&r.mul(&r)).filter(|l| *l > Rational::zero()).map(|l| (r, l))
        });
        let found = from_decider.or_else(|| oracle_sol.map(|(s, l)| (s.mul(&tau), l)));
        if let Some((r, l)) = found {
            sigma = Some(r);
            lam = Some(l);
        }
    }
    Ok(ExtensionWitness {
        tau,
        division: c.division,
        verdict,
        sigma_v: sigma,
        sigma_v_square: lam,
        sigma_z: None,
        obstruction,
        oracle: oracle_verdict,
        note,
    })
}

/// Induced σ_z from σ_v = R/√λ: row k holds the coordinates of RᵀB_kR/λ.
pub fn induced_sigma_z(p: &NilpotentPairData, r: &QMatrix, lam: &Rational) -> Result<QMatrix> {
    let zd = p.z_dim();
    let span = MatrixSpan::new(p.bracket_forms.clone())?;
    let rt = r.transpose();
    let mut sz = QMatrix::zeros(zd, zd);
    for (k, b) in p.bracket_forms.iter().enumerate() {
        let img = rt.mul(b).mul(r).scale(&(Rational::one() / lam));
        let c = span
            .coords(&img)
            .ok_or_else(|| Error::InvalidInvolution(format!("sigma_v does not preserve the bracket target (form {k})")))?;
        for (l, x) in c.into_iter().enumerate() {
            sz.set(k, l, x);
        }
    }
    Ok(sz)
}

/// Full decision on 𝔤 = 𝔥 ⋉ 𝔫; on success σ_z is built and σ verified.
pub fn extend_involution(p: &NilpotentPairData, theta: &InvolutionData) -> Result<ExtensionWitness> {
    if !theta.is_involutive {
        return Err(Error::InvalidInvolution("theta is not involutive".into()));
    }
    let rep = RepData::with_algebra(p.label.clone(), p.h.clone(), p.rho_v.clone())?;
    let mut w = extend_on_rep(&rep, theta)?;
    if let (Some(r), Some(l)) = (&w.sigma_v, &w.sigma_v_square) {
        match induced_sigma_z(p, r, l) {
            Ok(sz) => {
                w.sigma_z = Some(sz);
                if !verify_sigma(p, theta, &w) {
                    return Err(Error::InvalidInvolution(format!("{}: assembled sigma failed verification", p.label)));
                }
            }
            Err(e) => {
                w.verdict = Verdict::NotExtendable;
                w.obstruction = Some(Obstruction {
                    division: w.division,
                    equation: "sigma_z with sigma_z [u,v] = [sigma u, sigma v]".into(),
                    reason: e.to_string(),
                });
                w.sigma_v = None;
                w.sigma_v_square = None;
            }
        }
    }
    Ok(w)
}

/// σ² = id and σ[x, y] = [σx, σy] on every basis pair of 𝔤, exactly.
pub fn verify_sigma(p: &NilpotentPairData, theta: &InvolutionData, w: &ExtensionWitness) -> bool {
    let (Some(r), Some(l), Some(sz)) = (&w.sigma_v, &w.sigma_v_square, &w.sigma_z) else { return false };
    let n = r.rows();
    if r.mul(r) != QMatrix::scalar(n, l.clone()) || !sz.mul(sz).is_identity() || !theta.is_involutive {
        return false;
    }
    if !p.h.is_automorphism(&theta.theta) {
        return false;
    }
    // [h, v] and [h, z]
    let hd = p.h.dim();
    let rz_theta: Vec<QMatrix> = (0..hd)
        .map(|j| {
            let col = theta.theta.col(j);
            let mut m = QMatrix::zeros(p.z_dim(), p.z_dim());
            for (i, c) in col.iter().enumerate() {
                m.add_scaled(c, &p.rho_z[i]);
            }
            m
        })
        .collect();
    let rep = RepData { label: String::new(), h: p.h.clone(), matrices: p.rho_v.clone(), complex: None, generators: vec![] };
    let tw = theta.twisted(&rep);
    for j in 0..hd {
        if r.mul(&p.rho_v[j]) != tw[j].mul(r) {
            return false;
        }
        if sz.mul(&p.rho_z[j]) != rz_theta[j].mul(sz) {
            return false;
        }
    }
    // [v, v]: Σ_l (σ_z)_kl B_l = RᵀB_kR/λ
    let rt = r.transpose();
    for (k, bk) in p.bracket_forms.iter().enumerate() {
        let mut pulled = QMatrix::zeros(n, n);
        for (l2, b2) in p.bracket_forms.iter().enumerate() {
            pulled.add_scaled(sz.get(k, l2), b2);
        }
        if pulled != rt.mul(bk).mul(r).scale(&(Rational::one() / l)) {
            return false;
        }
    }
    true
}
