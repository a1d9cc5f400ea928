//! Acceptance suite. Prints one PASS/FAIL line per criterion; all checks
//! are exact (rational arithmetic), so every tolerance is pinned at zero.
//!
//! Two criteria are known not to hold and are printed as FAIL:
//! C1 (the Sp(n) no-go: the engine finds an involutive extension) and
//! C6 (two printed Lorentz signatures in the vin table). The test asserts
//! that everything else passes and that those failures are exactly the
//! known ones.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write as _;
use std::path::PathBuf;
use std::process::Command;

use nilform_core::catalog::models::Layout;
use nilform_core::catalog::recipes::{parse_recipe, recipe_matrix};
use nilform_core::catalog::verify::FilterItem;
use nilform_core::catalog::{
    build_model, filter_signature, load_catalog, sort_reports, verify_entries, FilterClass, FilterResult, Params, Status,
    TableId, VerifyReport,
};
use nilform_core::exactalg::matrix::{complex_structure, conjugation};
use nilform_core::exactalg::{q, symmetric_signature, AlgebraKind, CMatrix, GaussRational, QMatrix, Rational};
use nilform_core::involut::dual::same_constants;
use nilform_core::involut::extension::{induced_sigma_z, verify_sigma};
use nilform_core::involut::{
    cartan_dual, check_radical_rigidity, double_dual, extend_involution, ExtensionWitness, InvolutionData, Verdict,
};
use nilform_core::liecore::{
    build_nilpotent_pair, check_lie_algebra, heisenberg_algebra, lie_algebra_from_matrices, BracketTarget, NilpotentPairData,
};
use nilform_core::repcat::{classical_rep, clifford_spin, g2_derivations, Family, RepData, SpinModuleType};
use nilform_core::sigengine::{tensor_signature, FormKind};

const TOL: &str = "tol=0 (exact)";

struct Outcome {
    id: u8,
    name: &'static str,
    passed: bool,
    detail: String,
}

/// Straight to the process stdout, so the lines survive libtest's output capture.
fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn report(id: u8, name: &'static str, passed: bool, detail: String) -> Outcome {
    emit(&format!("{} C{id} {name} [{TOL}] {detail}", if passed { "PASS" } else { "FAIL" }));
    Outcome { id, name, passed, detail }
}

fn catalog_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog"))
}

fn params(kv: &[(&str, i64)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Build a catalog model, apply θ = Ad(T) for the recipe and run the extension decider.
fn extend(construction: &str, p: &Params, recipe: &str) -> (NilpotentPairData, InvolutionData, QMatrix, ExtensionWitness) {
    let model = build_model(construction, p).unwrap();
    let r = parse_recipe(recipe, p).unwrap();
    let t = recipe_matrix(&r, &model.theta_layout).unwrap();
    let theta = InvolutionData::from_conjugation(&model.theta_rep, &t).unwrap();
    let w = extend_involution(&model.pair, &theta).unwrap();
    (model.pair, theta, t, w)
}

fn heis_u(n: usize) -> NilpotentPairData {
    let rep = classical_rep(Family::U, n).unwrap();
    let forms = heisenberg_algebra(n, AlgebraKind::C).unwrap().bracket_forms;
    build_nilpotent_pair("u", rep.h.clone(), rep.matrices.clone(), BracketTarget::Forms(forms)).unwrap()
}

fn rep_of(p: &NilpotentPairData) -> RepData {
    RepData::with_algebra("v", p.h.clone(), p.rho_v.clone()).unwrap()
}

// ---------- C1 ----------

fn c1() -> (Outcome, bool) {
    let mut lines = Vec::new();
    let mut ok_u_so = true;
    let mut agree = true;
    for n in [2usize, 4] {
        let p = heis_u(n);
        let mut j = CMatrix::zeros(n, n);
        for a in 0..n / 2 {
            j.set(a, n / 2 + a, GaussRational::from_ints(-1, 0));
            j.set(n / 2 + a, a, GaussRational::one());
        }
        let t = j.realify().mul(&conjugation(n));
        let th = InvolutionData::from_conjugation(&rep_of(&p), &t).unwrap();
        let w = extend_involution(&p, &th).unwrap();
        ok_u_so &= w.verdict == Verdict::NotExtendable;
        agree &= w.oracle_agrees();
        lines.push(format!("U({n}):{:?}/{:?}", w.verdict, w.oracle));
    }
    for l in [2i64, 3] {
        let (_, _, _, w) = extend("so-lambda2", &params(&[("n", 2 * l)]), "real:J");
        ok_u_so &= w.verdict == Verdict::NotExtendable;
        agree &= w.oracle_agrees();
        lines.push(format!("SO({}):{:?}/{:?}", 2 * l, w.verdict, w.oracle));
    }
    let mut ok_sp = true;
    let mut sp_honest = true;
    for n in [1i64, 2] {
        let (p, th, _, w) = extend("sp", &params(&[("m", n)]), "lin:J");
        ok_sp &= w.verdict == Verdict::NotExtendable;
        agree &= w.oracle_agrees();
        // when the engine says Extendable, the witness must actually verify
        sp_honest &= w.verdict == Verdict::NotExtendable || verify_sigma(&p, &th, &w);
        lines.push(format!("Sp({n}):{:?}/{:?}", w.verdict, w.oracle));
    }
    let passed = ok_u_so && ok_sp && agree;
    let detail = format!("{}; decider/oracle agree: {agree}", lines.join(" "));
    // Known: the Sp(n) no-go is not reproduced; U and SO parts must hold.
    (report(1, "no-go suite", passed, detail), ok_u_so && agree && !ok_sp && sp_honest)
}

// ---------- C2 ----------

/// σ = θ ⊕ σ_z ⊕ σ_v on 𝔤_r = 𝔥 + 𝔷 + 𝔳; σ² = id and σ[x,y] = [σx,σy] on every basis pair.
fn sigma_checks(p: &NilpotentPairData, theta: &QMatrix, sz: &QMatrix, sv: &QMatrix) -> bool {
    let g = p.full_algebra();
    let s = QMatrix::block_diag(&[theta, sz, sv]);
    if !s.mul(&s).is_identity() {
        return false;
    }
    let d = g.dim();
    let e = |i: usize| (0..d).map(|k| if k == i { q(1) } else { q(0) }).collect::<Vec<Rational>>();
    for i in 0..d {
        for j in 0..d {
            let lhs = s.mul_vec(&g.bracket(&e(i), &e(j)));
            let rhs = g.bracket(&s.col(i), &s.col(j));
            if lhs != rhs {
                return false;
            }
        }
    }
    check_lie_algebra(&g).is_ok()
}

fn c2() -> Outcome {
    let mut ok = true;
    let mut lines = Vec::new();
    for n in [2usize, 3] {
        let p = heis_u(n);
        let th = InvolutionData::from_conjugation(&rep_of(&p), &conjugation(n)).unwrap();
        let w = extend_involution(&p, &th).unwrap();
        let good = w.is_extendable()
            && verify_sigma(&p, &th, &w)
            && sigma_checks(&p, &th.theta, w.sigma_z.as_ref().unwrap(), &w.sigma_v_exact().unwrap());
        ok &= good;
        lines.push(format!("heis U({n}) conj: {good}"));
    }
    // U(1)·SO(4) on ℂ⁴ with θ = Ad(J): σ_v = J squares to −1, i·J works.
    let (p, th, t, w) = extend("u1-so", &params(&[("n", 4)]), "lin:J");
    let n = match build_model("u1-so", &params(&[("n", 4)])).unwrap().layout {
        Layout::Complex { n, .. } => n,
        _ => unreachable!("u1-so is complex"),
    };
    let plain_fails = !t.mul(&t).is_identity();
    let cj = complex_structure(n).mul(&t);
    let sz = induced_sigma_z(&p, &cj, &q(1)).unwrap();
    let rescued = cj.mul(&cj).is_identity() && sigma_checks(&p, &th.theta, &sz, &cj);
    let good = w.is_extendable() && plain_fails && rescued;
    ok &= good;
    lines.push(format!("U(1)SO(4) Ad(J): J^2=-1 {plain_fails}, iJ verified {rescued}"));
    report(2, "positive extension suite", ok, lines.join("; "))
}

// ---------- C3 ----------

fn c3() -> Outcome {
    let p = heis_u(2);
    let th = InvolutionData::from_conjugation(&rep_of(&p), &conjugation(2)).unwrap();
    let w = extend_involution(&p, &th).unwrap();
    let d = cartan_dual(&p, &th, &w).unwrap();
    let m = |e: [i64; 4]| QMatrix::from_i64(&[&e[..2], &e[2..]]);
    let gl = [m([0, 1, -1, 0]), m([0, -1, -1, 0]), m([-1, 0, 0, 0]), m([0, 0, 0, -1])];
    let (gl2, _) = lie_algebra_from_matrices((0..4).map(|i| format!("g{i}")).collect(), &gl).unwrap();
    let levi = same_constants(&d.pair.h, &gl2);
    let mut double = true;
    for n in 1..=3 {
        let p = heis_u(n);
        let th = InvolutionData::from_conjugation(&rep_of(&p), &conjugation(n)).unwrap();
        let w = extend_involution(&p, &th).unwrap();
        double &= same_constants(&double_dual(&cartan_dual(&p, &th, &w).unwrap()).unwrap(), &p.full_algebra());
    }
    // φ(z, v) = (−z, i·v) between the duals for the sign pairs (σ_z, ±σ_v)
    let sv = w.sigma_v_exact().unwrap();
    let sz = w.sigma_z.clone().unwrap();
    let blocks = vec![((0..4).collect(), vec![0])];
    let rigid = check_radical_rigidity(&p, &th.theta, (&sz, &sv), (&sz, &sv.neg()), &blocks)
        .map(|phi| phi.determinant().unwrap() != q(0))
        .unwrap_or(false);
    report(
        3,
        "duality suite",
        levi && double && rigid,
        format!("Levi = gl(2;R): {levi}; double dual exact (n=1..3): {double}; radical isomorphism: {rigid}"),
    )
}

// ---------- C4 ----------

fn sym_diag(k: usize, l: usize) -> QMatrix {
    let d: Vec<i64> = std::iter::repeat_n(1, k).chain(std::iter::repeat_n(-1, l)).collect();
    QMatrix::diag_i64(&d)
}

fn kron_matches() -> (bool, usize) {
    let mut count = 0;
    let mut ok = true;
    let pairs: Vec<(usize, usize)> = (1..=6).flat_map(|d| (0..=d).map(move |k| (k, d - k))).collect();
    for &a in &pairs {
        for &b in &pairs {
            let want = tensor_signature(a, FormKind::Symmetric, b, FormKind::Symmetric).unwrap();
            let t = symmetric_signature(&sym_diag(a.0, a.1).kron(&sym_diag(b.0, b.1))).unwrap();
            ok &= t.r == 0 && (t.p, t.q) == want;
            count += 1;
        }
    }
    (ok, count)
}

fn omega() -> QMatrix {
    QMatrix::from_i64(&[&[0, 1], &[-1, 0]])
}

fn sl2() -> Vec<QMatrix> {
    vec![QMatrix::from_i64(&[&[1, 0], &[0, -1]]), QMatrix::from_i64(&[&[0, 1], &[0, 0]]), QMatrix::from_i64(&[&[0, 0], &[1, 0]])]
}

fn sign(j: &[i64], a: usize) -> i64 {
    j[a]
}

/// u(r, s) on ℂ^{r+s}: X*·J + J·X = 0 with J = diag(1^r, (−1)^s).
fn u_rs(j: &[i64]) -> Vec<CMatrix> {
    let n = j.len();
    let mut out = Vec::new();
    for a in 0..n {
        let mut x = CMatrix::zeros(n, n);
        x.set(a, a, GaussRational::i());
        out.push(x);
        for b in a + 1..n {
            let e = sign(j, a) * sign(j, b);
            let mut x = CMatrix::zeros(n, n);
            x.set(a, b, GaussRational::one());
            x.set(b, a, GaussRational::from_ints(-e, 0));
            out.push(x);
            let mut y = CMatrix::zeros(n, n);
            y.set(a, b, GaussRational::i());
            y.set(b, a, GaussRational::from_ints(0, e));
            out.push(y);
        }
    }
    out
}

/// so(r, s): real X with Xᵀ·J + J·X = 0.
fn so_rs(j: &[i64]) -> Vec<CMatrix> {
    let n = j.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut x = CMatrix::zeros(n, n);
            x.set(a, b, GaussRational::one());
            x.set(b, a, GaussRational::from_ints(-sign(j, a) * sign(j, b), 0));
            out.push(x);
        }
    }
    out
}

/// sp(r, s) = u(2r, 2s) ∩ sp(2n; ℂ) on ℂ^{2n}, with J' = diag(J, J) and Ω' = [[0, I], [−I, 0]].
fn sp_rs(j: &[i64]) -> Vec<CMatrix> {
    let n = j.len();
    let jj: Vec<i64> = j.iter().chain(j).copied().collect();
    let basis = u_rs(&jj);
    let om = CMatrix::from_real(&omega().kron(&QMatrix::identity(n)));
    let cols: Vec<Vec<Rational>> = basis
        .iter()
        .map(|x| x.transpose().mul(&om).add(&om.mul(x)).realify().data().to_vec())
        .collect();
    let a = QMatrix::from_columns(cols[0].len(), &cols);
    a.kernel()
        .iter()
        .map(|c| {
            let mut s = CMatrix::zeros(2 * n, 2 * n);
            for (k, x) in c.iter().zip(&basis) {
                s = s.add(&x.scale(&GaussRational::real(k.clone())));
            }
            s
        })
        .collect()
}

/// Realified Im⟨u, v⟩ for ⟨u, v⟩ = Σ J_a ū_a v_a.
fn im_hermitian(j: &[i64]) -> QMatrix {
    QMatrix::diag_i64(j).kron(&omega())
}

/// Realified Re ω for the complex-bilinear symplectic form on ℂ²ᵐ.
fn re_omega(m: usize) -> QMatrix {
    omega().kron(&QMatrix::identity(m)).kron(&QMatrix::diag_i64(&[1, -1]))
}

/// Form is symmetric, nondegenerate, invariant under every generator; returns its signature.
fn invariant_signature(gens: &[QMatrix], f: &QMatrix) -> Option<(usize, usize)> {
    if !f.is_symmetric() || !gens.iter().all(|x| x.transpose().mul(f).add(&f.mul(x)).is_zero()) {
        return None;
    }
    let t = symmetric_signature(f).ok()?;
    (t.r == 0).then_some((t.p, t.q))
}

/// Sp(m;ℝ) (through ℂ²ᵐ) times a group G ⊂ U(r,s) on ℂ²ᵐ ⊗_ℝ ℂ^{r+s}, with b' ⊗ b''.
fn sp_times(m: usize, j: &[i64], h: &[CMatrix]) -> Option<(usize, usize)> {
    let n = j.len();
    let left: Vec<QMatrix> = sl2().iter().map(|x| CMatrix::from_real(&x.kron(&QMatrix::identity(m))).realify()).collect();
    let (dl, dr) = (4 * m, 2 * n);
    let mut gens: Vec<QMatrix> = left.iter().map(|x| x.kron(&QMatrix::identity(dr))).collect();
    gens.extend(h.iter().map(|y| QMatrix::identity(dl).kron(&y.realify())));
    invariant_signature(&gens, &re_omega(m).kron(&im_hermitian(j)))
}

fn symplectic_products() -> (bool, Vec<String>) {
    let m = 1usize;
    let mut ok = true;
    let mut lines = Vec::new();
    let mut claim = |name: String, got: Option<(usize, usize)>, want: (usize, usize)| {
        ok &= got == Some(want);
        lines.push(format!("{name} {got:?}~{want:?}"));
    };
    // (i) Sp(m;ℝ)·Sp(n;ℝ) on ℂ²ᵐ ⊗_ℂ ℂ²ⁿ with Re(ω ⊗ ω); n = 1.
    {
        let n = 1usize;
        let a: Vec<QMatrix> = sl2().iter().map(|x| x.kron(&QMatrix::identity(m))).collect();
        let b: Vec<QMatrix> = sl2().iter().map(|x| x.kron(&QMatrix::identity(n))).collect();
        let mut gens: Vec<QMatrix> = a.iter().map(|x| CMatrix::from_real(&x.kron(&QMatrix::identity(2 * n))).realify()).collect();
        gens.extend(b.iter().map(|y| CMatrix::from_real(&QMatrix::identity(2 * m).kron(y)).realify()));
        let w = omega().kron(&QMatrix::identity(m)).kron(&omega().kron(&QMatrix::identity(n)));
        claim("(i)".into(), invariant_signature(&gens, &w.kron(&QMatrix::diag_i64(&[1, -1]))), (4 * m * n, 4 * m * n));
    }
    // (ii) Sp(m;ℝ) diagonally on ℝ²ᵐ ⊕ ℝ²ᵐ, pairing the copies through ω.
    {
        let gens: Vec<QMatrix> = sl2().iter().map(|x| QMatrix::identity(2).kron(&x.kron(&QMatrix::identity(m)))).collect();
        let f = omega().kron(&omega().kron(&QMatrix::identity(m)));
        claim("(ii)".into(), invariant_signature(&gens, &f), (2 * m, 2 * m));
    }
    for j in [vec![1i64], vec![1, -1]] {
        let (r, s) = (j.iter().filter(|&&x| x > 0).count(), j.iter().filter(|&&x| x < 0).count());
        let n = r + s;
        // (iii) U(r,s), (iv) SO(r,s) ⊂ U(r,s), (v) Sp(r,s) ⊂ U(2r,2s).
        claim(format!("(iii)U({r},{s})"), sp_times(m, &j, &u_rs(&j)), (4 * m * n, 4 * m * n));
        claim(format!("(iv)SO({r},{s})"), sp_times(m, &j, &so_rs(&j)), (4 * m * n, 4 * m * n));
        let sp = sp_rs(&j);
        let jj: Vec<i64> = j.iter().chain(&j).copied().collect();
        let dim_ok = sp.len() == n * (2 * n + 1);
        let got = sp_times(m, &jj, &sp).filter(|_| dim_ok);
        claim(format!("(v)Sp({r},{s})[dim {}]", sp.len()), got, (8 * m * n, 8 * m * n));
    }
    (ok, lines)
}

fn c4() -> Outcome {
    let (kron_ok, count) = kron_matches();
    let (product_ok, lines) = symplectic_products();
    report(
        4,
        "signature suite",
        kron_ok && product_ok,
        format!("tensor_signature = Kronecker on {count} pairs: {kron_ok}; symplectic-product embeddings: {}", lines.join(" ")),
    )
}

// ---------- C5 ----------

fn c5() -> Outcome {
    use SpinModuleType::*;
    let rows: [((usize, usize), SpinModuleType); 7] = [
        ((6, 1), QuaternionicSkew { m: 4, p: 8, q: 8 }),
        ((5, 2), QuaternionicSkew { m: 4, p: 8, q: 8 }),
        ((4, 3), Orthogonal { p: 4, q: 4 }),
        ((8, 1), Orthogonal { p: 8, q: 8 }),
        ((7, 2), QuaternionicSkew { m: 8, p: 16, q: 16 }),
        ((6, 3), QuaternionicSkew { m: 8, p: 16, q: 16 }),
        ((5, 4), Orthogonal { p: 8, q: 8 }),
    ];
    let mut ok = true;
    let mut lines = Vec::new();
    for ((k, l), want) in rows {
        let c = clifford_spin(k, l).unwrap();
        let good = c.module_type == want;
        ok &= good;
        lines.push(format!("Spin({k},{l})->{}", c.module_type.group_label()));
    }
    report(5, "spin suite", ok, lines.join(" "))
}

// ---------- C6 ----------

fn verify_table(t: TableId) -> Vec<VerifyReport> {
    let mut es = load_catalog(&catalog_dir().join(format!("{}.json", t.as_str()))).unwrap();
    for e in &mut es {
        e.table = Some(t);
    }
    let refs: Vec<_> = es.iter().collect();
    let mut r = verify_entries(&refs, None).unwrap();
    sort_reports(&mut r);
    r
}

fn cases(items: &[FilterItem]) -> BTreeSet<u32> {
    items.iter().map(|i| i.case).collect()
}

/// Stored items for the center-dependent E₆ / Spin*(10) records must surface as unverified, never verified.
fn stored_only_honest(f: &FilterResult) -> bool {
    f.items
        .iter()
        .chain(&f.matched)
        .filter(|i| i.h.contains("E6") || i.h.contains("Spin*(10)"))
        .all(|i| i.status == Status::UnverifiedByEngine)
}

/// Each matched symbolic record is exercised at ≥ 2 parameter values.
fn two_params_each(f: &FilterResult) -> bool {
    let mut by: BTreeMap<(String, String), BTreeSet<String>> = BTreeMap::new();
    for i in &f.matched {
        by.entry((i.entry.clone(), i.h.clone())).or_default().insert(format!("{:?}", i.params));
    }
    let symbolic = |h: &str| h.split(|c: char| !c.is_alphanumeric()).any(|t| t == "n" || t == "m");
    by.iter().all(|((_, h), ps)| ps.len() >= 2 || !symbolic(h))
}

fn c6() -> (Outcome, bool) {
    let heis = verify_table(TableId::HeisRiem);
    let vin = verify_table(TableId::Vin);
    let ht = filter_signature(&heis, FilterClass::TransLorentz);
    let vl = filter_signature(&vin, FilterClass::Lorentz);
    let vt = filter_signature(&vin, FilterClass::TransLorentz);

    let heis_cases: BTreeSet<u32> = [1, 2, 4, 5, 6, 7, 8].into();
    let heis_ok = ht.missing.is_empty() && ht.errata.is_empty() && cases(&ht.matched) == heis_cases && two_params_each(&ht);
    let vl_cases = &cases(&vl.matched) | &cases(&vl.errata);
    let vin_lorentz: BTreeSet<u32> = [4, 5, 7, 10, 11, 12, 13, 14, 15, 16, 19, 21, 23].into();
    let vin_trans: BTreeSet<u32> = [1, 4, 7, 10, 11].into();
    let vl_ok = vl.missing.is_empty() && vl.errata.is_empty() && vl_cases == vin_lorentz;
    let vt_ok = vt.missing.is_empty() && vt.errata.is_empty() && cases(&vt.matched) == vin_trans;
    let honest = stored_only_honest(&ht) && stored_only_honest(&vl) && stored_only_honest(&vt);
    let unverified = vl.matched.iter().chain(&vt.matched).filter(|i| i.status == Status::UnverifiedByEngine).count();
    let errata: Vec<String> =
        vl.errata.iter().map(|i| format!("{}{:?}->({},{})", i.entry, i.params, i.signature.0, i.signature.1)).collect();
    let detail = format!(
        "heis trans-Lorentz: cases {:?} matched {} missing {} ok {heis_ok}; vin Lorentz: {} cases, matched {} missing {} printed-not-reproduced [{}] ok {vl_ok}; vin trans-Lorentz: cases {:?} matched {} missing {} ok {vt_ok}; stored-only items unverified_by_engine: {unverified}, honest {honest}",
        cases(&ht.matched),
        ht.matched.len(),
        ht.missing.len(),
        vl_cases.len(),
        vl.matched.len(),
        vl.missing.len(),
        errata.join(" "),
        cases(&vt.matched),
        vt.matched.len(),
        vt.missing.len(),
    );
    let passed = heis_ok && vl_ok && vt_ok && honest;
    // Known: the vin Lorentz list fails only through printed values for vin cases 5 and 21.
    let known = heis_ok
        && vt_ok
        && honest
        && vl.missing.is_empty()
        && vl_cases == vin_lorentz
        && cases(&vl.errata) == [5, 21].into();
    (report(6, "Lorentz list reproduction", passed, detail), known)
}

// ---------- C7 ----------

fn c7() -> Outcome {
    let mut built = 0;
    let mut bad = Vec::new();
    for t in [TableId::HeisRiem, TableId::Vin, TableId::Indecomp] {
        for e in load_catalog(&catalog_dir().join(format!("{}.json", t.as_str()))).unwrap() {
            let Some(c) = &e.construction else { continue };
            for p in &e.params {
                match build_model(c, p) {
                    Ok(m) => {
                        built += 1;
                        let pc = m.pair.check();
                        let full = check_lie_algebra(&m.pair.full_algebra());
                        if !pc.is_ok() || !full.is_ok() || !m.pair.nilradical().is_two_step_nilpotent() {
                            bad.push(format!("{}{p:?}: {pc:?} {full}", e.id()));
                        }
                    }
                    Err(err) => bad.push(format!("{}{p:?}: {err}", e.id())),
                }
            }
        }
    }
    let g2 = g2_derivations().unwrap().h.dim();
    let oct_center = heisenberg_algebra(1, AlgebraKind::O).unwrap().nilradical().center().len();
    let passed = bad.is_empty() && g2 == 14 && oct_center == 7;
    report(
        7,
        "structural suite",
        passed,
        format!("{built} models pass Jacobi/2-step/centrality/equivariance, failures {bad:?}; dim g2 = {g2}; center of h_(1;O) = {oct_center}"),
    )
}

// ---------- C8 ----------

fn c8() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_nilform"))
            .args(["verify", "--table", "vin", "--jobs", "8"])
            .env("NILFORM_CATALOG_DIR", catalog_dir())
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    let passed = a.stdout == b.stdout && !a.stdout.is_empty() && a.status.success();
    report(
        8,
        "determinism",
        passed,
        format!("two runs of verify --table vin --jobs 8: {} bytes each, identical {}", a.stdout.len(), a.stdout == b.stdout),
    )
}

#[test]
fn acceptance() {
    let (o1, known1) = c1();
    let (o6, known6) = c6();
    let all = [o1, c2(), c3(), c4(), c5(), o6, c7(), c8()];
    let passed = all.iter().filter(|o| o.passed).count();
    emit(&format!("acceptance: {passed}/{} criteria pass", all.len()));
    for o in &all {
        match o.id {
            1 => assert!(known1, "C1 deviates from the known Sp(n) failure: {}", o.detail),
            6 => assert!(known6, "C6 deviates from the known vin 5/21 errata: {}", o.detail),
            _ => assert!(o.passed, "C{} {} failed: {}", o.id, o.name, o.detail),
        }
    }
}
