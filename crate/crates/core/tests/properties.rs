use nilform_core::exactalg::{
    q, solve_linear, symmetric_signature, AlgebraElement, AlgebraKind, CMatrix, GaussRational, QMatrix, Rational,
};
use nilform_core::sigengine::{tensor_signature, FormKind};
use proptest::prelude::*;

fn qm(n: usize, m: usize, v: &[i64]) -> QMatrix {
    QMatrix::from_vec(n, m, v.iter().map(|&x| q(x)).collect()).unwrap()
}

fn sym(n: usize, v: &[i64]) -> QMatrix {
    let a = qm(n, n, v);
    a.add(&a.transpose())
}

/// Unit lower × upper with a nonzero diagonal: always invertible.
fn invertible(n: usize, l: &[i64], u: &[i64], d: &[i64]) -> QMatrix {
    let mut lo = QMatrix::identity(n);
    let mut up = QMatrix::zeros(n, n);
    for i in 0..n {
        up.set(i, i, q(if d[i] == 0 { 1 } else { d[i] }));
        for j in 0..n {
            if j < i {
                lo.set(i, j, q(l[i * n + j]));
            } else if j > i {
                up.set(i, j, q(u[i * n + j]));
            }
        }
    }
    lo.mul(&up)
}

fn diag_pm(k: usize, l: usize) -> QMatrix {
    let d: Vec<i64> = std::iter::repeat_n(1, k).chain(std::iter::repeat_n(-1, l)).collect();
    QMatrix::diag_i64(&d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn signature_is_congruence_invariant(
        n in 1usize..=5,
        b in prop::collection::vec(-3i64..=3, 25),
        l in prop::collection::vec(-2i64..=2, 25),
        u in prop::collection::vec(-2i64..=2, 25),
        d in prop::collection::vec(-3i64..=3, 5),
    ) {
        let bm = sym(n, &b[..n * n]);
        let p = invertible(n, &l, &u, &d);
        let s0 = symmetric_signature(&bm).unwrap();
        let s1 = symmetric_signature(&p.transpose().mul(&bm).mul(&p)).unwrap();
        prop_assert_eq!(s0, s1);
        prop_assert_eq!(s0.p + s0.q + s0.r, n);
    }

    #[test]
    fn symmetric_tensor_rule_is_kronecker(k in 0usize..4, l in 0usize..4, r in 0usize..4, s in 0usize..4) {
        prop_assume!(k + l > 0 && r + s > 0);
        let want = tensor_signature((k, l), FormKind::Symmetric, (r, s), FormKind::Symmetric).unwrap();
        let t = symmetric_signature(&diag_pm(k, l).kron(&diag_pm(r, s))).unwrap();
        prop_assert_eq!((t.p, t.q, t.r), (want.0, want.1, 0));
    }

    #[test]
    fn linear_solve_reproduces_rhs(
        rows in 1usize..=5,
        cols in 1usize..=5,
        a in prop::collection::vec(-4i64..=4, 25),
        x in prop::collection::vec(-4i64..=4, 5),
    ) {
        let am = qm(rows, cols, &a[..rows * cols]);
        let xv: Vec<Rational> = x[..cols].iter().map(|&v| q(v)).collect();
        let b = am.mul_vec(&xv);
        let sol = solve_linear(&am, &b).expect("consistent by construction");
        prop_assert_eq!(am.mul_vec(&sol.particular), b);
        for k in &sol.kernel {
            prop_assert!(am.mul_vec(k).iter().all(|c| *c == q(0)));
        }
        prop_assert_eq!(sol.kernel.len(), cols - am.rank());
    }

    #[test]
    fn realify_is_multiplicative(a in prop::collection::vec(-3i64..=3, 18), b in prop::collection::vec(-3i64..=3, 18)) {
        let cm = |v: &[i64]| {
            let mut m = CMatrix::zeros(3, 3);
            for i in 0..9 {
                m.set(i / 3, i % 3, GaussRational::from_ints(v[2 * i], v[2 * i + 1]));
            }
            m
        };
        let (x, y) = (cm(&a), cm(&b));
        prop_assert_eq!(x.mul(&y).realify(), x.realify().mul(&y.realify()));
    }

    #[test]
    fn norms_are_multiplicative(
        kind in prop::sample::select(vec![AlgebraKind::C, AlgebraKind::H, AlgebraKind::Hsp, AlgebraKind::O]),
        a in prop::collection::vec(-3i64..=3, 8),
        b in prop::collection::vec(-3i64..=3, 8),
    ) {
        let d = kind.dim();
        let x = AlgebraElement::from_i64(kind, &a[..d]).unwrap();
        let y = AlgebraElement::from_i64(kind, &b[..d]).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
        // x·x̄ = N(x)·1
        let xx = x.mul(&x.conj()).unwrap();
        prop_assert_eq!(xx.re(), x.norm());
        prop_assert!(xx.im().is_zero());
    }
}
