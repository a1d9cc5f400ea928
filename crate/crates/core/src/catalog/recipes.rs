//! θ recipes: θ = Ad(T) for an explicit (possibly conjugate-linear) T on 𝔳.
//!
//! Grammar:
//!   id
//!   stored          not checkable at Lie algebra level
//!   lin:OP;OP;...   one OP per complex factor, T = ⊗ OP (pushed through S²/Λ²)
//!   anti:OP;...     same, composed with complex conjugation
//!   real:OP         T acts directly on ℝⁿ or ℍⁿ
//! with OP ∈ {I, J, Ipq(r), Spq(r), Lj}; r is an integer expression in the
//! entry parameters.

use crate::error::{Error, Result};
use crate::exactalg::algebra::{left_mult_matrix, AlgebraElement, AlgebraKind};
use crate::exactalg::matrix::conjugation;
use crate::exactalg::{CMatrix, QMatrix};
use crate::repcat::functor::square_group;

use super::models::{Layout, Params, Shape};
use super::schema::eval_int;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    I,
    /// [[0, I], [−I, 0]].
    J,
    /// diag(1^r, (−1)^{d−r}).
    Ipq(usize),
    /// diag(I_{r,s}, I_{r,s}) on ℂ^{2m}.
    Spq(usize),
    /// Left multiplication by j on ℍⁿ.
    Lj,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Identity,
    /// Claim rests on group-level facts the engine does not model.
    Stored,
    Complex { anti: bool, ops: Vec<Op> },
    Real(Op),
}

fn parse_op(s: &str, p: &Params) -> Result<Op> {
    let s = s.trim();
    let arg = |name: &str| -> Result<Option<usize>> {
        let Some(rest) = s.strip_prefix(name) else { return Ok(None) };
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Schema { location: "theta".into(), message: format!("bad op {s}") })?;
        let v = eval_int(inner, p)?;
        usize::try_from(v)
            .map(Some)
            .map_err(|_| Error::Instantiation(format!("{s}: negative argument")))
    };
    if let Some(r) = arg("Ipq")? {
        return Ok(Op::Ipq(r));
    }
    if let Some(r) = arg("Spq")? {
        return Ok(Op::Spq(r));
    }
    match s {
        "I" => Ok(Op::I),
        "J" => Ok(Op::J),
        "Lj" => Ok(Op::Lj),
        _ => Err(Error::Schema { location: "theta".into(), message: format!("unknown op {s}") }),
    }
}

pub fn parse_recipe(s: &str, p: &Params) -> Result<Recipe> {
    let s = s.trim();
    if s == "id" {
        return Ok(Recipe::Identity);
    }
    if s == "stored" {
        return Ok(Recipe::Stored);
    }
    let (head, body) = s
        .split_once(':')
        .ok_or_else(|| Error::Schema { location: "theta".into(), message: format!("bad recipe {s}") })?;
    let ops = || body.split(';').map(|o| parse_op(o, p)).collect::<Result<Vec<_>>>();
    match head {
        "lin" => Ok(Recipe::Complex { anti: false, ops: ops()? }),
        "anti" => Ok(Recipe::Complex { anti: true, ops: ops()? }),
        "real" => Ok(Recipe::Real(parse_op(body, p)?)),
        _ => Err(Error::Schema { location: "theta".into(), message: format!("bad recipe head {head}") }),
    }
}

fn op_matrix(op: &Op, d: usize) -> Result<QMatrix> {
    let bad = || Error::Instantiation(format!("{op:?} does not fit dimension {d}"));
    Ok(match *op {
        Op::I => QMatrix::identity(d),
        Op::J => {
            if !d.is_multiple_of(2) {
                return Err(bad());
            }
            let h = d / 2;
            let mut m = QMatrix::zeros(d, d);
            for a in 0..h {
                m.set(a, h + a, crate::exactalg::q(1));
                m.set(h + a, a, crate::exactalg::q(-1));
            }
            m
        }
        Op::Ipq(r) => {
            if r > d {
                return Err(bad());
            }
            QMatrix::diag_i64(&(0..d).map(|a| if a < r { 1 } else { -1 }).collect::<Vec<_>>())
        }
        Op::Spq(r) => {
            if !d.is_multiple_of(2) || r > d / 2 {
                return Err(bad());
            }
            let h = d / 2;
            QMatrix::diag_i64(&(0..d).map(|a| if a % h < r { 1 } else { -1 }).collect::<Vec<_>>())
        }
        Op::Lj => {
            if !d.is_multiple_of(4) {
                return Err(bad());
            }
            let l = left_mult_matrix(&AlgebraElement::basis(AlgebraKind::H, 2));
            let blocks: Vec<&QMatrix> = std::iter::repeat_n(&l, d / 4).collect();
            QMatrix::block_diag(&blocks)
        }
    })
}

/// Real matrix T on 𝔳 for the recipe and model layout.
pub fn recipe_matrix(r: &Recipe, layout: &Layout) -> Result<QMatrix> {
    match (r, layout) {
        (Recipe::Identity, Layout::Complex { n, .. }) => Ok(QMatrix::identity(2 * n)),
        (Recipe::Identity, Layout::Real { n }) => Ok(QMatrix::identity(*n)),
        (Recipe::Identity, Layout::Quaternionic { k, m }) => Ok(QMatrix::identity(4 * k * m)),
        (Recipe::Real(op), Layout::Real { n }) => op_matrix(op, *n),
        (Recipe::Real(op), Layout::Quaternionic { k, m: 1 }) => op_matrix(op, 4 * k),
        (Recipe::Complex { anti, ops }, Layout::Complex { factors, shape, n }) => {
            if ops.len() != factors.len() {
                return Err(Error::Instantiation(format!("{} ops for {} factors", ops.len(), factors.len())));
            }
            let mut t = CMatrix::identity(1);
            for (op, &d) in ops.iter().zip(factors) {
                t = t.kron(&CMatrix::from_real(&op_matrix(op, d)?));
            }
            let t = match shape {
                Shape::Std => t,
                Shape::S2 => square_group(&t, true),
                Shape::L2 => square_group(&t, false),
            };
            debug_assert_eq!(t.rows(), *n);
            let real = t.realify();
            Ok(if *anti { real.mul(&conjugation(*n)) } else { real })
        }
        _ => Err(Error::Instantiation(format!("recipe {r:?} does not fit layout {layout:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(kv: &[(&str, i64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn parses() {
        let ps = p(&[("n", 3)]);
        assert_eq!(parse_recipe("id", &ps).unwrap(), Recipe::Identity);
        assert_eq!(
            parse_recipe("lin:Ipq(n-1);I", &ps).unwrap(),
            Recipe::Complex { anti: false, ops: vec![Op::Ipq(2), Op::I] }
        );
        assert_eq!(parse_recipe("anti:J", &ps).unwrap(), Recipe::Complex { anti: true, ops: vec![Op::J] });
        assert!(parse_recipe("lin:K", &ps).is_err());
        assert!(parse_recipe("sideways:I", &ps).is_err());
    }

    #[test]
    fn conj_is_involutive() {
        let layout = Layout::Complex { factors: vec![2], shape: Shape::L2, n: 1 };
        let t = recipe_matrix(&parse_recipe("anti:I", &Params::new()).unwrap(), &layout).unwrap();
        assert_eq!(t, QMatrix::diag_i64(&[1, -1]));
        let layout = Layout::Complex { factors: vec![3], shape: Shape::S2, n: 6 };
        let t = recipe_matrix(&parse_recipe("lin:Ipq(2)", &Params::new()).unwrap(), &layout).unwrap();
        assert!(t.mul(&t).is_identity());
    }
}
