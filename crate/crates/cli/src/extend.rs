//! Ad-hoc `extend` queries: H_r shorthand + module + θ name → model and recipe.

use nilform_core::catalog::models::{build_model, Layout, Model, Params};
use nilform_core::catalog::recipes::{parse_recipe, recipe_matrix};
use nilform_core::error::{Error, Result};
use nilform_core::exactalg::matrix::complex_structure;
use nilform_core::exactalg::q as rat;
use nilform_core::exactalg::QMatrix;
use nilform_core::involut::extension::{induced_sigma_z, verify_sigma};
use nilform_core::involut::{extend_involution, ExtensionWitness, InvolutionData};

/// Parsed query, ready to build.
#[derive(Debug, PartialEq, Eq)]
pub struct Query {
    pub construction: &'static str,
    pub params: Params,
    pub recipe: String,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Instantiation(msg.into())
}

/// "u2" → ("u", Some(2)); "un" → ("u", None).
fn split_rank<'a>(s: &'a str, prefixes: &[&'a str]) -> Option<(&'a str, Option<usize>)> {
    prefixes.iter().find_map(|p| {
        let rest = s.strip_prefix(p)?;
        match rest {
            "n" | "m" => Some((*p, None)),
            _ => rest.parse().ok().map(|k| (*p, Some(k))),
        }
    })
}

fn rank(given: Option<usize>, params: &Params, key: &str) -> Result<usize> {
    match (given, params.get(key).or_else(|| params.values().next())) {
        (Some(k), Some(&v)) if k as i64 != v => Err(usage(format!("rank {k} conflicts with --param {key}={v}"))),
        (Some(k), _) => Ok(k),
        (None, Some(&v)) if v > 0 => Ok(v as usize),
        _ => Err(usage(format!("symbolic rank needs --param {key}=<value>"))),
    }
}

/// Map a module name to (field, real dimension over the field).
fn module(v: &str, params: &Params) -> Result<(char, usize)> {
    let mut chars = v.chars();
    let f = chars.next().ok_or_else(|| usage("empty --v"))?;
    let rest: String = chars.collect();
    let d = match rest.as_str() {
        "n" | "m" => rank(None, params, &rest)?,
        r => r.parse().map_err(|_| usage(format!("bad module {v}")))?,
    };
    match f {
        'C' | 'R' | 'H' => Ok((f, d)),
        _ => Err(usage(format!("module field must be C, R or H (got {v})"))),
    }
}

pub fn parse_query(h: &str, v: &str, theta: &str, params: &Params) -> Result<Query> {
    let h = h.to_ascii_lowercase();
    // longest prefixes first
    let (head, given) = split_rank(&h, &["u1xso", "su", "sp", "so", "u"]).ok_or_else(|| usage(format!("unknown --h {h}")))?;
    let key = if head == "sp" { "m" } else { "n" };
    let k = rank(given, params, key)?;
    let (field, d) = module(v, params)?;
    let (construction, want) = match head {
        "su" => ("su", ('C', k)),
        "u" => ("u", ('C', k)),
        "sp" => ("sp", (if field == 'H' { 'H' } else { 'C' }, if field == 'H' { k } else { 2 * k })),
        "u1xso" => ("u1-so", ('C', k)),
        "so" => ("so-lambda2", ('R', k)),
        _ => unreachable!(),
    };
    if (field, d) != want {
        return Err(usage(format!("{h} acts on {}{}, not {v}", want.0, want.1)));
    }
    let real = construction == "so-lambda2";
    let recipe = match theta {
        "id" => "id".to_string(),
        "conj" if !real => "anti:I".into(),
        "quaternionic" if !real => "anti:J".into(),
        "adJ" if real => "real:J".into(),
        "adJ" => "lin:J".into(),
        s if s.contains(':') => s.into(),
        s => return Err(usage(format!("theta {s} does not apply to {h}"))),
    };
    let mut p = Params::new();
    p.insert(key.into(), k as i64);
    parse_recipe(&recipe, &p)?;
    Ok(Query { construction, params: p, recipe })
}

pub struct Answer {
    pub model: Model,
    pub witness: ExtensionWitness,
    /// c with σ_v = c·T, when such a c works.
    pub scalar: Option<&'static str>,
}

pub fn run(query: &Query) -> Result<Answer> {
    let model = build_model(query.construction, &query.params)?;
    let recipe = parse_recipe(&query.recipe, &query.params)?;
    let t = recipe_matrix(&recipe, &model.theta_layout)?;
    let theta = InvolutionData::from_conjugation(&model.theta_rep, &t)?;
    let mut witness = extend_involution(&model.pair, &theta)?;
    // Present the simplest valid σ_v: c·T with c ∈ {1, −1, i, −i} if one works.
    let mut scalar = None;
    if let (Some(_), Layout::Complex { n, .. }) = (&witness.sigma_v, &model.layout) {
        let it = complex_structure(*n).mul(&t);
        let cands = [("1", t.clone()), ("-1", t.scale(&rat(-1))), ("i", it.clone()), ("-i", it.scale(&rat(-1)))];
        for (c, r) in cands {
            let sq = r.mul(&r);
            let lam = sq.get(0, 0).clone();
            if lam <= rat(0) || sq != QMatrix::scalar(r.rows(), lam.clone()) {
                continue;
            }
            let Ok(sz) = induced_sigma_z(&model.pair, &r, &lam) else { continue };
            let mut w = witness.clone();
            w.sigma_v = Some(r);
            w.sigma_v_square = Some(lam);
            w.sigma_z = Some(sz);
            if verify_sigma(&model.pair, &theta, &w) {
                witness = w;
                scalar = Some(c);
                break;
            }
        }
    }
    Ok(Answer { model, witness, scalar })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(kv: &[(&str, i64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn shorthand() {
        let q = parse_query("u2", "C2", "quaternionic", &Params::new()).unwrap();
        assert_eq!((q.construction, q.recipe.as_str()), ("u", "anti:J"));
        let q = parse_query("un", "Cn", "conj", &p(&[("n", 2)])).unwrap();
        assert_eq!(q.params, p(&[("n", 2)]));
        let q = parse_query("u1xso4", "C4", "adJ", &Params::new()).unwrap();
        assert_eq!((q.construction, q.recipe.as_str()), ("u1-so", "lin:J"));
        let q = parse_query("so4", "R4", "adJ", &Params::new()).unwrap();
        assert_eq!(q.recipe, "real:J");
        assert!(parse_query("u2", "C3", "conj", &Params::new()).is_err());
        assert!(parse_query("un", "Cn", "conj", &Params::new()).is_err());
        assert!(parse_query("e8", "C248", "conj", &Params::new()).is_err());
    }
}
