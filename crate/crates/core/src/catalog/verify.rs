//! Re-derive catalog claims: build the compact model, extend θ, dualize and
//! enumerate invariant signatures.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::{run_check, CheckOutcome};
use super::models::{build_model, Model, Params};
use super::recipes::{parse_recipe, recipe_matrix, Recipe};
use super::schema::{eval_signature, CatalogEntry, Provenance, RealFormRecord, SignatureList, Status};
use crate::error::{Error, Result};
use crate::involut::{cartan_dual, extend_involution, InvolutionData, OracleVerdict, Verdict};
use crate::liecore::algebra::check_lie_algebra;
use crate::sigengine::total_signature;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormOutcome {
    pub h: String,
    pub theta: String,
    pub params: Params,
    pub provenance: Provenance,
    pub lists: Vec<SignatureList>,
    pub expected_extendable: bool,
    pub verdict: Option<Verdict>,
    pub oracle: Option<OracleVerdict>,
    /// Achievable (p, q) with the (a, b) ~ (b, a) convention, p ≥ q.
    pub signatures: Vec<(usize, usize)>,
    pub exhaustive: bool,
    pub expected: Vec<(usize, usize)>,
    pub missing: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_matches: Option<bool>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub entry: String,
    pub table: String,
    pub case: u32,
    pub construction: Option<String>,
    pub params: Vec<Params>,
    pub outcomes: Vec<FormOutcome>,
    pub engine_version: String,
    /// Wall time; not serialized so that reports stay byte-deterministic.
    #[serde(skip)]
    pub timing_ms: u128,
}

impl VerifyReport {
    pub fn refuted(&self) -> bool {
        self.outcomes.iter().any(|o| o.status == Status::Refuted)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    if a >= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Computed data for one θ on one model.
struct Computed {
    verdict: Verdict,
    oracle: OracleVerdict,
    signatures: BTreeSet<(usize, usize)>,
    exhaustive: bool,
    detail: Option<String>,
    check: Option<CheckOutcome>,
}

fn compute(model: &Model, recipe: &Recipe, check: Option<&str>) -> Result<Computed> {
    if *recipe == Recipe::Identity {
        let ts = total_signature(&model.pair)?;
        return Ok(Computed {
            verdict: Verdict::Extendable,
            oracle: OracleVerdict::Found,
            signatures: ts.achievable.iter().map(|&(a, b)| norm(a, b)).collect(),
            exhaustive: ts.exhaustive,
            detail: None,
            check: check.map(|c| run_check(c, &model.pair)).transpose()?,
        });
    }
    let t = recipe_matrix(recipe, &model.theta_layout)?;
    let theta = InvolutionData::from_conjugation(&model.theta_rep, &t)?;
    let w = extend_involution(&model.pair, &theta)?;
    if !w.is_extendable() {
        let detail = w.obstruction.as_ref().map(|o| format!("{:?}: {}", o.division, o.reason));
        return Ok(Computed {
            verdict: w.verdict,
            oracle: w.oracle,
            signatures: BTreeSet::new(),
            exhaustive: true,
            detail,
            check: None,
        });
    }
    let dual = cartan_dual(&model.pair, &theta, &w)?;
    let lie = check_lie_algebra(&dual.algebra);
    if !lie.is_ok() {
        return Err(Error::InvalidStructure(format!("dual algebra fails {lie:?}")));
    }
    // an extension without any invariant metric is still an extension
    let (signatures, exhaustive, detail) = match total_signature(&dual.pair) {
        Ok(ts) => (ts.achievable.iter().map(|&(a, b)| norm(a, b)).collect(), ts.exhaustive, None),
        Err(Error::NoInvariantForm(m)) => (BTreeSet::new(), true, Some(m)),
        Err(e) => return Err(e),
    };
    let check = check.map(|c| run_check(c, &dual.pair)).transpose()?;
    Ok(Computed { verdict: w.verdict, oracle: w.oracle, signatures, exhaustive, detail, check })
}

fn outcome(rec: &RealFormRecord, p: &Params, model: std::result::Result<&Model, &Error>) -> Result<FormOutcome> {
    let expected: Vec<(usize, usize)> = rec
        .signatures
        .iter()
        .map(|f| eval_signature(f, p).map(|(a, b)| norm(a, b)))
        .collect::<Result<_>>()?;
    let printed = rec.erratum.as_ref().map(|e| eval_signature(&e.printed, p).map(|(a, b)| norm(a, b))).transpose()?;
    let mut out = FormOutcome {
        h: rec.h.clone(),
        theta: rec.theta.clone(),
        params: p.clone(),
        provenance: rec.provenance,
        lists: rec.lists.clone(),
        expected_extendable: rec.extendable,
        verdict: None,
        oracle: None,
        signatures: Vec::new(),
        exhaustive: false,
        expected: expected.clone(),
        missing: Vec::new(),
        printed,
        printed_matches: None,
        status: Status::UnverifiedByEngine,
        check: None,
        detail: rec.note.clone(),
    };
    let recipe = parse_recipe(&rec.theta, p)?;
    let model = match (model, &recipe) {
        (_, Recipe::Stored) => return Ok(out),
        (Ok(m), _) => m,
        (Err(e @ (Error::Unsupported(_) | Error::SizeLimit(_))), _) => {
            out.detail = Some(e.to_string());
            return Ok(out);
        }
        (Err(e), _) => return Err(e.clone()),
    };
    match compute(model, &recipe, rec.check.as_deref()) {
        Err(e) => {
            out.status = Status::Refuted;
            out.detail = Some(format!("engine error: {e}"));
        }
        Ok(c) => {
            out.verdict = Some(c.verdict);
            out.oracle = Some(c.oracle);
            out.exhaustive = c.exhaustive;
            out.missing = expected.iter().filter(|s| !c.signatures.contains(s)).copied().collect();
            out.printed_matches = printed.map(|s| c.signatures.contains(&s));
            out.signatures = c.signatures.into_iter().collect();
            if c.detail.is_some() {
                out.detail = c.detail;
            }
            let agrees = (c.verdict == Verdict::Extendable) == rec.extendable;
            let check_ok = c.check.as_ref().is_none_or(|k| k.passed);
            out.check = c.check;
            out.status =
                if agrees && check_ok && out.missing.is_empty() { Status::Verified } else { Status::Refuted };
        }
    }
    Ok(out)
}

type ModelKey = (String, Params);

fn model_keys(entries: &[&CatalogEntry], merged: &[Option<Params>]) -> BTreeSet<ModelKey> {
    let mut keys = BTreeSet::new();
    for (e, full) in entries.iter().zip(merged) {
        let Some(c) = &e.construction else { continue };
        for rec in &e.real_forms {
            for p in instances(e, rec, full.as_ref()) {
                keys.insert((c.clone(), p));
            }
        }
    }
    keys
}

/// Assignments at which a record is evaluated. `full` is an already merged
/// override; records with their own assignments run only if it is among them.
fn instances(e: &CatalogEntry, rec: &RealFormRecord, full: Option<&Params>) -> Vec<Params> {
    match (full, &rec.params) {
        (Some(p), Some(own)) => own.iter().filter(|o| *o == p).cloned().collect(),
        (Some(p), None) => vec![p.clone()],
        (None, own) => own.clone().unwrap_or_else(|| e.params.clone()),
    }
}

/// Check that an override satisfies the entry constraints.
pub fn check_override(e: &CatalogEntry, o: &Params) -> Result<Params> {
    let mut p = e.params.first().cloned().unwrap_or_default();
    for (k, v) in o {
        if !p.contains_key(k) {
            return Err(Error::Instantiation(format!("{}: unknown parameter {k}", e.id())));
        }
        p.insert(k.clone(), *v);
    }
    for c in &e.constraints {
        if !super::schema::eval_bool(c, &p)? {
            return Err(Error::Instantiation(format!("{}: {c} fails at {p:?}", e.id())));
        }
    }
    Ok(p)
}

/// Verify a batch of entries; models are built once per (construction, params)
/// and the per-form work fans out over rayon. Output order follows the input.
pub fn verify_entries(entries: &[&CatalogEntry], overrides: Option<&Params>) -> Result<Vec<VerifyReport>> {
    let merged: Vec<Option<Params>> =
        entries.iter().map(|e| overrides.map(|o| check_override(e, o)).transpose()).collect::<Result<_>>()?;
    let keys: Vec<ModelKey> = model_keys(entries, &merged).into_iter().collect();
    let built: Vec<(ModelKey, std::result::Result<Model, Error>)> =
        keys.into_par_iter().map(|k| { let m = build_model(&k.0, &k.1); (k, m) }).collect();
    let models: BTreeMap<ModelKey, std::result::Result<Model, Error>> = built.into_iter().collect();
    let unavailable = Error::Unsupported("no engine construction".into());
    entries
        .par_iter()
        .zip(merged.par_iter())
        .map(|(e, full)| {
            let start = Instant::now();
            let tasks: Vec<(&RealFormRecord, Params)> = e
                .real_forms
                .iter()
                .flat_map(|r| instances(e, r, full.as_ref()).into_iter().map(move |p| (r, p)))
                .collect();
            let outcomes = tasks
                .par_iter()
                .map(|(rec, p)| {
                    let m = match &e.construction {
                        Some(c) => models.get(&(c.clone(), p.clone())).expect("model key").as_ref(),
                        None => Err(&unavailable),
                    };
                    outcome(rec, p, m)
                })
                .collect::<Result<Vec<_>>>()?;
            let params = match full {
                Some(p) => vec![p.clone()],
                None => e.params.clone(),
            };
            Ok(VerifyReport {
                entry: e.id(),
                table: e.table.map(|t| t.as_str().to_string()).unwrap_or_default(),
                case: e.case,
                construction: e.construction.clone(),
                params,
                outcomes,
                engine_version: ENGINE_VERSION.to_string(),
                timing_ms: start.elapsed().as_millis(),
            })
        })
        .collect()
}

pub fn verify_entry(entry: &CatalogEntry, params: Option<&Params>) -> Result<VerifyReport> {
    Ok(verify_entries(&[entry], params)?.remove(0))
}

/// Deterministic (table, case) order.
pub fn sort_reports(r: &mut [VerifyReport]) {
    r.sort_by(|a, b| (a.table.as_str(), a.case).cmp(&(b.table.as_str(), b.case)));
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterClass {
    Lorentz,
    TransLorentz,
}

impl FilterClass {
    /// Under the (a, b) ~ (b, a) convention: one side equals 1 (Lorentz) or 2.
    pub fn admits(self, (a, b): (usize, usize)) -> bool {
        let k = match self {
            FilterClass::Lorentz => 1,
            FilterClass::TransLorentz => 2,
        };
        a == k || b == k
    }

    fn list(self) -> SignatureList {
        match self {
            FilterClass::Lorentz => SignatureList::Lorentz,
            FilterClass::TransLorentz => SignatureList::Trans,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FilterItem {
    pub table: String,
    pub case: u32,
    pub entry: String,
    pub h: String,
    pub params: Params,
    pub signature: (usize, usize),
    pub status: Status,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FilterResult {
    /// Every engine-achievable signature in the class (plus stored ones for
    /// unverified records).
    pub items: Vec<FilterItem>,
    /// Stored list items found among `items`.
    pub matched: Vec<FilterItem>,
    /// Stored list items the engine does not reproduce.
    pub missing: Vec<FilterItem>,
    /// Stored list items that match only the engine value, not the printed one.
    pub errata: Vec<FilterItem>,
    /// Achievable class members not in the stored list.
    pub extra: Vec<FilterItem>,
}

impl FilterResult {
    pub fn reproduced(&self) -> bool {
        self.missing.is_empty()
    }
}

pub fn filter_signature(reports: &[VerifyReport], class: FilterClass) -> FilterResult {
    let mut items = BTreeSet::new();
    let mut stored = BTreeSet::new();
    let mut errata = BTreeSet::new();
    for r in reports {
        for o in &r.outcomes {
            let item = |s: (usize, usize)| FilterItem {
                table: r.table.clone(),
                case: r.case,
                entry: r.entry.clone(),
                h: o.h.clone(),
                params: o.params.clone(),
                signature: s,
                status: o.status,
            };
            let pool: Vec<(usize, usize)> = match o.status {
                Status::UnverifiedByEngine => o.expected.clone(),
                _ => o.signatures.clone(),
            };
            for s in pool.into_iter().filter(|s| class.admits(*s)) {
                items.insert(item(s));
            }
            if o.lists.contains(&class.list()) {
                for &s in o.expected.iter().filter(|s| class.admits(**s)) {
                    stored.insert(item(s));
                }
                if let (Some(p), Some(false)) = (o.printed, o.printed_matches) {
                    errata.insert(item(p));
                }
            }
        }
    }
    let strip = |i: &FilterItem| (i.entry.clone(), i.h.clone(), i.params.clone(), i.signature);
    let have: BTreeSet<_> = items.iter().map(strip).collect();
    let want: BTreeSet<_> = stored.iter().map(strip).collect();
    FilterResult {
        matched: stored.iter().filter(|i| have.contains(&strip(i))).cloned().collect(),
        missing: stored.iter().filter(|i| !have.contains(&strip(i))).cloned().collect(),
        errata: errata.into_iter().collect(),
        extra: items.iter().filter(|i| !want.contains(&strip(i))).cloned().collect(),
        items: items.into_iter().collect(),
    }
}
