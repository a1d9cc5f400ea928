//! Catalog file format (`schema: 1`).
//!
//! A file holds one table. Each entry names a compact model (`construction`)
//! and the two smallest admissible parameter assignments; each real-form
//! record carries a θ recipe, the expected extendability, expected
//! signature formulas "p,q" in the parameters, and bookkeeping.

use std::path::Path;

use evalexpr::{eval_boolean_with_context, eval_int_with_context, ContextWithMutableVariables, HashMapContext, Value};
use serde::{Deserialize, Serialize};

use super::models::Params;
use super::recipes::parse_recipe;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableId {
    HeisRiem,
    Vin,
    HeisComm,
    MaxIrred,
    Indecomp,
}

impl TableId {
    pub fn as_str(self) -> &'static str {
        match self {
            TableId::HeisRiem => "heis-riem",
            TableId::Vin => "vin",
            TableId::HeisComm => "heis-comm",
            TableId::MaxIrred => "max-irred",
            TableId::Indecomp => "indecomp",
        }
    }

    pub fn parse(s: &str) -> Option<TableId> {
        [TableId::HeisRiem, TableId::Vin, TableId::HeisComm, TableId::MaxIrred, TableId::Indecomp]
            .into_iter()
            .find(|t| t.as_str() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Corollary,
    Lemma,
    EngineOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    UnverifiedByEngine,
    Refuted,
}

/// Stored corollary lists a record belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignatureList {
    Lorentz,
    Trans,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Erratum {
    /// The formula as printed in the source listing.
    pub printed: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealFormRecord {
    pub h: String,
    pub theta: String,
    pub extendable: bool,
    #[serde(default)]
    pub signatures: Vec<String>,
    #[serde(default)]
    pub lists: Vec<SignatureList>,
    pub provenance: Provenance,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<Params>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<Erratum>,
    /// Extra structural check run on the dual pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    #[serde(skip)]
    pub table: Option<TableId>,
    pub case: u32,
    pub h_r: String,
    pub v_r: String,
    pub z_r: String,
    #[serde(default)]
    pub constraints: Vec<String>,
    /// Model id for `build_model`; absent when the engine cannot build it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    pub params: Vec<Params>,
    /// Paraphrase of the table row, for audit.
    pub row: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    pub real_forms: Vec<RealFormRecord>,
}

impl CatalogEntry {
    pub fn id(&self) -> String {
        format!("{}-{}", self.table.map(TableId::as_str).unwrap_or("?"), self.case)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    pub schema: u32,
    pub table: TableId,
    pub entries: Vec<CatalogEntry>,
}

impl CatalogFile {
    /// Canonical text: two-space pretty JSON plus a trailing newline.
    pub fn to_canonical(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serializes");
        s.push('\n');
        s
    }
}

fn context(p: &Params) -> Result<HashMapContext> {
    let mut ctx = HashMapContext::new();
    for (k, v) in p {
        ctx.set_value(k.clone(), Value::Int(*v))
            .map_err(|e| Error::Schema { location: k.clone(), message: e.to_string() })?;
    }
    Ok(ctx)
}

pub fn eval_int(expr: &str, p: &Params) -> Result<i64> {
    eval_int_with_context(expr, &context(p)?)
        .map_err(|e| Error::Schema { location: expr.into(), message: e.to_string() })
}

pub fn eval_bool(expr: &str, p: &Params) -> Result<bool> {
    eval_boolean_with_context(expr, &context(p)?)
        .map_err(|e| Error::Schema { location: expr.into(), message: e.to_string() })
}

/// Evaluate a signature formula "a,b".
pub fn eval_signature(formula: &str, p: &Params) -> Result<(usize, usize)> {
    let (a, b) = formula
        .split_once(',')
        .ok_or_else(|| Error::Schema { location: formula.into(), message: "expected \"p,q\"".into() })?;
    let conv = |e: &str| -> Result<usize> {
        let v = eval_int(e.trim(), p)?;
        usize::try_from(v).map_err(|_| Error::Schema { location: formula.into(), message: format!("{e} = {v} < 0") })
    };
    Ok((conv(a)?, conv(b)?))
}

fn schema_err(location: String, message: impl Into<String>) -> Error {
    Error::Schema { location, message: message.into() }
}

/// Semantic checks beyond the JSON shape.
pub fn validate(file: &CatalogFile) -> Result<()> {
    if file.schema != SCHEMA_VERSION {
        return Err(schema_err("schema".into(), format!("unsupported schema {}", file.schema)));
    }
    for (i, e) in file.entries.iter().enumerate() {
        let loc = format!("entries[{i}] (case {})", e.case);
        if e.params.is_empty() {
            return Err(schema_err(format!("{loc}.params"), "at least one parameter assignment required"));
        }
        let check_params = |ps: &[Params], at: &str| -> Result<()> {
            for (j, p) in ps.iter().enumerate() {
                for c in &e.constraints {
                    if !eval_bool(c, p).map_err(|err| schema_err(format!("{at}[{j}]"), err.to_string()))? {
                        return Err(schema_err(format!("{at}[{j}]"), format!("violates constraint {c}")));
                    }
                }
            }
            Ok(())
        };
        check_params(&e.params, &format!("{loc}.params"))?;
        for (r, rec) in e.real_forms.iter().enumerate() {
            let rloc = format!("{loc}.real_forms[{r}]");
            let ps = rec.params.as_deref().unwrap_or(&e.params);
            check_params(ps, &format!("{rloc}.params"))?;
            for p in ps {
                parse_recipe(&rec.theta, p).map_err(|err| schema_err(format!("{rloc}.theta"), err.to_string()))?;
                for (k, f) in rec.signatures.iter().enumerate() {
                    eval_signature(f, p).map_err(|err| schema_err(format!("{rloc}.signatures[{k}]"), err.to_string()))?;
                }
                if let Some(er) = &rec.erratum {
                    eval_signature(&er.printed, p)
                        .map_err(|err| schema_err(format!("{rloc}.erratum.printed"), err.to_string()))?;
                }
            }
            if let Some(c) = &rec.check {
                if !super::checks::KNOWN_CHECKS.contains(&c.as_str()) {
                    return Err(schema_err(format!("{rloc}.check"), format!("unknown check {c}")));
                }
            }
            if !rec.lists.is_empty() && rec.signatures.is_empty() {
                return Err(schema_err(format!("{rloc}.lists"), "listed records need signatures"));
            }
        }
    }
    Ok(())
}

pub fn parse_catalog(text: &str) -> Result<CatalogFile> {
    let mut file: CatalogFile = serde_json::from_str(text).map_err(|e| Error::Schema {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    validate(&file)?;
    for e in &mut file.entries {
        e.table = Some(file.table);
    }
    Ok(file)
}

/// Load a catalog file; an empty file is an empty catalog.
pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(parse_catalog(&text)?.entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(kv: &[(&str, i64)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    const ONE: &str = r#"{
  "schema": 1,
  "table": "vin",
  "entries": [
    {
      "case": 1,
      "h_r": "SO(n)",
      "v_r": "R^n",
      "z_r": "so(n)",
      "constraints": [
        "n >= 3"
      ],
      "construction": "so-lambda2",
      "params": [
        {
          "n": 3
        }
      ],
      "row": "orthogonal group on R^n",
      "real_forms": [
        {
          "h": "SO(n)",
          "theta": "id",
          "extendable": true,
          "signatures": [
            "n+n*(n-1)/2,0"
          ],
          "lists": [],
          "provenance": "corollary",
          "status": "verified"
        }
      ]
    }
  ]
}
"#;

    #[test]
    fn round_trip_is_canonical() {
        let f = parse_catalog(ONE).unwrap();
        assert_eq!(f.entries[0].id(), "vin-1");
        assert_eq!(f.to_canonical(), ONE);
    }

    #[test]
    fn diagnostics() {
        let bad = ONE.replace("\"n\": 3", "\"n\": 2");
        match parse_catalog(&bad) {
            Err(Error::Schema { location, message }) => {
                assert!(location.contains("entries[0]"), "{location}");
                assert!(message.contains("n >= 3"));
            }
            other => panic!("{other:?}"),
        }
        let bad = ONE.replace("\"row\"", "\"rows\"");
        match parse_catalog(&bad) {
            Err(Error::Schema { location, .. }) => assert!(location.starts_with("line ")),
            other => panic!("{other:?}"),
        }
        assert!(parse_catalog(&ONE.replace("\"schema\": 1", "\"schema\": 2")).is_err());
    }

    #[test]
    fn formulas() {
        assert_eq!(eval_signature("2*n-1, 2", &p(&[("n", 3)])).unwrap(), (5, 2));
        assert_eq!(eval_signature("n*n+n,1", &p(&[("n", 2)])).unwrap(), (6, 1));
        assert!(eval_signature("n-5,1", &p(&[("n", 2)])).is_err());
        assert!(eval_bool("n % 2 == 1 && l != n", &p(&[("n", 3), ("l", 2)])).unwrap());
    }

    #[test]
    fn empty_file_is_empty_catalog() {
        let dir = std::env::temp_dir().join(format!("nilform-empty-{}", std::process::id()));
        std::fs::write(&dir, "").unwrap();
        assert!(load_catalog(&dir).unwrap().is_empty());
        std::fs::remove_file(&dir).unwrap();
    }
}
