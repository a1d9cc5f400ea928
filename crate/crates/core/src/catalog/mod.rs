//! Machine-readable classification tables and the verifier that re-derives
//! their claims from the engine.

pub mod checks;
pub mod models;
pub mod recipes;
pub mod schema;
pub mod verify;

pub use models::{build_model, Model, Params};
pub use schema::{load_catalog, parse_catalog, CatalogEntry, CatalogFile, Provenance, RealFormRecord, SignatureList, Status, TableId};
pub use verify::{filter_signature, sort_reports, verify_entries, verify_entry, FilterClass, FilterResult, FormOutcome, VerifyReport};
