mod extend;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilform_core::catalog::{
    filter_signature, load_catalog, sort_reports, verify_entries, CatalogEntry, FilterClass, FilterResult, Params, Status,
    TableId, VerifyReport,
};
use nilform_core::error::Error;
use nilform_core::involut::Verdict;

#[derive(Parser, Debug)]
#[command(name = "nilform", version, about = "Exact real-form extension and signature engine")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Catalog directory (default: $NILFORM_CATALOG_DIR, else the bundled catalog).
    #[arg(long, global = true)]
    catalog_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Human-readable table instead of JSON lines.
    #[arg(long, global = true)]
    pretty: bool,
    /// Timing and progress on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Re-derive every claim of a catalog table.
    Verify {
        #[arg(long)]
        table: String,
        #[arg(long)]
        case: Option<u32>,
        /// Parameter override k=v (repeatable).
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, i64)>,
    },
    /// Ask whether θ on H_r extends to the nilpotent pair.
    Extend {
        /// su<n>, u<n>, sp<m>, so<n>, u1xso<n>; "n" for symbolic rank.
        #[arg(long)]
        h: String,
        /// C<n>, R<n>, H<m>.
        #[arg(long)]
        v: String,
        /// conj, quaternionic, adJ, id, or a raw recipe such as lin:Ipq(1).
        #[arg(long)]
        theta: String,
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, i64)>,
    },
    /// List Lorentz or trans-Lorentz signatures and diff them against the stored lists.
    Lorentz {
        #[arg(long)]
        table: String,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    Lorentz,
    Trans,
}

fn parse_kv(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected k=v, got {s}"))?;
    let v = v.trim().parse().map_err(|_| format!("{v} is not an integer"))?;
    Ok((k.trim().to_string(), v))
}

/// Usage-level failure: exit 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn catalog_dir(flag: &Option<PathBuf>) -> PathBuf {
    if let Some(d) = flag {
        return d.clone();
    }
    if let Some(d) = std::env::var_os("NILFORM_CATALOG_DIR") {
        return d.into();
    }
    let bundled = PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog"));
    if bundled.is_dir() {
        bundled
    } else {
        PathBuf::from("catalog")
    }
}

fn resolve_table(s: &str) -> Result<TableId, Usage> {
    match s {
        "heis" => Ok(TableId::HeisRiem),
        _ => TableId::parse(s).ok_or_else(|| Usage(format!("unknown table {s} (heis, heis-riem, vin, indecomp)"))),
    }
}

fn load(cli: &Cli, table: &str) -> Result<Vec<CatalogEntry>, Usage> {
    let t = resolve_table(table)?;
    let path = catalog_dir(&cli.catalog_dir).join(format!("{}.json", t.as_str()));
    if !path.exists() {
        return Err(Usage(format!("no catalog file for table {} at {}", t.as_str(), path.display())));
    }
    let mut entries = load_catalog(&path)?;
    for e in &mut entries {
        e.table = Some(t);
    }
    Ok(entries)
}

fn run_verify(cli: &Cli, entries: &[CatalogEntry], params: &[(String, i64)]) -> Result<Vec<VerifyReport>, Usage> {
    let refs: Vec<&CatalogEntry> = entries.iter().collect();
    let overrides: Option<Params> = (!params.is_empty()).then(|| params.iter().cloned().collect());
    let mut reports = verify_entries(&refs, overrides.as_ref())?;
    sort_reports(&mut reports);
    if cli.verbose {
        for r in &reports {
            eprintln!("{}: {} ms", r.entry, r.timing_ms);
        }
    }
    Ok(reports)
}

fn sig(s: &[(usize, usize)]) -> String {
    s.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ")
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::UnverifiedByEngine => "unverified_by_engine",
        Status::Refuted => "REFUTED",
    }
}

fn render_reports(reports: &[VerifyReport], pretty: bool) -> String {
    let mut out = String::new();
    if !pretty {
        for r in reports {
            out.push_str(&r.to_json_line());
            out.push('\n');
        }
        return out;
    }
    let _ = writeln!(out, "{:<14} {:<26} {:<18} {:<14} {:<22} signatures", "entry", "H", "params", "verdict", "status");
    for r in reports {
        for o in &r.outcomes {
            let params = o.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",");
            let verdict = match o.verdict {
                Some(Verdict::Extendable) => "extendable",
                Some(Verdict::NotExtendable) => "not-extendable",
                None => "-",
            };
            let _ = writeln!(
                out,
                "{:<14} {:<26} {:<18} {:<14} {:<22} {}",
                r.entry,
                o.h,
                params,
                verdict,
                status_str(o.status),
                sig(&o.signatures)
            );
            if let Some(c) = &o.check {
                let _ = writeln!(out, "{:<14} check {}: {} ({})", "", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail);
            }
            if o.status == Status::Refuted {
                let _ = writeln!(out, "{:<14} expected {} missing {} {}", "", sig(&o.expected), sig(&o.missing), o.detail.clone().unwrap_or_default());
            }
        }
    }
    out
}

fn render_filter(f: &FilterResult, pretty: bool) -> String {
    let mut out = String::new();
    if !pretty {
        out.push_str(&serde_json::to_string(f).expect("filter serializes"));
        out.push('\n');
        return out;
    }
    let line = |out: &mut String, tag: &str, i: &nilform_core::catalog::verify::FilterItem| {
        let params = i.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "{tag:<8} {:<14} {:<26} {:<10} ({},{}) {}", i.entry, i.h, params, i.signature.0, i.signature.1, status_str(i.status));
    };
    for i in &f.matched {
        line(&mut out, "match", i);
    }
    for i in &f.missing {
        line(&mut out, "MISSING", i);
    }
    for i in &f.errata {
        line(&mut out, "printed", i);
    }
    for i in &f.extra {
        line(&mut out, "extra", i);
    }
    let _ = writeln!(
        out,
        "{} matched, {} missing, {} printed values not reproduced, {} extra",
        f.matched.len(),
        f.missing.len(),
        f.errata.len(),
        f.extra.len()
    );
    out
}

fn emit(cli: &Cli, text: &str) -> Result<(), Usage> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes()).map_err(|e| Usage(e.to_string()))
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Usage> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| Usage(e.to_string()))?;
    }
    match &cli.cmd {
        Cmd::Verify { table, case, params } => {
            let mut entries = load(cli, table)?;
            if let Some(c) = case {
                entries.retain(|e| e.case == *c);
                if entries.is_empty() {
                    return Err(Usage(format!("table {table} has no case {c}")));
                }
            }
            let reports = run_verify(cli, &entries, params)?;
            emit(cli, &render_reports(&reports, cli.pretty))?;
            Ok(if reports.iter().any(|r| r.refuted()) { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Cmd::Lorentz { table, class } => {
            let entries = load(cli, table)?;
            let reports = run_verify(cli, &entries, &[])?;
            let class = match class {
                ClassArg::Lorentz => FilterClass::Lorentz,
                ClassArg::Trans => FilterClass::TransLorentz,
            };
            emit(cli, &render_filter(&filter_signature(&reports, class), cli.pretty))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Extend { h, v, theta, params } => {
            let p: Params = params.iter().cloned().collect();
            let q = extend::parse_query(h, v, theta, &p)?;
            let extend::Answer { model, witness: w, scalar } = extend::run(&q)?;
            let mut out = String::new();
            let _ = writeln!(out, "model {} ({}), theta {}", model.pair.label, q.construction, q.recipe);
            let _ = writeln!(out, "commutant {:?}, oracle {:?}", w.division, w.oracle);
            match w.verdict {
                Verdict::Extendable => {
                    let _ = writeln!(out, "Extendable");
                    if !w.note.is_empty() {
                        let _ = writeln!(out, "balancing element: {}", w.note);
                    }
                    if let Some(c) = scalar {
                        let _ = writeln!(out, "sigma on v = c*T with c = {c}");
                    }
                    if let (Some(r), Some(l)) = (&w.sigma_v, &w.sigma_v_square) {
                        let _ = writeln!(out, "sigma on v = R / sqrt({l}), R =\n{r:?}");
                    }
                    if let Some(z) = &w.sigma_z {
                        let _ = writeln!(out, "sigma on z =\n{z:?}");
                    }
                }
                Verdict::NotExtendable => {
                    let _ = writeln!(out, "NotExtendable");
                    if let Some(o) = &w.obstruction {
                        let _ = writeln!(out, "obstruction over {:?}: {}\n  {}", o.division, o.equation, o.reason);
                    }
                }
            }
            emit(cli, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
