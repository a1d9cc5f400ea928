use std::path::PathBuf;
use std::process::{Command, Output};

fn catalog() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../catalog"))
}

fn nilform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilform"))
        .args(args)
        .env("NILFORM_CATALOG_DIR", catalog())
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_vin_reports_every_row() {
    let o = nilform(&["verify", "--table", "vin"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let lines: Vec<_> = stdout(&o).lines().map(|l| l.to_string()).collect();
    assert_eq!(lines.len(), 23);
    for l in &lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert!(v.get("outcomes").is_some());
    }
}

#[test]
fn verify_case_with_param() {
    let o = nilform(&["verify", "--table", "vin", "--case", "9", "--param", "n=1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let checks: Vec<_> = v["outcomes"].as_array().unwrap().iter().filter_map(|o| o.get("check")).collect();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["name"], "split-quaternion");
    assert_eq!(checks[0]["passed"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(nilform(&["verify", "--table", "none"]).status.code(), Some(2));
    assert_eq!(nilform(&["verify", "--table", "vin", "--case", "99"]).status.code(), Some(2));
    assert_eq!(nilform(&["bogus"]).status.code(), Some(2));
    // Sp(m;R) row of the Heisenberg table is refuted by the engine
    assert_eq!(nilform(&["verify", "--table", "heis", "--case", "3"]).status.code(), Some(1));
}

#[test]
fn extend_examples() {
    let o = nilform(&["extend", "--h", "u2", "--v", "C2", "--theta", "quaternionic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NotExtendable"));

    let o = nilform(&["extend", "--h", "u1xso4", "--v", "C4", "--theta", "adJ"]);
    let s = stdout(&o);
    assert!(s.contains("\nExtendable") && s.contains("c = i\n"), "{s}");

    let o = nilform(&["extend", "--h", "un", "--v", "Cn", "--theta", "conj", "--param", "n=2"]);
    let s = stdout(&o);
    assert!(s.contains("\nExtendable") && s.contains("c = 1\n"), "{s}");

    assert_eq!(nilform(&["extend", "--h", "un", "--v", "Cn", "--theta", "conj"]).status.code(), Some(2));
}

#[test]
fn lorentz_listings() {
    let o = nilform(&["lorentz", "--table", "heis", "--class", "trans"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let mut cases: Vec<u64> = v["matched"].as_array().unwrap().iter().map(|i| i["case"].as_u64().unwrap()).collect();
    cases.dedup();
    assert_eq!(cases, [1, 2, 4, 5, 6, 7, 8]);
    assert!(v["missing"].as_array().unwrap().is_empty());

    let o = nilform(&["lorentz", "--table", "vin", "--class", "lorentz", "--pretty"]);
    let s = stdout(&o);
    let e6 = s.lines().find(|l| l.contains("U(1)E6")).unwrap();
    assert!(e6.contains("(54,1)") && e6.contains("unverified_by_engine"), "{e6}");
}

#[test]
fn empty_catalog_lists_nothing() {
    let dir = std::env::temp_dir().join(format!("nilform-cli-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("vin.json"), "").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_nilform"))
        .args(["lorentz", "--table", "vin", "--class", "lorentz", "--catalog-dir"])
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["items"].as_array().unwrap().is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_file_and_pretty() {
    let f = std::env::temp_dir().join(format!("nilform-out-{}.txt", std::process::id()));
    let o = nilform(&["verify", "--table", "vin", "--case", "1", "--pretty", "--out", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&f).unwrap();
    assert!(text.starts_with("entry") && text.contains("SO(2,1)"));
    std::fs::remove_file(&f).unwrap();
}
