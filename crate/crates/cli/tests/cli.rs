use std::path::Path;
use std::process::{Command, Output};

use burnside_cli::exit_code;
use burnside_core::Error;
use serde_json::Value;

fn burnside(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burnside"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn marks_of_c2() {
    let v = json(&burnside(&["marks", "--group", "cyclic:2", "--no-cache"]));
    assert_eq!(v["report"]["matrix"], serde_json::json!([[2, 0], [1, 1]]));
    assert_eq!(v["command"], "marks");
    assert_eq!(v["tool_version"], burnside_core::TOOL_VERSION);
    assert_eq!(v["group"]["order"], 2);
    assert_eq!(v["group"]["hash"].as_str().unwrap().len(), 64);
    assert_eq!(v["report"]["classes"][1]["generators"], serde_json::json!([[1, 0]]));
}

#[test]
fn marks_csv_is_the_matrix() {
    let out = burnside(&["marks", "--group", "S3", "--format", "csv", "--no-cache"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "6,0,0,0\n3,1,0,0\n2,0,2,0\n1,1,1,1\n");
}

#[test]
fn units_of_c3() {
    let v = json(&burnside(&["units", "--group", "cyclic:3", "--no-cache"]));
    assert_eq!(v["report"]["rank"], 1);
    let units: Vec<Vec<i64>> = serde_json::from_value(v["report"]["units"].clone()).unwrap();
    assert_eq!(units.len(), 2);
    assert!(units.contains(&vec![1, 1]));
    assert!(units.contains(&vec![-1, -1]));
}

#[test]
fn picard_of_c5() {
    let v = json(&burnside(&["picard", "--group", "cyclic:5", "--no-cache"]));
    assert_eq!(v["report"]["cokernel"]["invariant_factors"], serde_json::json!([2]));
    assert_eq!(v["report"]["target_order"], "16");
}

#[test]
fn certify_text_and_json() {
    let v = json(&burnside(&["certify", "--group", "S3", "--no-cache"]));
    assert_eq!(v["report"]["quotient_ring_size"], "108");
    assert_eq!(v["report"]["checks"].as_array().unwrap().len(), 5);
    assert_eq!(v["report"]["cited_axioms"].as_array().unwrap().len(), 3);
    let out = burnside(&["certify", "--group", "C2", "--format", "text", "--no-cache"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("conclusion: Br(A(G)) = 0 certified modulo cited axioms"));
}

#[test]
fn exit_codes() {
    assert_eq!(burnside(&["marks", "--group", "C4", "--no-cache"]).status.code(), Some(0));
    // budgets
    let out = burnside(&["marks", "--group", "S4", "--budget-elements", "5", "--no-cache"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(burnside(&["picard", "--group", "S4", "--no-cache"]).status.code(), Some(2));
    assert_eq!(
        burnside(&["picard", "--group", "C4", "--budget-enum", "2", "--no-cache"]).status.code(),
        Some(2)
    );
    // malformed input
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"degree\": 3, \"generators\": [[0, 0, 1]]}").unwrap();
    let spec = format!("file:{}", bad.display());
    assert_eq!(burnside(&["marks", "--group", &spec]).status.code(), Some(3));
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(burnside(&["marks", "--group", &spec]).status.code(), Some(3));
    let missing = format!("file:{}", dir.path().join("missing.json").display());
    assert_eq!(burnside(&["marks", "--group", &missing]).status.code(), Some(3));
    assert_eq!(burnside(&["marks", "--group", "tetrahedral:4"]).status.code(), Some(3));
    assert_eq!(burnside(&["marks"]).status.code(), Some(3));
    assert_eq!(burnside(&["marks", "--group", "C2", "--budget-enum", "0"]).status.code(), Some(3));
    assert_eq!(burnside(&["--version"]).status.code(), Some(0));

    let failed = Error::CheckFailed {
        check: "x".into(),
        detail: "y".into(),
    };
    assert_eq!(exit_code(&failed), 1);
    assert_eq!(exit_code(&Error::MalformedInput("z".into())), 3);
}

#[test]
fn group_files_are_read() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    std::fs::write(&path, r#"{"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}"#).unwrap();
    let from_file = json(&burnside(&["marks", "--group", &format!("file:{}", path.display()), "--no-cache"]));
    let builtin = json(&burnside(&["marks", "--group", "S3", "--no-cache"]));
    assert_eq!(from_file["report"]["matrix"], builtin["report"]["matrix"]);
    assert_eq!(from_file["group"]["hash"], builtin["group"]["hash"]);
}

#[test]
fn output_is_deterministic() {
    for cmd in ["marks", "units", "picard", "certify"] {
        let a = burnside(&[cmd, "--group", "D4", "--no-cache"]);
        let b = burnside(&[cmd, "--group", "D4", "--no-cache", "--parallel", "1"]);
        let c = burnside(&[cmd, "--group", "D4", "--no-cache", "--parallel", "3"]);
        assert!(a.status.success(), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        assert_eq!(a.stdout, c.stdout, "{cmd}");
    }
}

fn cache_files(dir: &Path) -> usize {
    std::fs::read_dir(dir).unwrap().count()
}

#[test]
fn warm_cache_equals_cold() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let cold = burnside(&["marks", "--group", "A4", "--cache-dir", cache]);
    assert_eq!(cache_files(dir.path()), 1);
    let warm = burnside(&["marks", "--group", "A4", "--cache-dir", cache]);
    let uncached = burnside(&["marks", "--group", "A4", "--no-cache"]);
    assert!(cold.status.success() && warm.status.success());
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, uncached.stdout);

    // a damaged cache file is recomputed, never trusted
    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    std::fs::write(&entry, "{").unwrap();
    let repaired = burnside(&["marks", "--group", "A4", "--cache-dir", cache]);
    assert_eq!(repaired.stdout, cold.stdout);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("units.json");
    let out = burnside(&["units", "--group", "C2xC2", "--no-cache", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let stdout = burnside(&["units", "--group", "C2xC2", "--no-cache"]).stdout;
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

#[test]
fn report_all_passes() {
    let out = burnside(&["report-all", "--no-cache"]);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["group_count"], 23);
    assert_eq!(v["failures"], 0);
    let again = burnside(&["report-all", "--no-cache", "--parallel", "1"]);
    assert_eq!(out.stdout, again.stdout);
}
