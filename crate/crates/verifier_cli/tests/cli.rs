use std::path::Path;
use std::process::{Command, Output};

fn hopf_verify(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-verify")).args(args).current_dir(cwd).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

const SMALL: &str = r#"{
  "algebras": [{"family": "group_algebra", "orders": [2]}, {"family": "sweedler4"}],
  "subalgebras": {"mode": "randomized", "count": 2, "seed": 5}
}"#;

#[test]
fn build_writes_loadable_tables() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "spec.json", r#"{"family": "taft", "n": 3, "q": 2, "field": "p=7"}"#);
    let out = hopf_verify(&["build", "--spec", "spec.json", "--out", "taft.json"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let h = catalog::load(&std::fs::read(dir.path().join("taft.json")).unwrap()).unwrap();
    assert_eq!(h.dim(), 9);

    let stdout = hopf_verify(&["build", "--spec", "spec.json"], dir.path());
    assert_eq!(stdout.stdout, std::fs::read(dir.path().join("taft.json")).unwrap());
}

#[test]
fn verify_exits_zero_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "suite.json", SMALL);
    let a = hopf_verify(&["verify", "--config", "suite.json", "--no-metadata"], dir.path());
    let b = hopf_verify(&["verify", "--config", "suite.json", "--no-metadata"], dir.path());
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["summary"]["verdicts"]["fail"], 0);
    assert!(report.get("metadata").is_none());

    let reseeded = hopf_verify(&["verify", "--config", "suite.json", "--no-metadata", "--seed", "77"], dir.path());
    let reseeded: serde_json::Value = serde_json::from_slice(&reseeded.stdout).unwrap();
    assert_eq!(reseeded["seed"], 77);

    let timed = hopf_verify(&["verify", "--config", "suite.json"], dir.path());
    let timed: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(timed["metadata"]["total_ms"].is_u64());
}

#[test]
fn markdown_output_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "suite.json", SMALL);
    let out = hopf_verify(&["verify", "--config", "suite.json", "--format", "md", "--out", "report.md"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let md = std::fs::read_to_string(dir.path().join("report.md")).unwrap();
    assert!(md.starts_with("# Verification report"));
    assert!(md.contains("| correspondence |"));
}

#[test]
fn failing_checks_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let h = catalog::build(&catalog::AlgebraSpec::sweedler(exactla::Field::Rational)).unwrap();
    let mut file: serde_json::Value = serde_json::from_slice(&catalog::save(&h)).unwrap();
    // break associativity: g·g = x
    file["mult"][1][1] = serde_json::json!([0, 0, 1, 0]);
    write(dir.path(), "broken.json", &file.to_string());
    write(dir.path(), "suite.json", r#"{"algebras": [{"file": "broken.json"}]}"#);
    let out = hopf_verify(&["verify", "--config", "suite.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("failed checks"));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["failures"].as_array().unwrap().iter().any(|f| f["check"].as_str().unwrap().starts_with("axioms/")));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "suite.json", SMALL);
    write(dir.path(), "corrupt.json", "{\"algebras\": [");
    write(dir.path(), "unknown.json", r#"{"algebra": []}"#);

    let out = hopf_verify(&["verify", "--config", "corrupt.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupt.json"));

    let out = hopf_verify(&["verify", "--config", "unknown.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    let out = hopf_verify(&["verify", "--config", "absent.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("absent.json"));

    let out = hopf_verify(&["verify", "--config", "suite.json", "--format", "yaml"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    let out = hopf_verify(&["frobnicate"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_reports_no_candidates_on_small_algebras() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "suite.json", r#"{"algebras": [{"family": "sweedler4"}, {"family": "dual_group_algebra", "orders": [3], "field": "p=7"}]}"#);
    let out = hopf_verify(&["search-open-question", "--config", "suite.json", "--no-metadata"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["candidates"], serde_json::json!([]));
    assert!(report["summary"]["by_kind"]["openquestion"]["pass"].as_u64().unwrap() > 0);
}
