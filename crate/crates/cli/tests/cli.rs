use std::process::{Command, Output};

use serde_json::Value;

fn octohopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octohopf"))
        .args(args)
        .env_remove("OCTOHOPF_SEED")
        .env_remove("OCTOHOPF_SUITE")
        .output()
        .expect("run octohopf")
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = octohopf(&["verify", "--suite", "groupoid", "--dim", "4", "--samples", "20", "--seed", "7", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    let v: Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["passed"], true);
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["reports"][0]["suite"], "groupoid");
}

#[test]
fn seed_changes_the_report() {
    let run = |seed: &str| octohopf(&["verify", "--suite", "leaves", "--dim", "4", "--samples", "10", "--seed", seed]).stdout;
    assert_ne!(run("1"), run("2"));
}

#[test]
fn algebra_suite_passes() {
    let out = octohopf(&["verify", "--suite", "algebra", "--dim", "octonion", "--backend", "exact", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  moufang_1: residual=0"));
    assert!(text.ends_with("overall: PASS\n"));
}

#[test]
fn lie3_reports_jacobi_case() {
    let out = octohopf(&["verify", "--suite", "lie3", "--backend", "exact", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("jacobi(0,0,-1): residual=0"));
}

#[test]
fn foliation_rejects_sedenions() {
    let out = octohopf(&["verify", "--suite", "foliation", "--dim", "16-sedenion"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dims 2/4/8"));
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_flags_exit_with_usage_error() {
    assert_eq!(octohopf(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(octohopf(&["verify", "--suite", "leaves", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(octohopf(&["verify", "--dim", "3"]).status.code(), Some(2));
}

#[test]
fn environment_overrides_flags_defaults() {
    let out = Command::new(env!("CARGO_BIN_EXE_octohopf"))
        .args(["verify", "--dim", "2", "--samples", "5"])
        .env("OCTOHOPF_SUITE", "leaves")
        .env("OCTOHOPF_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["suite"], "leaves");
    assert_eq!(v["config"]["seed"], 99);
}

#[test]
fn unwritable_output_is_an_io_error() {
    let out = octohopf(&["verify", "--suite", "algebra", "--dim", "2", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn export_leaf_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("leaf.csv");
    let p = path.to_str().unwrap();

    let out = octohopf(&["export-leaf", "--slope", "inf", "--radius", "1", "--n", "1", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<Vec<f64>> = csv.lines().skip(1).map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0][..8].iter().all(|&v| v == 0.0));

    let out = octohopf(&["export-leaf", "--slope", "e1", "--radius", "1", "--n", "1000", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["points"], 1000);
    assert!(summary["max_sphere_residual"].as_f64().unwrap() <= 1e-12);

    let out = octohopf(&["export-leaf", "--slope", "origin", "--n", "50", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 2);

    let out = octohopf(&["export-leaf", "--slope", "e1", "--out", "/nonexistent-dir/leaf.csv"]);
    assert_eq!(out.status.code(), Some(3));
}
