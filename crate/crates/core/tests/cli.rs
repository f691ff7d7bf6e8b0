use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn jinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn identity(alg: &str) -> String {
    let zeros = vec![
        "0";
        match alg {
            "R" => 1,
            "C" => 2,
            "H" => 4,
            _ => 8,
        }
    ];
    serde_json::json!({"algebra": alg, "diag": ["1", "1", "1"], "p": zeros, "q": zeros, "r": zeros}).to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_passes_and_reports_json() {
    let out = jinv(&["--algebra", "V0", "--seed", "7", "verify", "--suite", "jordan"]);
    assert_eq!(code(&out), 0);
    let rep = json(&out);
    assert_eq!(rep["schema_version"], 1);
    assert_eq!(rep["config"]["seed"], 7);
    assert_eq!(rep["summary"]["fail"], 0);
    assert!(rep["records"].as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = jinv(&["verify", "--suite", "nope"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope"));
}

#[test]
fn oversized_dimension_is_skipped() {
    let out = jinv(&["--algebra", "V3", "dim", "invariants"]);
    assert_eq!(code(&out), 0);
    let rep = json(&out);
    assert_eq!(rep["records"][0]["status"], "skip");
    assert!(rep["records"][0]["reason"].as_str().unwrap().contains("cap"));
}

#[test]
fn eval_identity_triple() {
    let dir = tempfile::tempdir().unwrap();
    let e = identity("R");
    let file = write(dir.path(), "t.json", &format!("[{e}, {e}, {e}]"));
    let out = jinv(&["inv", "eval", &file, "--set", "p3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["set"], "p3");
    assert_eq!(v["values"]["f10"], "6");
    assert_eq!(v["values"]["f11"], "48");
}

#[test]
fn mixed_algebra_tags_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "t.json", &format!("[{}, {}]", identity("R"), identity("C")));
    let out = jinv(&["inv", "eval", &file, "--set", "p2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("mixed"));
}

#[test]
fn malformed_json_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "t.json", "[{");
    assert_eq!(code(&jinv(&["inv", "eval", &file])), 2);
}

#[test]
fn realize_writes_result_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = jinv(&["--out", path.to_str().unwrap(), "realize", "fermat", "--lambda", "-2"]);
    assert_eq!(code(&out), 0);
    let res: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(res, json(&out));
    assert!(res["residual"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn realize_mu_rejects_other_models() {
    let out = jinv(&["--algebra", "V2", "realize", "mu", "--lambda", "1", "--mu", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn binary_needs_four_coefficients() {
    assert_eq!(code(&jinv(&["realize", "binary", "--coeffs", "1,2,3"])), 2);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "run.cfg",
        "# test run\nseed = 11\npoints = 3\nsuite = comp\n",
    );
    let out = jinv(&["--config", &cfg, "--seed", "5", "--algebra", "V1", "verify"]);
    assert_eq!(code(&out), 0);
    let rep = json(&out);
    assert_eq!(rep["config"]["seed"], 5);
    assert_eq!(rep["config"]["points"], 3);
    assert_eq!(rep["suite"], "comp");
}
