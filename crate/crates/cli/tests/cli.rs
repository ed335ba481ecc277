use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn orbitfold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitfold")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fold_a3_flip() {
    let out = orbitfold(&["fold", "--algebra", "A3", "--perm", "2,1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["folded_cartan"], serde_json::json!([[2, -2], [-1, 2]]));
    assert_eq!(v["orbits"], serde_json::json!([[0, 2], [1]]));
    assert_eq!(v["N_i"], serde_json::json!([2, 1]));
    assert_eq!(v["s_i"], serde_json::json!([1, 1]));
    assert_eq!(v["linking_ok"], Value::Bool(true));
    assert_eq!(v["provenance"]["inputs"]["perm"], serde_json::json!([2, 1, 0]));
    assert!(v["provenance"]["version"].is_string());
}

#[test]
fn fold_output_round_trips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let out = orbitfold(&["fold", "--algebra", "C4aff", "--perm", "4,3,2,1,0", "--out", path(&first)]);
    assert_eq!(out.status.code(), Some(0));
    let again = orbitfold(&["fold", "--algebra", path(&first), "--perm", path(&first)]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(std::fs::read(&first).unwrap(), again.stdout);
}

#[test]
fn algebra_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g2.json");
    std::fs::write(&file, r#"{"cartan": [[2, -1], [-3, 2]]}"#).unwrap();
    let v = json(&orbitfold(&["classify", "--algebra", path(&file)]));
    assert_eq!(v["kind"], "Finite");
    let v = json(&orbitfold(&["validate", "--algebra", "A2aff"]));
    assert_eq!(v["kind"], "Affine");
    assert_eq!(v["kac_labels"], serde_json::json!([1, 1, 1]));
}

#[test]
fn twine_with_oracle_has_empty_diff() {
    let out = orbitfold(&["twine", "--algebra", "A2", "--perm", "1,0", "--hw", "1,1", "--depth", "4", "--verify-oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["diff"], serde_json::json!([]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn twine_affine_specializes() {
    let args = ["twine", "--algebra", "A3aff", "--perm", "2,3,0,1", "--hw", "1,0,1,0", "--depth", "2", "--verify-oracle"];
    let out = orbitfold(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["diff"], serde_json::json!([]));
    assert_eq!(v["specialized"]["coefficients"].as_array().unwrap().len(), 3);
}

#[test]
fn char_and_specialization() {
    let v = json(&orbitfold(&["char", "--algebra", "A2", "--hw", "1,1", "--depth", "4"]));
    assert_eq!(v["total"], 8);
    let v = json(&orbitfold(&["char", "--algebra", "A1aff", "--hw", "1,0", "--depth", "5", "--specialize"]));
    assert_eq!(v["specialized"]["coefficients"], serde_json::json!([1, 3, 4, 7, 13, 19]));
    assert_eq!(v["specialized"]["exponent"], "-1/24");
}

#[test]
fn smatrix_a1_level_one() {
    let v = json(&orbitfold(&["smatrix", "--algebra", "A1aff", "--level", "1"]));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let s = v["S"].as_array().unwrap();
    for (i, row) in s.iter().enumerate() {
        for (j, z) in row.as_array().unwrap().iter().enumerate() {
            let expected = if i == 1 && j == 1 { -h } else { h };
            assert!((z[0].as_f64().unwrap() - expected).abs() < 1e-12);
            assert!(z[1].as_f64().unwrap().abs() < 1e-12);
        }
    }
    assert_eq!(v["central_charge"], "1");
    assert_eq!(v["conformal_weights"], serde_json::json!(["0", "1/4"]));
}

#[test]
fn ising_coset() {
    let out = orbitfold(&["coset", "--h", "A1", "--levels", "1,1", "--qorder", "4", "--resolve", "--verlinde"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let weights: Vec<&str> = v["fields"].as_array().unwrap().iter().map(|f| f["conformal_weight"].as_str().unwrap()).collect();
    assert_eq!(weights, ["0", "1/2", "1/16"]);
    assert_eq!(v["checks"]["verlinde"]["ok"], Value::Bool(true));
    assert_eq!(v["provenance"]["truncation"]["q_order"], 4);
}

#[test]
fn fixed_point_coset_resolves() {
    let out = orbitfold(&["coset", "--h", "A1", "--levels", "2,2", "--resolve", "--verlinde"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let fixed: Vec<&Value> =
        v["orbits"].as_array().unwrap().iter().filter(|o| o["stabilizer_order"] == 2).collect();
    assert_eq!(fixed.len(), 1);
    assert_eq!(fixed[0]["representative"], serde_json::json!([[1], [1], [2]]));
    assert_eq!(v["checks"]["modular"]["ok"], Value::Bool(true));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(orbitfold(&["fold", "--algebra", "A3"]).status.code(), Some(2));
    assert_eq!(orbitfold(&["fold", "--algebra", "Q9", "--perm", "0"]).status.code(), Some(2));
    assert_eq!(orbitfold(&["fold", "--algebra", "A3", "--perm", "2,x,0"]).status.code(), Some(2));
    assert_eq!(orbitfold(&["coset", "--h", "A1", "--levels", "1"]).status.code(), Some(2));
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_orbitfold"))
        .args(["classify", "--algebra", "A2"])
        .env("ORBITFOLD_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(2));
}

#[test]
fn invariant_failures_exit_with_one() {
    let out = orbitfold(&["fold", "--algebra", "A3", "--perm", "1,0,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not preserve"));
    let out = orbitfold(&["twine", "--algebra", "A2", "--perm", "1,0", "--hw", "1,0", "--depth", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn thread_cap_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitfold"))
        .args(["coset", "--h", "A1", "--levels", "1,1", "--qorder", "4"])
        .env("ORBITFOLD_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_reports_corrupted_fixture_by_name() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("fixtures.json");
    std::fs::write(&file, r#"{"D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 1, 2]]}"#).unwrap();
    let out = orbitfold(&["check", "--fixtures", path(&file), "--only", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let err = v["criteria"][0]["error"].as_str().unwrap();
    assert!(err.contains("fixture `D4`") && err.contains("not a generalized Cartan matrix"), "{err}");
}

#[test]
fn check_flags_tolerance_induced_failures() {
    for (only, tol) in [("6", "1e-15"), ("7,8", "1e-18")] {
        let out = orbitfold(&["check", "--only", only, "--tolerance", tol]);
        assert_eq!(out.status.code(), Some(1));
        let v = json(&out);
        for c in v["criteria"].as_array().unwrap() {
            assert_eq!(c["passed"], Value::Bool(false));
            assert_eq!(c["tolerance_induced"], Value::Bool(true));
        }
    }
    let ok = orbitfold(&["check", "--only", "1,6,7,8"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stderr).lines().all(|l| l.contains("PASS")));
}
