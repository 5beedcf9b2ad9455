use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fuscat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuscat")).args(args).env_remove("FUSCAT_PRECISION").output().expect("run fuscat")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn failed_checks(v: &Value) -> Vec<String> {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| format!("{}/{}", c["section"], c["name"]))
        .collect()
}

#[test]
fn analyze_a4_has_nontrivial_galois_section() {
    let out = fuscat(&["analyze", "catalog:rep_a4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert!(failed_checks(&v).is_empty());
    let elements = v["galois"]["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 2);
    assert_eq!(elements[1]["eta"], serde_json::json!([0, 2, 1, 3]));
}

#[test]
fn analyze_trivial() {
    let out = fuscat(&["analyze", "catalog:trivial"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["summary"]["failed"], 0);
}

#[test]
fn bad_inputs_exit_two() {
    assert_eq!(fuscat(&["analyze", &data("not_a_ring.json")]).status.code(), Some(2));
    assert_eq!(fuscat(&["analyze", "catalog:nope"]).status.code(), Some(2));
    let out = fuscat(&["verify", "catalog:fib", "--checks", "zeros,bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
    assert_eq!(fuscat(&["analyze", "catalog:fib", "--precision", "16"]).status.code(), Some(2));
}

#[test]
fn conductor_bound_too_small() {
    let out = fuscat(&["analyze", "catalog:fib", "--conductor-max", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_runs_only_requested_sections() {
    let v = report(&fuscat(&["verify", "catalog:rep_s3", "--checks", "zeros"]));
    assert!(v.get("zeros").is_some());
    assert!(v.get("table").is_none() && v.get("galois").is_none());

    let v = report(&fuscat(&["verify", "catalog:fib", "--checks", "orthogonality"]));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["section"] == "orthogonality"));
    assert!(v.get("zeros").is_none());
}

#[test]
fn ising_galois_boundary() {
    let out = fuscat(&["verify", "catalog:ising", "--checks", "galois"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    let s = &v["galois"]["elements"][1];
    assert_eq!(s["tau_fixes_zero"], false);
    assert!(s["not_an_algebra_map"].is_object() || s["not_an_algebra_map"].is_string());
}

#[test]
fn modular_files() {
    let good = data("ising_s.json");
    let out = fuscat(&["modular", &good]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["modular"]["dimC"]["coeffs"], serde_json::json!(["4"]));

    let out = fuscat(&["modular", &good, "--ring", "catalog:ising"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(report(&out)["modular"]["column_permutation"].is_array());

    let out = fuscat(&["modular", &data("ising_s_corrupted.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    let orth = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "s_matrix_orthogonality").unwrap();
    assert_eq!(orth["status"], "fail");
    assert_eq!(orth["witness"], "(0, 1)");

    assert_eq!(fuscat(&["modular", &good, "--ring", "catalog:rep_s3"]).status.code(), Some(2));
}

#[test]
fn catalog_list_and_emit_round_trip() {
    let out = fuscat(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 7);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fib.json");
    let p = path.to_str().unwrap();
    assert_eq!(fuscat(&["catalog", "emit", "fib", p]).status.code(), Some(0));
    let from_file = report(&fuscat(&["analyze", p, "--exact-only"]));
    let from_catalog = report(&fuscat(&["analyze", "catalog:fib", "--exact-only"]));
    assert_eq!(from_file["table"], from_catalog["table"]);

    assert_eq!(fuscat(&["catalog", "emit", "nope", p]).status.code(), Some(2));
}

#[test]
fn out_flag_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = fuscat(&["analyze", "catalog:rep_q8", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn precision_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_fuscat"))
        .args(["verify", "catalog:fib", "--checks", "zeros"])
        .env("FUSCAT_PRECISION", "128")
        .output()
        .unwrap();
    assert_eq!(report(&out)["config"]["precision"], 128);
}

#[test]
fn witness_limit_caps_structconst_witnesses() {
    let v = report(&fuscat(&["verify", "catalog:fib", "--checks", "structconst", "--witness-limit", "1"]));
    let r = &v["structconst"]["rationality"];
    assert_eq!(r["witnesses"].as_array().unwrap().len(), 1);
    assert!(r["total_witnesses"].as_u64().unwrap() > 1);
}
