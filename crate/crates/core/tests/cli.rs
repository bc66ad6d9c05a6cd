use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn coreinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coreinv")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn entries(rows: &[&[&str]]) -> Value {
    serde_json::to_value(rows).unwrap()
}

#[test]
fn compute_core_of_idempotent() {
    let out = coreinv(&["compute", &fixture("idempotent.json"), "--kind", "core"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["exists"], true);
    assert_eq!(v["inverse"]["entries"], entries(&[&["1", "0"], &["0", "0"]]));
    assert_eq!(v["certificate"]["valid"], true);
}

#[test]
fn compute_core_of_nilpotent_does_not_exist() {
    let out = coreinv(&["compute", &fixture("nilpotent.json"), "--kind", "core"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_is_rejected() {
    let out = coreinv(&["compute", &fixture("malformed.json")]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["exit_code"], 3);
}

#[test]
fn verify_reports_failing_equation() {
    let ok = coreinv(&["verify", &fixture("idempotent.json"), &fixture("core_of_idempotent.json"), "--kind", "core"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["certificate"]["valid"], true);

    let bad = coreinv(&["verify", &fixture("idempotent.json"), &fixture("mp_of_idempotent.json"), "--kind", "core"]);
    assert_eq!(bad.status.code(), Some(2));
    let failing: Vec<Value> = json(&bad)["certificate"]["equations"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["holds"] == false)
        .cloned()
        .collect();
    assert!(failing.iter().any(|e| e["id"] == "ax^2=x"));
}

#[test]
fn perturb_diag_by_swap() {
    let out = coreinv(&["perturb", &fixture("diag10.json"), &fixture("swap.json"), "--tau", "core"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["exists"], true);
    assert_eq!(v["result"]["entries"], entries(&[&["1/4", "1/4"], &["1/4", "1/4"]]));
}

#[test]
fn perturb_by_zero_is_trivial() {
    let out = coreinv(&["perturb", &fixture("diag10.json"), &fixture("zero.json"), "--tau", "core"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["entries"], entries(&[&["1", "0"], &["0", "0"]]));
}

#[test]
fn perturb_to_zero_is_rejected() {
    let out = coreinv(&["perturb", &fixture("identity.json"), &fixture("neg_identity.json"), "--tau", "core"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn radical_examples() {
    let out = coreinv(&["radical", &fixture("dual_diag10.json"), &fixture("eps_e12.json"), "--variant", "core"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["epsilon_is_zero"], true);
    assert_eq!(v["result"]["entries"], entries(&[&["1", "0"], &["0", "0"]]));

    let out = coreinv(&["radical", &fixture("dual_diag10.json"), &fixture("eps_e22.json"), "--variant", "core"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["exists"], false);

    let out = coreinv(&["radical", &fixture("dual_diag10.json"), &fixture("plain_e12.json"), "--variant", "core"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn fuzz_summary_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let path = path.to_str().unwrap();
    let out = coreinv(&["fuzz", "--theorem", "thm3_1", "--trials", "100", "--seed", "42", "--out", path]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(path).unwrap();
    let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["trials"], 100);
    assert_eq!(last["summary"]["contract_violations"], 0);
    assert!(last["summary"]["epsilon_zero_rate"].is_number());
}

#[test]
fn empty_fuzz_prints_only_summary() {
    let out = coreinv(&["fuzz", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("\"summary\""));
}
