use std::path::Path;
use std::process::{Command, Output};

use hodge_degen::degen::{ht_construct, period_closed_weight_two};
use hodge_degen::json::lmhs_to_json;
use hodge_degen::HodgeNumbers;
use serde_json::Value;

fn hodge_degen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge-degen"))
        .args(args)
        .env_remove("HODGE_DEGEN_CATALOG")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_json(dir: &Path, name: &str, v: &Value) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(v).unwrap()).unwrap();
    path.display().to_string()
}

fn ht_payload(h: &[usize]) -> Value {
    lmhs_to_json(&ht_construct(&HodgeNumbers::new(h.to_vec()).unwrap()).unwrap())
}

fn negate_scalars(v: &Value) -> Value {
    match v {
        Value::Array(xs) => Value::Array(xs.iter().map(negate_scalars).collect()),
        Value::String(s) if s == "0" => v.clone(),
        Value::String(s) => Value::String(s.strip_prefix('-').map(str::to_string).unwrap_or_else(|| format!("-{s}"))),
        _ => v.clone(),
    }
}

#[test]
fn validate_accepts_a_hodge_tate_construction() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "ht.json", &ht_payload(&[1, 2, 2, 1]));
    let out = hodge_degen(&["validate", &path, "--samples", "1,2,10"]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(r["kind"], "lmhs");
    let ids: Vec<&str> = r["clauses"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"disc_sample.y=10"));
}

#[test]
fn validate_rejects_a_sign_flipped_polarization() {
    let dir = tempfile::tempdir().unwrap();
    let mut payload = ht_payload(&[1, 1, 1]);
    payload["Q"] = negate_scalars(&payload["Q"]);
    let path = write_json(dir.path(), "flip.json", &payload);
    let out = hodge_degen(&["validate", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_json(&out)["first_failure"].as_str().unwrap().contains("polarization"));
}

#[test]
fn validate_reports_malformed_input_as_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let mut payload = ht_payload(&[1, 1]);
    payload["Q"][0][1] = Value::String("1/0".into());
    let path = write_json(dir.path(), "bad.json", &payload);
    assert_eq!(hodge_degen(&["validate", &path]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(hodge_degen(&["validate", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn validate_pure_payload() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(
        dir.path(),
        "pure.json",
        &serde_json::json!({"weight": 1, "Q": [["0", "1"], ["-1", "0"]], "F": {"lo": 1, "steps": [[["1", "i"]]]}}),
    );
    let out = hodge_degen(&["validate", &path]);
    let r = stdout_json(&out);
    assert_eq!(r["kind"], "phs");
    assert_eq!(out.status.code(), Some(if r["pass"] == true { 0 } else { 1 }));
}

#[test]
fn classify_minimal_counts_types() {
    let out = hodge_degen(&["classify", "3", "1,1,1,1", "minimal"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["count"], 2);
    let out = hodge_degen(&["classify", "1", "1,1", "minimal"]);
    assert_eq!(stdout_json(&out)["count"], 1);
}

#[test]
fn classify_minimal_writes_valid_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let wdir = dir.path().join("w");
    let out = hodge_degen(&["classify", "2", "1,2,1", "minimal", "--witness-dir", wdir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let types = stdout_json(&out)["types"].as_array().unwrap().clone();
    assert!(!types.is_empty());
    for t in types {
        let path = t["witness"].as_str().unwrap();
        assert_eq!(hodge_degen(&["validate", path]).status.code(), Some(0), "{path}");
    }
}

#[test]
fn classify_hodge_tate_gate() {
    let out = hodge_degen(&["classify", "2", "2,1,2", "hodge-tate"]);
    assert_eq!(out.status.code(), Some(1));
    let r = stdout_json(&out);
    assert_eq!(r["gate"], "FAIL");
    assert_eq!(r["failing_k"], serde_json::json!([1]));
    let out = hodge_degen(&["classify", "4", "1,2,4,2,1", "hodge-tate"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["validation"]["pass"], true);
}

#[test]
fn classify_closed_orbit_with_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "w2.json", &lmhs_to_json(&period_closed_weight_two().unwrap()));
    let out = hodge_degen(&["classify", "2", "2,1,2", "closed-orbit", "--input", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["closed_orbit"]["verdict"], "consistent with closed orbit");
    let out = hodge_degen(&["classify", "2", "1,1,1", "closed-orbit", "--input", &path]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_rejects_bad_hodge_numbers() {
    assert_eq!(hodge_degen(&["classify", "2", "1,1", "minimal"]).status.code(), Some(2));
    assert_eq!(hodge_degen(&["classify", "2", "1,2,3", "minimal"]).status.code(), Some(2));
}

#[test]
fn diagram_of_a_hodge_tate_payload() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "ht.json", &ht_payload(&[1, 1, 1]));
    let out = hodge_degen(&["diagram", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, ".   *\n. *\n* . .\n");
}

#[test]
fn diagram_is_byte_deterministic() {
    let a = hodge_degen(&["diagram", "G2-row4", "--adjoint", "--format", "svg"]);
    let b = hodge_degen(&["diagram", "G2-row4", "--adjoint", "--format", "svg"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn diagram_of_f4_row_has_three_rings() {
    let out = hodge_degen(&["diagram", "F4-row1", "--format", "svg"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches("class=\"ring\"").count(), 3);
}

#[test]
fn diagram_of_empty_spec_is_axes_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "empty.json", &serde_json::json!({"nodes": []}));
    let out = hodge_degen(&["diagram", &path]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), ".\n");
    let out = hodge_degen(&["diagram", &path, "--format", "svg"]);
    assert!(!String::from_utf8(out.stdout).unwrap().contains("circle"));
}

#[test]
fn diagram_rejects_bad_input() {
    assert_eq!(hodge_degen(&["diagram", "no-such-entry"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(hodge_degen(&["diagram", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn catalog_lists_and_reproduces() {
    let out = hodge_degen(&["catalog"]);
    let names = String::from_utf8(out.stdout).unwrap();
    assert!(names.lines().any(|l| l == "G2") && names.lines().any(|l| l == "F4-row1"));
    for group in ["G2", "F4"] {
        let out = hodge_degen(&["catalog", group, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{group}");
        let r = stdout_json(&out);
        assert_eq!(r["rows"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn catalog_unknown_name_lists_available() {
    let out = hodge_degen(&["catalog", "E9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("G2-row1"));
}

#[test]
fn catalog_env_override_reports_diffs() {
    let dir = tempfile::tempdir().unwrap();
    let mut g2: Value = serde_json::from_str(include_str!("../../core/catalog/g2.json")).unwrap();
    let nodes = g2["rows"][0]["expected"]["V"].as_array_mut().unwrap();
    nodes[0][2] = Value::from(nodes[0][2].as_u64().unwrap() + 1);
    write_json(dir.path(), "g2.json", &g2);
    let out = Command::new(env!("CARGO_BIN_EXE_hodge-degen"))
        .args(["catalog", "G2"])
        .env("HODGE_DEGEN_CATALOG", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("DIFF ") && text.contains("--- expected V"));
}

#[test]
fn verify_corpus_limit_zero_is_vacuous() {
    let out = hodge_degen(&["verify-corpus", "--limit", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["cases"], 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("types.json");
    let out = hodge_degen(&["classify", "1", "1,1", "minimal", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["count"], 1);
}
