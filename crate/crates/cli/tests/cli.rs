//! End-to-end tests driving the `nichols` binary on the repository fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn nichols(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = nichols(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn input_arg(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn cartan_type_on_a2() {
    let v = run_json(&["cartan-type", "--input", &input_arg("braidings/a2_z3.json")]);
    assert_eq!(v["gcm"], serde_json::json!([[2, -1], [-1, 2]]));
    assert_eq!(v["orders"], serde_json::json!([3, 3]));
    assert_eq!(v["components"], serde_json::json!([[1, 2]]));
    assert_eq!(v["symmetric"], Value::Bool(true));
}

#[test]
fn cartan_type_splits_quantum_plane() {
    let v = run_json(&[
        "cartan-type",
        "--input",
        &input_arg("braidings/quantum_plane.json"),
    ]);
    assert_eq!(v["components"], serde_json::json!([[1], [2]]));
    assert_eq!(v["gcm"], serde_json::json!([[2, 0], [0, 2]]));
}

#[test]
fn dim_reports_a2_series() {
    let v = run_json(&["dim", "--input", &input_arg("braidings/a2_z3.json")]);
    assert_eq!(v["finite_type"], Value::Bool(true));
    assert_eq!(v["dimension"], Value::String("27".into()));
    assert_eq!(v["hilbert"], serde_json::json!([1, 2, 4, 4, 5, 4, 4, 2, 1]));
}

#[test]
fn dim_refuses_non_finite_type() {
    let out = nichols(&["dim", "--input", &input_arg("braidings/nonsymmetrizable_rank3.json")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn analyze_nonsymmetrizable_rank3_paths() {
    let v = run_json(&[
        "analyze",
        "--input",
        &input_arg("braidings/nonsymmetrizable_rank3.json"),
    ]);
    assert_eq!(v["finite_type"], Value::Bool(false));
    assert_eq!(
        v["fl"]["verdict"],
        Value::String("not-symmetrizable".into())
    );
    assert_eq!(v["fl"]["locally_fl"], Value::Bool(true));
    assert_eq!(v["dimension"], Value::Null);
}

#[test]
fn analyze_with_oracle_matches() {
    let v = run_json(&[
        "analyze",
        "--input",
        &input_arg("braidings/a2_z3.json"),
        "--oracle",
    ]);
    assert_eq!(v["dimension"], Value::String("27".into()));
    assert_eq!(v["oracle"]["total"], Value::String("27".into()));
    assert_eq!(v["oracle"]["matches_formula"], Value::Bool(true));
    assert_eq!(v["oracle"]["capped"], Value::Bool(false));
}

#[test]
fn analyze_echo_round_trips() {
    let v = run_json(&["analyze", "--input", &input_arg("braidings/square_order_rank2.json")]);
    let original: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("braidings/square_order_rank2.json")).unwrap())
            .unwrap();
    assert_eq!(v["input"], original);
    // the square-order instance admits no FL witness
    assert_eq!(v["fl"]["verdict"], Value::String("no-witness".into()));
    assert_eq!(v["fl"]["rank2_criterion"], Value::Bool(false));
}

#[test]
fn twist_symmetrize_a2_p7() {
    let v = run_json(&[
        "twist-symmetrize",
        "--input",
        &input_arg("braidings/a2_p7.json"),
    ]);
    assert_eq!(v["symmetric"], Value::Bool(true));
    let alpha = v["alpha_twisted"].as_array().unwrap();
    assert_eq!(alpha[0][1], alpha[1][0]);
    assert_eq!(alpha[0][0], serde_json::json!(1));
}

#[test]
fn serre_check_reports_primitive_element() {
    let v = run_json(&[
        "serre-check",
        "--input",
        &input_arg("braidings/g2_p7.json"),
        "--i",
        "1",
        "--j",
        "2",
    ]);
    assert_eq!(v["a_ij"], serde_json::json!(-3));
    assert_eq!(v["primitivity_scalar"], Value::String("0/1".into()));
    assert_eq!(v["primitive"], Value::Bool(true));
    // (ad x)^4 y has 5 words
    assert_eq!(v["serre_element"].as_array().unwrap().len(), 5);
}

#[test]
fn serre_check_validates_indices() {
    let out = nichols(&[
        "serre-check",
        "--input",
        &input_arg("braidings/g2_p7.json"),
        "--i",
        "1",
        "--j",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn antisym_dim_caps_b2() {
    let v = run_json(&[
        "antisym-dim",
        "--input",
        &input_arg("braidings/b2_p5.json"),
        "--degree-cap",
        "4",
    ]);
    assert_eq!(v["ranks"], serde_json::json!([1, 2, 4, 7, 11]));
    assert_eq!(v["capped"], Value::Bool(true));
    assert_eq!(v["total"], Value::Null);
}

#[test]
fn zp_classify_matches_golden_fixtures() {
    for p in ["3", "5", "7", "13"] {
        let out = nichols(&["zp-classify", "--p", p]);
        assert!(out.status.success());
        let mut produced = out.stdout.clone();
        // stdout ends with the newline println adds
        if produced.last() != Some(&b'\n') {
            produced.push(b'\n');
        }
        let golden = std::fs::read(fixture(&format!("zp/zp_{p}.json"))).unwrap();
        assert_eq!(
            produced, golden,
            "report for p = {p} deviates from the golden fixture"
        );
    }
}

#[test]
fn reports_are_byte_stable() {
    let args = ["analyze", "--input", &input_arg("braidings/b2_p5.json")];
    let first = nichols(&args);
    let second = nichols(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.status.success());
}

#[test]
fn malformed_inputs_exit_2() {
    for bad in [
        fixture("braidings/malformed_theta0.json"),
        fixture("braidings/does_not_exist.json"),
    ] {
        let out = nichols(&["cartan-type", "--input", bad.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "for {}", bad.display());
    }
}

#[test]
fn zp_guard_exits_3() {
    for p in ["9", "2", "101"] {
        let out = nichols(&["zp-classify", "--p", p]);
        assert_eq!(out.status.code(), Some(3));
    }
}

#[test]
fn zp_counts_p7() {
    let v = run_json(&["zp-classify", "--p", "7"]);
    let families = v["families"].as_array().unwrap();
    let count = |name: &str| {
        families
            .iter()
            .find(|f| f["name"] == name)
            .map(|f| f["class_count"].as_u64().unwrap())
    };
    assert_eq!(count("A2"), Some(6));
    assert_eq!(count("G2"), Some(12));
    assert_eq!(count("B2"), None);
    assert_eq!(count("quantum-line"), Some(6));
}
