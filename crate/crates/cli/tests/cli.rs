use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn monoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoid")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = monoid(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("monoid-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn schema() -> jsonschema::Validator {
    let out = monoid(&["schema"]);
    let s: Value = serde_json::from_slice(&out.stdout).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn assert_schema_valid(v: &Value) {
    let errors: Vec<String> = schema().iter_errors(v).map(|e| format!("{e} at {}", e.instance_path)).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn validate_split_input() {
    let (code, v) = json(&["validate", "x1*x2^2+x3^3", "x1^4"]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
    assert_eq!(v["validity_level"], "SURFACE_NORMALIZED");
    assert_schema_valid(&v);
}

#[test]
fn validate_rejects_common_factor() {
    let (code, v) = json(&["validate", "x3^3", "x3*x1^3"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "CommonFactor");
    assert_schema_valid(&v);
}

#[test]
fn malformed_text_exits_three_with_position() {
    let (code, v) = json(&["validate", "x1^2*(x2+", "x1^4"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["line"], 1);
    assert!(v["error"]["position"].is_u64());
    let (code, _) = json(&["validate", "x1^3 + q^3", "x1^4"]);
    assert_eq!(code, 3);
}

#[test]
fn whole_input_from_file() {
    let p = scratch("whole.txt", "# affine chart x0 = 1\nx^3+y^3+5*x*y*z-z^3*(x+y)\n");
    let (code, v) = json(&["classify", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["input"]["form"], "whole");
    assert_eq!(v["quartic"]["case"], 1);
    assert_eq!(v["quartic"]["invariants"]["m"], 2);
    assert_eq!(v["quartic"]["monoid_point_label"], "T_{3,3,5}");
    assert_schema_valid(&v);
}

#[test]
fn classify_extreme_example() {
    let (code, v) = json(&["classify", "x1*x2^2+x3^3", "x1^4"]);
    assert_eq!(code, 0);
    let labels: Vec<&str> = v["quartic"]["labels"].as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
    assert_eq!(labels, ["Q_10", "A_11"]);
    assert_eq!(v["surface"]["singularities"][0]["point"], "(0:0:1:0)");
    assert!(v["notes"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("cusp")));
}

#[test]
fn classify_is_deterministic() {
    let a = monoid(&["classify", "x1*x2*x3", "x1^4+x2^4+x3^4+x1*x2^2*x3", "--seed", "7", "--json", "-"]);
    let b = monoid(&["classify", "x1*x2*x3", "x1^4+x2^4+x3^4+x1*x2^2*x3", "--seed", "7", "--json", "-"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn classify_singular_line_is_domain_invalid() {
    let (code, v) = json(&["classify", "x3*(x1*x2 + x3^2)", "x1^2*x3^2 + x1^2*x2^2 + x2^4"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "SingularLineDetected");
    let (code, v) = json(&["validate", "x3*(x1*x2 + x3^2)", "x1^2*x3^2 + x1^2*x2^2 + x2^4"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "CommonSingularPoint");
}

#[test]
fn batch_of_files() {
    let a = scratch("a.txt", "x1*x2^2+x3^3\nx1^4\n");
    let b = scratch("b.txt", "x3^3\nx3*x1^3\n");
    let (code, v) = json(&["validate", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code, 2);
    let docs = v.as_array().unwrap();
    assert_eq!(docs[0]["valid"], true);
    assert_eq!(docs[1]["valid"], false);
}

#[test]
fn construct_max_real_nodes() {
    let spec = scratch("nodes.json", r#"{"degree": 4, "kind": "MAX_REAL_NODES"}"#);
    let out = scratch("nodes.txt", "");
    let (code, v) = json(&["construct", spec.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["construction"]["nodes"]["extra_singularities"], 6);
    assert_eq!(v["construction"]["nodes"]["real"], 6);
    let reals: Vec<&str> =
        v["surface"]["singularities"].as_array().unwrap().iter().map(|s| s["real_label"].as_str().unwrap()).collect();
    assert_eq!(reals, ["A_1^-"; 6]);
    assert_schema_valid(&v);
    // The written polynomial pair reads back as the same surface.
    let (code, w) = json(&["classify", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(w["surface"]["extra_singularities"], 6);
}

#[test]
fn construct_case_two_extreme() {
    let spec = scratch(
        "c2.json",
        r#"{"degree": 4, "kind": "QUARTIC_CASE", "case": 2, "invariants": {"m": 0},
            "components": [[{"point": ["1", "0"], "multiplicity": 12}]]}"#,
    );
    let (code, v) = json(&["construct", spec.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["quartic"]["labels"], serde_json::json!(["Q_10", "A_11"]));
    assert_eq!(v["construction"]["round_trip"], true);
    assert_schema_valid(&v);
}

#[test]
fn construct_ledger_violation() {
    let spec = scratch(
        "bad.json",
        r#"{"degree": 4, "kind": "QUARTIC_CASE", "case": 2, "invariants": {"m": 0},
            "components": [[{"point": ["1", "1"], "multiplicity": 5}]]}"#,
    );
    let (code, v) = json(&["construct", spec.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "SpecLedgerMismatch");
}

#[test]
fn construct_malformed_spec() {
    let spec = scratch("garbled.json", r#"{"degree": 4, "kind": "NOPE"}"#);
    let (code, _) = json(&["construct", spec.to_str().unwrap()]);
    assert_eq!(code, 3);
}

#[test]
fn sample_obj_residuals() {
    let out = monoid(&["sample", "x1*x2^2+x3^3", "x1^4", "--grid", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut worst: f64 = 0.0;
    let mut n = 0;
    for line in text.lines() {
        let v: Vec<f64> = line.strip_prefix("v ").unwrap().split(' ').map(|x| x.parse().unwrap()).collect();
        // F = x0·(x1·x2² + x3³) + x1⁴ at (1, x, y, z), normalized by the gradient.
        let h = [1.0, v[0], v[1], v[2]];
        let norm = h.iter().map(|x| x * x).sum::<f64>().sqrt();
        let [w, x, y, z] = h.map(|c| c / norm);
        let f = w * (x * y * y + z * z * z) + x.powi(4);
        let g = [x * y * y + z * z * z, w * y * y + 4.0 * x.powi(3), 2.0 * w * x * y, 3.0 * w * z * z];
        let gn = g.iter().map(|c| c * c).sum::<f64>().sqrt();
        worst = worst.max(f.abs() / gn);
        n += 1;
    }
    assert!(n > 9000);
    assert!(worst < 1e-9, "{worst}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
}

#[test]
fn sample_csv_and_degenerate_grid() {
    let out = monoid(&["sample", "x1*x2^2+x3^3", "x1^4", "--grid", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("x,y,z\n"));
    assert!(text.lines().count() <= 2);
}

#[test]
fn sample_chart_with_base_points() {
    // The parameter chart x2 = 1 contains the base point (0:1:0).
    let out = monoid(&["sample", "x1*x2^2+x3^3", "x1^4", "--grid", "3", "--chart", "1"]);
    let log = String::from_utf8_lossy(&out.stderr);
    assert!(log.contains("skipped 1 base points"), "{log}");
}
