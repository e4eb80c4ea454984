use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lagrange-kit"))
        .args(args)
        .env_remove("LAGRANGE_KIT_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is json");
    (out.status.code().unwrap(), v)
}

fn values(v: &Value) -> Vec<String> {
    v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["value"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn catalan_coefficients() {
    let (code, v) = json(&["coeffs", "--R", "1,2,1", "--k", "1", "--order", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(values(&v), ["0", "1", "2", "5", "14", "42"]);
}

#[test]
fn trivial_kernel_gives_x() {
    let (_, v) = json(&["coeffs", "--R", "1", "--order", "4"]);
    assert_eq!(values(&v), ["0", "1", "0", "0"]);
}

#[test]
fn exponential_kernel_forest_pattern() {
    let (_, v) = json(&["coeffs", "--R", "exp", "--k", "2", "--order", "6"]);
    // 2 n^(n-3) / (n-2)! at x^n
    assert_eq!(values(&v), ["0", "0", "1", "2", "4", "25/3"]);
}

#[test]
fn csv_headers_are_fixed() {
    let out = run(&["coeffs", "--R", "one-plus-t-squared", "--order", "3", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,coefficient\n0,0\n1,1\n2,2\n");
    let out = run(&["oracle", "prufer", "--m", "3", "--format", "csv"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("label,oracle,formula,match\n"));
}

#[test]
fn invert_worked_pair() {
    let (code, v) = json(&["invert", "--f", "0,1,-1", "--order", "6"]);
    assert_eq!(code, 0);
    assert_eq!(values(&v), ["0", "1", "1", "2", "5", "14"]);
}

#[test]
fn identities_pass() {
    let (code, v) = json(&["identity", "lacasse", "--order", "12"]);
    assert_eq!((code, v["status"].as_str()), (0, Some("pass")));
    assert_eq!(v["identity"], "lacasse");
    assert_eq!(v["order"], 12);
    assert!(v["first_failure"].is_null());

    let (code, v) = json(&["identity", "fc-polynomial", "--p", "3", "--i", "0", "--j", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["polynomial"], "2 - x");

    let (code, _) = json(&["identity", "jensen", "--p", "0", "--j", "1", "--r", "2", "--n-max", "5"]);
    assert_eq!(code, 0);
}

#[test]
fn oracles_match() {
    let (code, v) = json(&["oracle", "prufer", "--m", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"][0]["oracle"], "125");
    assert_eq!(v["rows"][0]["formula"], "125");
    let (code, v) = json(&["oracle", "cycle-lemma", "--alphabet", "-1,0,1", "--len", "6"]);
    assert_eq!(code, 0);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["matches"] == true));
    let (code, v) = json(&["oracle", "ordered-forest", "--n", "1", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["rows"][0]["oracle"], "1");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["identity", "no-such-identity"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "prufer", "--m", "12"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "spanning"]).status.code(), Some(2));
    assert_eq!(run(&["coeffs", "--R", "1,2,x"]).status.code(), Some(2));
    assert_eq!(run(&["coeffs", "--R", "1", "--order", "0"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn parse_error_reports_position() {
    let out = run(&["coeffs", "--R", "1,2,x"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 4"), "{err}");
}

#[test]
fn order_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lagrange-kit"))
        .args(["coeffs", "--R", "1", "--order", "11"])
        .env("LAGRANGE_KIT_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["coeffs", "--R", "1", "--order", "201"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for format in ["json", "csv"] {
        let args = ["identity", "schur-jabotinsky", "--order", "16", "--seed", "3", "--format", format];
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn list_names_everything() {
    let (code, v) = json(&["list"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracles"].as_array().unwrap().len(), 5);
    assert!(v["identities"].as_array().unwrap().iter().any(|n| n == "raney"));
}
