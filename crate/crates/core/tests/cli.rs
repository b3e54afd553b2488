use std::process::Command;

use cyclopell::cli::{run, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cyclopell").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn pell_both_methods_agree() {
    let (code, out, _) = invoke(&["pell", "5", "--method", "both"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("(a, b) = (9, 4)"), "{out}");
    assert!(out.contains("methods agree: solution = fundamental^1"), "{out}");
}

#[test]
fn pell_json_schema() {
    let (code, out, _) = invoke(&["pell", "7", "--json"]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc["p"], 7);
    assert_eq!(doc["method"], "dirichlet");
    assert_eq!(doc["a"], "8");
    assert_eq!(doc["b"], "3");
    assert_eq!(doc["fundamental_power"], 1);
    assert_eq!(doc["trace"]["case"], "3mod4");
    assert_eq!(doc["trace"]["y2"], "-3");
    assert_eq!(doc["trace"]["f_at_i"]["re"], "-3");
}

#[test]
fn pell_json_values_are_decimal_strings() {
    let (code, out, _) = invoke(&["pell", "61", "--json", "--method", "cf"]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc["a"], "1766319049");
    assert_eq!(doc["b"], "226153980");
    assert!(doc["trace"].is_null());

    let (_, out, _) = invoke(&["pell", "97", "--json"]);
    let doc: Value = serde_json::from_str(out.trim()).unwrap();
    for (_, v) in doc["trace"].as_object().unwrap() {
        assert!(v.is_string() || v.is_null() || v.is_object(), "{v}");
    }
    let a: num_bigint::BigInt = doc["a"].as_str().unwrap().parse().unwrap();
    let b: num_bigint::BigInt = doc["b"].as_str().unwrap().parse().unwrap();
    assert_eq!(&a * &a - num_bigint::BigInt::from(97) * &b * &b, 1.into());
}

#[test]
fn pell_falls_back_to_cf() {
    let (code, out, err) = invoke(&["pell", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("(2, 1)"));
    assert!(err.contains("continued fractions"));

    let (code, out, _) = invoke(&["pell", "15", "--method", "both"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("(4, 1)"), "{out}");
}

#[test]
fn pell_rejects_bad_input() {
    assert_eq!(invoke(&["pell", "12"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["pell", "1"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["pell", "abc"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["pell", "5", "--method", "magic"]).0, EXIT_USAGE);
    let (code, _, err) = invoke(&["pell", "503"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--allow-large"));
}

#[test]
fn decompose_seven() {
    let (code, out, _) = invoke(&["decompose", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("f = 2x^3 + x^2 - x - 2"), "{out}");
    assert!(out.contains("g = -x^2 - x"), "{out}");
    assert!(out.contains("OK"));

    let (code, out, _) = invoke(&["decompose", "5", "--json"]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc["f"], serde_json::json!(["2", "1", "2"]));
    assert_eq!(doc["g"], serde_json::json!(["0", "-1"]));
    assert_eq!(doc["identity"], true);

    assert_eq!(invoke(&["decompose", "9"]).0, EXIT_USAGE);
}

#[test]
fn check_unit_reports() {
    let (code, out, _) = invoke(&["check-unit", "3", "4,3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("unit: false (norm 13)"), "{out}");
    assert!(out.contains("primary: true"), "{out}");

    let (code, out, _) = invoke(&["check-unit", "5", "1,1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("unit: true"), "{out}");
    assert!(out.contains("unit ratio exponent: 1"), "{out}");

    let (code, out, _) = invoke(&["check-unit", "5", "-1,0,-1,-1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("real: true"), "{out}");
}

#[test]
fn normalize_reports_primary_associate() {
    let (code, out, _) = invoke(&["normalize", "5", "0,0,7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("primary exponent: 3"), "{out}");
    assert!(out.contains("coefficients: 7,0,0,0"), "{out}");
}

#[test]
fn malformed_elements_are_usage_errors() {
    let (code, _, err) = invoke(&["check-unit", "5", "1,two"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("malformed"));
    assert_eq!(invoke(&["normalize", "4", "1,2"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["normalize", "5", "1,-1"]).0, EXIT_USAGE);
    assert_eq!(invoke(&[]).0, EXIT_USAGE);
}

#[test]
fn verify_small_range() {
    let (code, out, _) = invoke(&["verify", "13"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0 failed"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cyclopell");
    let ok = Command::new(bin).args(["pell", "13", "--method", "both"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("(649, 180)"));
    let bad = Command::new(bin).args(["check-unit", "6", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
