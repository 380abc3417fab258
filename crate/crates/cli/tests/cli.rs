use std::process::{Command, Output};

use serde_json::Value;

fn spinbits(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinbits")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn spinor_mul_reports_the_single_term() {
    let out = spinbits(&["spinor", "mul", "--n", "8", "--p", "5", "--index", "11", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["index"].as_u64(), v["coeff"].as_str()), (Some(15), Some("i")));

    let v = json(&spinbits(&["spinor", "mul", "--n", "8", "--p", "5", "--index", "10", "--format", "json"]));
    assert_eq!((v["index"].as_u64(), v["coeff"].as_str()), (Some(14), Some("-i")));
}

#[test]
fn sigma_order_check_passes() {
    let out = spinbits(&["triality", "sigma", "--check-order"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS  sigma*^3 = Id"));
}

#[test]
fn tau_minus_one_eigenspace_has_dimension_seven() {
    let v = json(&spinbits(&["triality", "tau", "--eigen", "-1", "--format", "json"]));
    assert_eq!(v["dimension"].as_u64(), Some(7));
}

#[test]
fn s31_coordinates_have_nine_rows() {
    let out = spinbits(&["fields", "--sphere", "31", "--emit", "coords"]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 9);
    assert!(rows[0].starts_with("V1 = (-v2, v1, v4, -v3"));
    assert!(rows[8].starts_with("V9 = (-v18, v17"));
}

#[test]
fn fields_verify_passes_for_sphere_15() {
    let out = spinbits(&["fields", "--sphere", "15", "--verify", "--samples", "10", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["fail"].as_u64(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    let out = spinbits(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(spinbits(&["spinor", "mul", "--n", "8", "--p", "9", "--index", "0"]).status.code(), Some(2));
    assert_eq!(spinbits(&["triality", "sigma", "--eigen", "2"]).status.code(), Some(2));
    assert_eq!(spinbits(&["verify-all", "--criterion", "11"]).status.code(), Some(2));
}

#[test]
fn report_schema_and_fault_injection() {
    let out = spinbits(&["verify-all", "--criterion", "3", "--corrupt-sigma", "2,5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["fail"].as_u64(), Some(1));
    let failing: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert_eq!(failing[0]["name"], "[3] sigma* equals the printed 28x28 array");
    assert!(v["checks"][0].get("witness").is_some());
}

#[test]
fn zero_samples_keeps_golden_checks() {
    let v = json(&spinbits(&["verify-all", "--criterion", "7", "--samples", "0", "--format", "json"]));
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.contains("64 cells")));
    assert!(!names.iter().any(|n| n.contains("multiplicativity")));
}

#[test]
fn octonion_table_json_and_latex() {
    let v = json(&spinbits(&["octonion", "table", "--format", "json"]));
    assert_eq!(v.as_array().unwrap().len(), 8);
    assert_eq!(v[1][2], "-3");
    let latex = stdout(&spinbits(&["octonion", "table", "--format", "latex"]));
    assert!(latex.contains("\\begin{array}"));
}

#[test]
fn output_is_deterministic() {
    let args = ["octonion", "check", "--samples", "20", "--seed", "9", "--format", "json"];
    assert_eq!(spinbits(&args).stdout, spinbits(&args).stdout);
}

#[test]
fn forms_square_check() {
    let out = spinbits(&["forms", "omega", "--check-square"]);
    assert_eq!(out.status.code(), Some(0));
    let phi = stdout(&spinbits(&["forms", "phi", "--latex"]));
    assert!(phi.contains("\\wedge"));
}
