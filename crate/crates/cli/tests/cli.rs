//! Runs the built binary: exit codes, the documented examples, and
//! certificate round-trips through `verify`.

use std::path::Path;
use std::process::{Command, Output};

use holonomy_core::certificate::Certificate;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_holonomy-cert"));
    c.env_remove("HOLONOMY_CERT_MAX_PAIRS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn read_cert(path: &Path) -> Certificate {
    Certificate::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn derive_curve_prints_the_curve() {
    let o = run(&["derive-curve"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("(s - 2)(s + 1)^2 t^4 - (s - 2)(s + 2)(s + 1) t^2 - 1 = 0"));
}

#[test]
fn pair_cap_from_environment() {
    let o = bin().args(["derive-curve"]).env("HOLONOMY_CERT_MAX_PAIRS", "400").output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("route: Fallback"), "{}", stdout(&o));
    let o = bin().args(["derive-curve"]).env("HOLONOMY_CERT_MAX_PAIRS", "50").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn certify_minus_fifty_has_no_real_solutions() {
    let o = run(&["--format", "json", "certify", "--n", "-50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let c = Certificate::from_json(&stdout(&o)).unwrap();
    assert_eq!(c.kind, "slope");
    assert_eq!(c.verdict, "NO_REAL_SOLUTIONS");
    assert_eq!(c.schema, 1);
}

#[test]
fn alexander_example_verdict_false() {
    let o = run(&["--format", "json", "alexander", "--poly", "x^4-2*x^3+3*x^2-2*x+1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(Certificate::from_json(&stdout(&o)).unwrap().verdict, "false");
    let o = run(&["--format", "json", "alexander", "--poly", "1"]);
    assert_eq!(Certificate::from_json(&stdout(&o)).unwrap().verdict, "true");
}

#[test]
fn bad_input_exits_two() {
    for args in [
        vec!["certify", "--n", "1", "--bogus"],
        vec!["frobnicate"],
        vec!["certify", "--n", "0"],
        vec!["witness", "--n", "-3"],
        vec!["classify", "--s", "1/0"],
        vec!["classify", "--s", "abc"],
        vec!["alexander", "--poly", "x*y+1"],
        vec!["alexander", "--poly", "x/2+1"],
        vec!["scan", "--from", "5", "--to", "1"],
        vec!["scan", "--from", "1", "--to", "2", "--jobs", "0"],
        vec!["--tol", "speed=3", "threshold"],
        vec!["--format", "csv", "domains"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
    assert!(stderr(&run(&["certify", "--bogus"])).contains("Usage"));
}

#[test]
fn classify_in_a_gap_of_u_is_rejected() {
    // (p3, 2) carries no real characters
    let o = run(&["classify", "--s", "19/10"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn classify_reports_both_classes() {
    let o = run(&["classify", "--s", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SU2"));
    let o = run(&["classify", "--s", "3"]);
    assert!(stdout(&o).contains("SL2R"), "{}", stdout(&o));
}

#[test]
fn scan_report_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("scan.csv");
    let o = run(&["--format", "csv", "--output", csv.to_str().unwrap(), "scan", "--from", "1", "--to", "5", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let body = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines[0], "n,verdict,root_count,witness_lo,witness_hi");
    assert_eq!(lines.len(), 6);
    assert!(lines[1..].iter().all(|l| l.contains("REAL_SOLUTION_FOUND")));

    let o = run(&["scan", "--from", "1", "--to", "5"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert!(text.starts_with("KIND"));
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.contains("REAL_SOLUTION_FOUND")));
}

fn round_trip(args: &[&str]) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let mut full = vec!["--output", path.to_str().unwrap()];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    let v = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{args:?}: {}{}", stdout(&v), stderr(&v));
    assert!(stdout(&v).contains("reproduced"));
}

#[test]
fn certificates_round_trip_through_verify() {
    round_trip(&["certify", "--n", "-50"]);
    round_trip(&["certify", "--n", "3"]);
    round_trip(&["witness", "--n", "2"]);
    round_trip(&["alexander", "--poly", "x^4-2*x^3+3*x^2-2*x+1"]);
    round_trip(&["domains"]);
    round_trip(&["irreducibility"]);
    round_trip(&["classify", "--s", "3"]);
    round_trip(&["classify", "--s", "0"]);
    round_trip(&["apoly-validate"]);
    round_trip(&["derive-curve", "--fallback"]);
    round_trip(&["scan", "--from", "-3", "--to", "3"]);
}

#[test]
fn tampered_certificate_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let o = run(&["--output", path.to_str().unwrap(), "certify", "--n", "-50"]);
    assert_eq!(o.status.code(), Some(0));
    let mut c = read_cert(&path);
    c.verdict = "REAL_SOLUTION_FOUND".into();
    std::fs::write(&path, c.to_json()).unwrap();
    let v = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(1), "{}", stdout(&v));
}

#[test]
fn threshold_with_tolerance_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("threshold.json");
    let o = run(&["--tol", "bound=1/100000", "--output", path.to_str().unwrap(), "threshold"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("N0 = "));
    let c = read_cert(&path);
    assert_eq!(c.kind, "threshold");
    assert_eq!(c.inputs["bound_tolerance"], "1/100000");
    let v = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
}
