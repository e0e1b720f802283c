use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn suspec() -> Command {
    let mut c = Command::cargo_bin("suspec").unwrap();
    c.env_remove("SUSPEC_PRECISION_BITS").env_remove("SUSPEC_PRIME_BOUND");
    c
}

fn json_of(args: &[&str]) -> Value {
    let out = suspec().args(args).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn volume_record() {
    let v = json_of(&["volume", "--k", "1", "--n", "3", "--format", "json"]);
    assert_eq!(v["coeff"], "1/27648");
    assert_eq!(v["pi_exp"], 3);
    assert_eq!(v["sqrtD_exp"], 0);
    let x: f64 = v["float"].as_str().unwrap().parse().unwrap();
    assert!((x - std::f64::consts::PI.powi(3) / 27648.0).abs() < 1e-15);
}

#[test]
fn zeta_two() {
    let v = json_of(&["zeta", "--s", "2"]);
    assert_eq!((v["coeff"].as_str(), v["pi_exp"].as_i64()), (Some("1/6"), Some(2)));
    let v = json_of(&["zeta", "--s", "-1"]);
    assert_eq!(v["exact"], "-1/12");
}

#[test]
fn multiplicity_reference_value() {
    let v = json_of(&["multiplicity", "--k", "1", "--n", "3", "--tau", "3,2,1", "--h", "24576"]);
    assert_eq!(v["exact"], "7");
    assert_eq!(v["h_m"], "24576");
    assert!(v.get("warning").is_none());
}

#[test]
fn non_integral_multiplicity_warns() {
    suspec()
        .args(["multiplicity", "--k", "1", "--n", "3", "--tau", "3,2,1", "--h", "1"])
        .assert()
        .success()
        .stderr(predicate::str::contains("warning"))
        .stdout(predicate::str::contains("7/24576"));
}

#[test]
fn even_n_error_envelope() {
    let v = json_of(&["multiplicity", "--k", "1", "--n", "4", "--tau", "4,3,2,1", "--h", "81", "--c", "2", "--m", "3"]);
    assert_eq!(v["error_bound"], 2.0);
    assert!(v["exact"].is_null());
    suspec()
        .args(["multiplicity", "--k", "1", "--n", "4", "--tau", "4,3,2,1", "--h", "81", "--c", "2"])
        .assert()
        .code(1);
}

#[test]
fn rationality_equal() {
    let v = json_of(&["rationality", "--k", "2", "--n", "3", "--h1", "5", "--h2", "11"]);
    assert_eq!(v["equal"], true);
    assert_eq!(v["lhs"], v["rhs"]);
    let v = json_of(&["rationality", "--k", "1", "--n", "2", "--tau1", "9,6,5", "--tau2", "9,6,5,2,1"]);
    assert_eq!(v["equal"], true);
}

#[test]
fn rationality_bad_pair_is_validation_error() {
    suspec()
        .args(["rationality", "--k", "1", "--n", "2", "--tau1", "9,6,4", "--tau2", "9,6,5,2,1"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("error"));
}

#[test]
fn cohomology_matches_multiplicity() {
    let c = json_of(&["cohomology", "--k", "3", "--n", "3", "--tau", "3,2,1", "--h", "1000"]);
    let m = json_of(&["multiplicity", "--k", "3", "--n", "3", "--tau", "3,2,1", "--h", "1000"]);
    assert_eq!(c["main_term"], m["main_term"]);
    assert_eq!(c["exact"], m["exact"]);
    suspec().args(["cohomology", "--k", "1", "--n", "3", "--tau", "3,2,0", "--h", "1"]).assert().code(1);
}

#[test]
fn heisenberg_check_passes() {
    let v = json_of(&["heisenberg-check", "--n", "4", "--count", "20", "--seed", "3"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["count"], 20);
}

#[test]
fn selfcheck_passes() {
    let out = suspec().args(["selfcheck", "--precision-bits", "128"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 12);
    assert!(v["suites"][0].get("elapsed_ms").is_none());
}

#[test]
fn selfcheck_single_suite_csv() {
    suspec()
        .args(["selfcheck", "--suite", "3", "--format", "csv"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("id,name,passed,detail,budget_ms\n3,lambda_dual_route,true,"));
}

#[test]
fn sweep_csv_is_ordered_and_deterministic() {
    let args = ["sweep", "--k", "3,1..2,4", "--n", "3..4", "--tau-offset", "0,2", "--h", "1,24576", "--format", "csv"];
    let a = suspec().args(args).output().unwrap();
    let b = suspec().args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "k,D,n,tau,h,integrable,cohomological,main_term,exact,float,error"
    );
    let rows: Vec<&str> = lines.collect();
    // k = 4 is skipped; 3 fields x 2 n x 2 offsets x 2 h
    assert_eq!(rows.len(), 24);
    assert!(rows[0].starts_with("1,-4,3,\"3,2,1\",1,"));
    assert!(rows[1].starts_with("1,-4,3,\"3,2,1\",24576,true,true,7,7,7.00000000000000e0,"));
    assert!(rows[23].starts_with("3,-3,4,\"6,5,4,3\",24576,"));
}

#[test]
fn field_record() {
    let v = json_of(&["field", "--k", "21", "--n", "3"]);
    assert_eq!(v["D"], -84);
    assert_eq!(v["T"], serde_json::json!([2, 3, 7]));
}

#[test]
fn lvalue_record() {
    let v = json_of(&["lvalue", "--k", "1", "--s", "3", "--precision-bits", "128"]);
    assert_eq!(v["coeff"], "1/16");
    assert!(v["numeric_rel_diff"].as_f64().unwrap() < 1e-10);
    let v = json_of(&["lvalue", "--k", "1", "--s", "-2"]);
    assert_eq!(v["exact"], "-1/2");
}

#[test]
fn config_validation() {
    suspec().args(["zeta", "--s", "2", "--precision-bits", "32"]).assert().code(1);
    suspec().args(["zeta", "--s", "2"]).env("SUSPEC_PRECISION_BITS", "32").assert().code(1);
    suspec().args(["volume", "--k", "1", "--n", "3", "--prime-bound", "10"]).assert().code(1);
    let v: Value = serde_json::from_slice(
        &suspec().args(["zeta", "--s", "2"]).env("SUSPEC_PRECISION_BITS", "64").output().unwrap().stdout,
    )
    .unwrap();
    assert!(v["float"].as_str().unwrap().len() < 25);
}

#[test]
fn usage_errors_exit_one() {
    suspec().arg("--bogus").assert().code(1).stderr(predicate::str::contains("Usage"));
    suspec().arg("frobnicate").assert().code(1);
    suspec().args(["field", "--k", "12"]).assert().code(1).stderr(predicate::str::contains("squarefree"));
    suspec().args(["zeta", "--s", "3"]).assert().code(1);
    suspec().args(["multiplicity", "--k", "1", "--n", "3", "--tau", "3,3,1", "--h", "1"]).assert().code(1);
}

#[test]
fn human_format() {
    suspec()
        .args(["volume", "--k", "1", "--n", "3", "--format", "human"])
        .assert()
        .success()
        .stdout(predicate::str::contains("coeff").and(predicate::str::contains("1/27648")));
}
