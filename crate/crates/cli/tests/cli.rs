use std::fs;

use assert_cmd::Command;
use predicates::prelude::*;
use raycalc::report::{
    reserialize, CheckReport, ClassifyReport, GalileanReport, MilneTableReport, RealizeReport,
};
use serde_json::Value;

fn raycalc() -> Command {
    Command::cargo_bin("raycalc").unwrap()
}

fn stdout_of(args: &[&str]) -> (String, i32) {
    let out = raycalc().args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn classify_galilean_text() {
    raycalc()
        .args(["classify", "--algebra", "catalog:galilean", "--degree", "2", "--text"])
        .assert()
        .success()
        .stdout(predicate::str::contains("classes: 1\n"))
        .stdout(predicate::str::contains("Xi(b1, d1) = 1"));
}

#[test]
fn classify_milne_default_degree() {
    raycalc()
        .args(["classify", "--algebra", "catalog:milne:2", "--text"])
        .assert()
        .success()
        .stdout(predicate::str::contains("classes: 3\n"))
        .stdout(predicate::str::contains("realizable: false"));
}

#[test]
fn degree_bound_alias_and_json() {
    let (out, code) = stdout_of(&["classify", "--algebra", "catalog:galilean", "--degree-bound", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["class_dim"], 1);
    assert_eq!(v["degree_bound"], 3);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["fingerprint"].as_str().unwrap().len(), 64);
}

#[test]
fn inconclusive_exits_two() {
    raycalc()
        .args(["classify", "--algebra", "catalog:abelian:2", "--text"])
        .assert()
        .code(2)
        .stdout(predicate::str::contains("classes: 3\n"))
        .stderr(predicate::str::contains("inconclusive"));
}

#[test]
fn malformed_algebra_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"dim\": 2, \"names\": [\"x\", \"y\"], \"brackets\": [{\"i\": 0}], \"time_action\": [0, 0]}").unwrap();
    raycalc()
        .args(["classify", "--algebra", bad.to_str().unwrap()])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("missing field `j`"));
    fs::write(&bad, "{\"dim\": 2").unwrap();
    raycalc()
        .args(["classify", "--algebra", bad.to_str().unwrap()])
        .assert()
        .code(1);
    raycalc()
        .args(["classify", "--algebra", "catalog:nonsense"])
        .assert()
        .code(1);
    raycalc().args(["classify"]).assert().code(1);
}

#[test]
fn user_algebra_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    fs::write(
        &path,
        r#"{"dim": 3, "names": ["x", "p", "z"], "brackets": [{"i": 0, "j": 1, "k": 2, "num": 1, "den": 1}], "time_action": [0, 0, 0]}"#,
    )
    .unwrap();
    raycalc()
        .args(["classify", "--algebra", path.to_str().unwrap(), "--degree", "0", "--text"])
        .assert()
        .code(2)
        .stdout(predicate::str::contains("classes: 2\n"))
        .stderr(predicate::str::contains("inconclusive"));
}

fn xi_file(dir: &tempfile::TempDir, body: &str) -> String {
    let p = dir.path().join("xi.json");
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn check_passes_and_fails() {
    let dir = tempfile::tempdir().unwrap();
    let zero = xi_file(&dir, r#"{"dim": 10, "entries": []}"#);
    raycalc()
        .args(["check", "--algebra", "catalog:galilean", "--xi", &zero, "--text"])
        .assert()
        .success()
        .stdout(predicate::str::contains("result: pass"));

    let mass = xi_file(
        &dir,
        r#"{"dim": 10, "entries": [
            {"i": 3, "j": 6, "poly": "m"},
            {"i": 4, "j": 7, "poly": "m"},
            {"i": 5, "j": 8, "poly": "m"}]}"#,
    );
    raycalc()
        .args(["check", "--algebra", "catalog:galilean", "--xi", &mass])
        .assert()
        .success();

    let broken = xi_file(
        &dir,
        r#"{"dim": 10, "entries": [
            {"i": 3, "j": 6, "poly": "m"},
            {"i": 4, "j": 7, "poly": "m + t"},
            {"i": 5, "j": 8, "poly": "m"}]}"#,
    );
    raycalc()
        .args(["check", "--algebra", "catalog:galilean", "--xi", &broken, "--text"])
        .assert()
        .code(3)
        .stdout(predicate::str::contains("result: fail"))
        .stdout(predicate::str::contains("residual("));

    let wrong_dim = xi_file(&dir, r#"{"dim": 3, "entries": []}"#);
    raycalc()
        .args(["check", "--algebra", "catalog:galilean", "--xi", &wrong_dim])
        .assert()
        .code(1);
}

#[test]
fn realize_family_reports_obstruction() {
    raycalc()
        .args(["realize", "--m", "2", "--family", "--text"])
        .assert()
        .success()
        .stdout(predicate::str::contains("gamma_1_2 = 0"))
        .stdout(predicate::str::contains("realizable dimension: 2"));
}

#[test]
fn realize_theta_detects_mass() {
    raycalc()
        .args(["realize", "--m", "1", "--theta", "-v1*x1-v2*x2-v3*x3", "--text"])
        .assert()
        .success()
        .stdout(predicate::str::contains("gamma_1 = 1"))
        .stdout(predicate::str::contains("taylor extraction agrees: true"));
    let (out, code) = stdout_of(&["realize", "--m", "2", "--theta", "0"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["theta"]["entries"].as_array().unwrap().len(), 0);
    raycalc()
        .args(["realize", "--m", "2", "--theta", "q*x1"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("q"));
}

#[test]
fn milne_table_and_demo() {
    raycalc()
        .args(["milne-table", "--m", "2", "--text"])
        .assert()
        .success()
        .stdout(predicate::str::contains("P^(1,2) = 1/2*t^2*gamma_1 + t*gamma_2 + gamma_1_2"));
    raycalc()
        .args(["galilean-demo", "--mass", "3/2", "--text"])
        .assert()
        .success()
        .stdout(predicate::str::contains("detected mass: 3/2"))
        .stdout(predicate::str::contains("exponent depends on x or t: false"));
    raycalc().args(["milne-table", "--m", "0"]).assert().code(1);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    raycalc()
        .args(["milne-table", "--m", "3", "--output", path.to_str().unwrap()])
        .assert()
        .success()
        .stdout("");
    let v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["constants"].as_array().unwrap().len(), 6);
}

#[test]
fn json_reports_round_trip_byte_for_byte() {
    let (c, _) = stdout_of(&["classify", "--algebra", "catalog:milne:2"]);
    assert_eq!(reserialize::<ClassifyReport>(&c).unwrap(), c);
    let (c, _) = stdout_of(&["classify", "--algebra", "catalog:heisenberg"]);
    assert_eq!(reserialize::<ClassifyReport>(&c).unwrap(), c);
    let (r, _) = stdout_of(&["realize", "--m", "3", "--family"]);
    assert_eq!(reserialize::<RealizeReport>(&r).unwrap(), r);
    let (r, _) = stdout_of(&["realize", "--m", "2", "--theta", "v1_1*x1*t + b*v0_2"]);
    assert_eq!(reserialize::<RealizeReport>(&r).unwrap(), r);
    let (t, _) = stdout_of(&["milne-table", "--m", "4"]);
    assert_eq!(reserialize::<MilneTableReport>(&t).unwrap(), t);
    let (g, _) = stdout_of(&["galilean-demo"]);
    assert_eq!(reserialize::<GalileanReport>(&g).unwrap(), g);
    let dir = tempfile::tempdir().unwrap();
    let zero = xi_file(&dir, r#"{"dim": 3, "entries": [{"i": 0, "j": 1, "poly": "t"}]}"#);
    let (k, _) = stdout_of(&["check", "--algebra", "catalog:heisenberg", "--xi", &zero]);
    assert_eq!(reserialize::<CheckReport>(&k).unwrap(), k);
}

#[test]
fn runs_are_deterministic() {
    let a = stdout_of(&["classify", "--algebra", "catalog:milne:3"]);
    let b = stdout_of(&["classify", "--algebra", "catalog:milne:3"]);
    assert_eq!(a, b);
}
