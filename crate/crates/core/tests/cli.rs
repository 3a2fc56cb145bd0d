mod common;

use std::path::Path;
use std::process::Command;

use common::{algebra_path, fixtures_dir};
use serde_json::Value;

fn run(args: &[&Path], flags: &[&str], env: Option<&str>) -> (i32, Value, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_superhaar"));
    cmd.args(flags.iter().take(1))
        .args(args)
        .args(flags.iter().skip(1));
    match env {
        Some(v) => cmd.env("SUPERHAAR_MAX_ODD", v),
        None => cmd.env_remove("SUPERHAAR_MAX_ODD"),
    };
    let out = cmd.output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = if stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&stdout).unwrap()
    };
    (
        out.status.code().unwrap(),
        json,
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn module(alg: &str, name: &str) -> std::path::PathBuf {
    fixtures_dir()
        .join("modules")
        .join(alg)
        .join(format!("{name}.json"))
}

#[test]
fn validate_accepts_fixture() {
    let (code, json, _) = run(&[&algebra_path("osp12")], &["validate"], None);
    assert_eq!(code, 0);
    assert_eq!(json["valid"], true);
}

#[test]
fn validate_reports_parity_violation() {
    let dir = std::env::temp_dir().join("superhaar-cli-parity");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    // An even bracket landing on an odd element.
    std::fs::write(
        &path,
        r#"{"name":"broken","even_basis":["a"],"odd_basis":["x"],
           "brackets":[{"left":"a","right":"a","result":[{"basis":"x","coeff":"1"}]}]}"#,
    )
    .unwrap();
    let (code, json, _) = run(&[&path], &["validate"], None);
    assert_eq!(code, 2);
    assert_eq!(json["valid"], false);
    assert!(!json["violations"].as_array().unwrap().is_empty());
}

#[test]
fn unreadable_and_malformed_inputs_exit_one() {
    let (code, _, err) = run(&[Path::new("/nonexistent/alg.json")], &["invariant"], None);
    assert_eq!(code, 1);
    assert!(err.contains("cannot read"));
    let dir = std::env::temp_dir().join("superhaar-cli-malformed");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"name":"a","even_basis":["X"],"odd_basis":[],"extra":1}"#,
    )
    .unwrap();
    assert_eq!(run(&[&path], &["validate"], None).0, 1);
}

#[test]
fn invariant_reports_violator() {
    let (code, json, err) = run(&[&algebra_path("bad2")], &["invariant"], None);
    assert_eq!(code, 3);
    assert_eq!(json["violator"], "X");
    assert_eq!(json["lambda"], "1");
    assert_eq!(json["trace_condition"], false);
    assert!(err.contains("no invariant"));
}

#[test]
fn invariant_with_all_outputs() {
    let (code, json, _) = run(
        &[&algebra_path("g2_grassmann")],
        &["invariant", "--emit-matrix", "--emit-dual-pair", "--oracle"],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(json["oracle_dimension"], 1);
    assert_eq!(json["oracle_agrees"], true);
    assert_eq!(json["frobenius_matrix"].as_array().unwrap().len(), 4);
    assert_eq!(json["dual_pair"].as_array().unwrap().len(), 4);
    assert_eq!(json["z"][0]["monomial"], serde_json::json!(["x1", "x2"]));
}

#[test]
fn max_odd_bound_is_enforced() {
    let path = algebra_path("g3_grassmann");
    assert_eq!(run(&[&path], &["invariant"], Some("2")).0, 2);
    assert_eq!(run(&[&path], &["invariant"], Some("3")).0, 0);
    assert_eq!(run(&[&path], &["invariant"], Some("many")).0, 1);
}

#[test]
fn integrate_exit_codes() {
    let gl11 = algebra_path("gl11");
    let (code, json, _) = run(
        &[&gl11, &module("gl11", "adjoint_module")],
        &["integrate"],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(json["left_invariant"], true);

    let (code, json, _) = run(
        &[&gl11, &module("gl11", "jordan_module")],
        &["integrate"],
        None,
    );
    assert_eq!(code, 4);
    assert_eq!(json["error"], "not_semisimple");

    let bad2 = algebra_path("bad2");
    assert_eq!(
        run(
            &[&bad2, &module("bad2", "trivial_module")],
            &["integrate"],
            None
        )
        .0,
        3
    );

    // A module file for a different algebra.
    assert_eq!(
        run(
            &[&gl11, &module("sl2", "trivial_module")],
            &["integrate"],
            None
        )
        .0,
        1
    );
}

#[test]
fn integrate_rejects_invalid_module() {
    let dir = std::env::temp_dir().join("superhaar-cli-module");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sl2_bad.json");
    // e and f both act by the same nilpotent, so [e, f] = h is not respected.
    std::fs::write(
        &path,
        r#"{"algebra":"sl2","dim":2,"parities":["even","even"],
           "action":{"e":[["0","1"],["0","0"]],"f":[["0","1"],["0","0"]]}}"#,
    )
    .unwrap();
    let (code, json, _) = run(&[&algebra_path("sl2"), &path], &["integrate"], None);
    assert_eq!(code, 2);
    assert_eq!(json["valid"], false);
}
