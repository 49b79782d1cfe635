use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn mirror(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mirror")).args(args).output().expect("binary runs")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = mirror(&full);
    assert!(out.status.success(), "{}", stderr(&out));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn zero_order_is_a_usage_error() {
    let out = mirror(&["periods", "--order", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error[usage]:"));
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_subcommand_is_rejected() {
    let out = mirror(&["bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error[usage]:"));
}

#[test]
fn dmax_beyond_order_is_a_usage_error() {
    let out = mirror(&["gw", "--dmax", "8", "--order", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error[usage]"));
}

#[test]
fn every_command_is_deterministic() {
    let commands: [&[&str]; 8] = [
        &["periods", "--order", "6"],
        &["monodromy"],
        &["gw", "--dmax", "5"],
        &["polytope"],
        &["glsm", "transpose"],
        &["kontsevich"],
        &["syz", "quintic-counts"],
        &["syz", "k3"],
    ];
    for args in commands {
        for format in ["table", "json"] {
            let mut full = vec!["--format", format];
            full.extend_from_slice(args);
            let first = mirror(&full);
            let second = mirror(&full);
            assert!(first.status.success(), "{args:?}: {}", stderr(&first));
            assert_eq!(first.stdout, second.stdout, "{args:?} {format}");
        }
    }
}

#[test]
fn json_envelope() {
    let v = json(&["gw", "--dmax", "2", "--order", "4"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "gw");
    assert_eq!(v["order"], 4);
    assert_eq!(v["result"]["kappa"][0], "5/1");
    assert_eq!(v["result"]["mirror_map"][2], "770/1");
    assert_eq!(v["result"]["instantons"][1]["n"], 609250);
}

#[test]
fn periods_report_the_residual() {
    let v = json(&["periods", "--order", "5"]);
    let residuals = v["result"]["residuals"].as_array().unwrap();
    assert_eq!(residuals[0]["leading"], serde_json::json!(["0/1", "0/1", "0/1", "0/1", "1/1"]));
    assert_eq!(residuals[1]["higher_terms_vanish"], true);
    assert_eq!(v["result"]["components"][0][1], "120/1");
}

#[test]
fn malformed_input_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let garbage = write(&dir, "bad.json", "{ not json");
    let out = mirror(&["polytope", "--in", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[input]:"));

    let missing = dir.path().join("absent.json");
    let out = mirror(&["syz", "classify", "--in", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let off_center = write(&dir, "shifted.json", "[[1, 1], [2, 1], [1, 2]]");
    let out = mirror(&["polytope", "--in", off_center.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let unbalanced =
        write(&dir, "vertex.json", "[[[1,1,0],[0,1,0],[0,0,1]],[[1,1,0],[0,1,0],[0,0,1]],[[1,1,0],[0,1,0],[0,0,1]]]");
    let out = mirror(&["syz", "classify", "--in", unbalanced.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn polytope_from_file() {
    let dir = TempDir::new().unwrap();
    let hexagon = write(&dir, "hexagon.json", r#"{"vertices": [[1,0],[0,1],[-1,1],[-1,0],[0,-1],[1,-1]]}"#);
    let v = json(&["polytope", "--in", hexagon.to_str().unwrap()]);
    assert_eq!(v["result"]["lattice_point_count"], 7);
    assert_eq!(v["result"]["dual_lattice_point_count"], 7);
    assert_eq!(v["result"]["reflexive"], true);
    assert_eq!(v["result"]["moduli_dimension"], Value::Null);

    let triangle = write(&dir, "triangle.json", "[[2,0],[0,2],[-1,-1]]");
    let v = json(&["polytope", "--in", triangle.to_str().unwrap()]);
    assert_eq!(v["result"]["reflexive"], false);
    assert_eq!(v["result"]["dual_lattice_points"], Value::Null);
}

#[test]
fn failed_factorization_is_an_invariant_error() {
    let dir = TempDir::new().unwrap();
    let triple = write(&dir, "triple.json", r#"{"p": [[2, 0], [0, 2]], "s": [[1, 0], [0, 1]], "t": [[1, 0], [0, 1]]}"#);
    let out = mirror(&["glsm", "transpose", "--in", triple.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).starts_with("error[invariant]:"));

    let negative = write(&dir, "negative.json", r#"{"p": [[-1]], "s": [[1]], "t": [[-1]]}"#);
    let out = mirror(&["glsm", "transpose", "--in", negative.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn glsm_transpose_from_file() {
    let dir = TempDir::new().unwrap();
    let triple = write(&dir, "triple.json", r#"{"p": [[2, 0], [0, 2]], "s": [[2, 0], [0, 2]], "t": [[1, 0], [0, 1]]}"#);
    let v = json(&["glsm", "transpose", "--in", triple.to_str().unwrap()]);
    assert_eq!(v["result"]["original"]["group"]["structure"]["torus_rank"], 0);
    assert_eq!(v["result"]["mirror"]["group"]["structure"]["torsion"], serde_json::json!([2, 2]));
}

#[test]
fn kahler_parameter_digits() {
    let dir = TempDir::new().unwrap();
    let magnitudes = write(&dir, "k.json", r#"{"magnitudes": [2.0, 1, 1, 1, 1, 1]}"#);
    let v = json(&["glsm", "kahler", "--in", magnitudes.to_str().unwrap()]);
    // r = 5 ln 2 / (2 pi)
    assert_eq!(v["result"]["r"][0], "0.551589000382");
    assert_eq!(v["result"]["in_charge_lattice"], false);

    let zero = write(&dir, "zero.json", r#"{"magnitudes": [0, 1, 1, 1, 1, 1]}"#);
    assert_eq!(mirror(&["glsm", "kahler", "--in", zero.to_str().unwrap()]).status.code(), Some(2));
    let short = write(&dir, "short.json", r#"{"magnitudes": [1, 1]}"#);
    assert_eq!(mirror(&["glsm", "kahler", "--in", short.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn k3_rejection_still_prints_the_report() {
    let out = mirror(&["--format", "json", "syz", "k3", "--fibres", "1,2"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["accepted"], false);
    assert_eq!(v["result"]["fibre_sum"], 3);
    assert!(stderr(&out).starts_with("error[invariant]:"));
}

#[test]
fn structured_is_an_alias_for_json() {
    let a = mirror(&["--format", "structured", "kontsevich"]);
    let b = mirror(&["--format", "json", "kontsevich"]);
    assert_eq!(a.stdout, b.stdout);
}
