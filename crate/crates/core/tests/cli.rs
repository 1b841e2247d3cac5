use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn mink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mink")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mink-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(path: &Path, text: &[u8]) -> String {
    std::fs::write(path, text).unwrap();
    path.display().to_string()
}

fn error_line(out: &Output) -> String {
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert_eq!(err.lines().count(), 1, "{err}");
    err
}

#[test]
fn hexagon_report() {
    let v = json(&mink(&["illum", "solve", "--body", "hexagon"]));
    assert_eq!(v["L"], 3);
    assert!((v["B"].as_f64().unwrap() - 6.0).abs() < 1e-6);
    assert_eq!(v["lights"].as_array().unwrap().len(), 3);
}

#[test]
fn lights_round_trip_into_check() {
    let out = mink(&["illum", "solve", "--body", "cube", "--dim", "3"]);
    let lights = write(&scratch("cube-lights.json"), &out.stdout);
    let v = json(&mink(&["illum", "check", "--body", "cube", "--dim", "3", "--lights", &lights]));
    assert_eq!(v["illuminates"], true);
    assert!(v["unlit"].as_array().unwrap().is_empty());

    let few = write(&scratch("few.json"), br#"{"lights": [[2, 2, 2]]}"#);
    let v = json(&mink(&["illum", "check", "--body", "cube", "--dim", "3", "--lights", &few]));
    assert_eq!(v["illuminates"], false);
    assert_eq!(v["unlitVertices"].as_array().unwrap().len(), 7);
}

#[test]
fn halfcover_certificate_round_trip() {
    let out = mink(&["cover", "cube-halfcover", "--dim", "3"]);
    assert_eq!(json(&out)["verdict"], "covered");
    let cert = write(&scratch("half3.json"), &out.stdout);
    let cost = json(&mink(&["cover", "cost", "--cert", &cert]));
    assert_eq!(cost, serde_json::json!({"cost": 16.0}));
    let verified = json(&mink(&["cover", "verify", "--cert", &cert]));
    assert_eq!(verified["verdict"], "covered");

    let converted = mink(&["cover", "to-lights", "--cert", &cert, "--eps", "1e-6"]);
    let v = json(&converted);
    assert_eq!(v["illuminates"], true);
    assert!(v["cost"].as_f64().unwrap() <= v["bound"].as_f64().unwrap() + 1e-3);
    let lights = write(&scratch("half3-lights.json"), &converted.stdout);
    let v = json(&mink(&["illum", "check", "--body", "cube", "--dim", "3", "--lights", &lights]));
    assert_eq!(v["illuminates"], true);
}

#[test]
fn points_round_trip_and_svg() {
    let h = 3f64.sqrt() / 2.0;
    let points = write(
        &scratch("triangle.json"),
        format!(r#"{{"dim": 2, "points": [[0, 0], [1, 0], [0.5, {h}]]}}"#).as_bytes(),
    );
    let svg = scratch("triangle.svg");
    let out = mink(&["smt", "solve", "--gauge", "euclidean", "--points", &points, "--svg", &svg.display().to_string()]);
    let v = json(&out);
    assert!((v["length"].as_f64().unwrap() - 3f64.sqrt()).abs() < 1e-4);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let again = write(&scratch("triangle-out.json"), &out.stdout);
    let w = json(&mink(&["smt", "solve", "--gauge", "euclidean", "--points", &again]));
    assert_eq!(v["length"], w["length"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["illum", "solve", "--body", "crosspolytope", "--dim", "3"][..],
        &["smt", "degrees", "--body", "hexagon", "--trials", "10", "--seed", "4"][..],
        &["cover", "cube-halfcover", "--dim", "2"][..],
    ] {
        let a = mink(args);
        let b = mink(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn star_test_subcommand() {
    let dirs = write(&scratch("square-dirs.json"), br#"{"dim": 2, "points": [[1, 1], [-1, 1], [1, -1], [-1, -1]]}"#);
    let v = json(&mink(&["smt", "star-test", "--body", "cube", "--directions", &dirs]));
    assert_eq!(v["isSMT"], true);
    let v = json(&mink(&["smt", "degrees", "--body", "euclidean", "--trials", "3", "--seed", "1"]));
    assert!(v["skipped"].is_string());
}

#[test]
fn validation_failures_exit_with_status_two() {
    let bad = write(&scratch("bad-body.json"), br#"{"dim": 2, "normals": [[1, 0], [0, 1]]}"#);
    let out = mink(&["illum", "solve", "--body", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(error_line(&out).starts_with("error[invalid-polytope]"));

    let garbled = write(&scratch("garbled.json"), b"{\"dim\": 2, \"points\": [");
    let out = mink(&["smt", "solve", "--gauge", "cube", "--points", &garbled]);
    assert_eq!(out.status.code(), Some(2));
    assert!(error_line(&out).starts_with("error[malformed-json]"));

    let out = mink(&["illum", "solve", "--body", "cube", "--dim", "2", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(error_line(&out).starts_with("error[usage]"));

    let out = Command::new(env!("CARGO_BIN_EXE_mink"))
        .args(["illum", "solve", "--body", "cube", "--dim", "3"])
        .env("MINK_MAX_PARTITIONS", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(error_line(&out).starts_with("error[partition-cap-exceeded]"));

    let out = mink(&["cover", "to-lights", "--cert", &write(&scratch("h2.json"), &mink(&["cover", "cube-halfcover", "--dim", "2"]).stdout), "--eps", "0.7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(error_line(&out).starts_with("error[invalid-epsilon]"));
}

#[test]
fn help_lists_the_subcommands() {
    let out = mink(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for cmd in ["illum", "cover", "smt", "table"] {
        assert!(text.contains(cmd));
    }
}

#[test]
fn table_reproduces() {
    let out = mink(&["table", "reproduce"]);
    let v = json(&out);
    assert_eq!(v["allMatch"], true);
}
