use std::path::PathBuf;
use std::process::{Command, Output};

use bentforge::{parse_function, BooleanFunction};

fn bentforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bentforge"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn tmp(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn eval_round_trips_through_hex() {
    let out = bentforge(&["--json", "eval", "x1*x2*x3 + x1*x4 + x2*x5 + x6"]);
    assert_eq!(out.status.code(), Some(0));
    let first = json(&out);
    let hex = first["hex"].as_str().unwrap().to_string();
    let again = json(&bentforge(&["--json", "eval", &format!("hex:{hex}")]));
    assert_eq!(first, again);
    let f = parse_function("x1*x2*x3 + x1*x4 + x2*x5 + x6", None).unwrap();
    assert_eq!(BooleanFunction::from_hex(&hex).unwrap(), f);
}

#[test]
fn synth_from_file() {
    let path = tmp("four_rows.txt", "00110\n01101\n10000\n11011\n\n1\n");
    let out = bentforge(&["--json", "synth", "--rows", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["n"], 5);
    assert_eq!(v["class"], "plateaued");
    assert_eq!(v["s"], 3);
    assert_eq!(
        v["anf"],
        "x3 + x1*x2 + x1*x4 + x1*x5 + x2*x3 + x2*x4 + x3*x4 + x3*x5 + x4*x5"
    );
}

#[test]
fn exit_codes() {
    let out = bentforge(&["eval", "x1 +* x2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let missing = tmp("missing_dual.txt", "00\n01\n");
    assert_eq!(bentforge(&["synth", missing.to_str().unwrap()]).status.code(), Some(1));
    // Hypothesis failure.
    let out = bentforge(&["construct", "--verify", "--vars", "2", "gen-rothaus-b", "x1*x2", "x1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_gen_rothaus_b() {
    let out = bentforge(&[
        "--json",
        "construct",
        "--vars",
        "2",
        "gen-rothaus-b",
        "x1*x2",
        "x1*x2 + x1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["claim_holds"], true);
    assert_eq!(v["report"]["class"], "bent");
}

#[test]
fn worked_examples_all_pass() {
    let out = bentforge(&["paper-examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert!(text.lines().last().unwrap().ends_with("passed"));
}
