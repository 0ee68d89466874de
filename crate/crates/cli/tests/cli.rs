use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};

const THREE_ELEMENT: &str = r#"{"type":"table","n":3,"values":[0,1,2,2.5,2,2.8,3,3]}"#;

fn spec_file(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn three_element() -> PathBuf {
    spec_file("three.json", THREE_ELEMENT)
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_subpoly")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, text) = run(args);
    (code, serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")))
}

#[test]
fn shrink_supergradient() {
    let f = three_element();
    let (code, v) = run_json(&["gradient", "--function", f.to_str().unwrap(), "--set", "1", "--variant", "shrink"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({ "vector": [0.0, 1.5, 1.8] }));
    let (_, v) = run_json(&["gradient", "--function", f.to_str().unwrap(), "--set", "0b001", "--variant", "grow"]);
    assert_eq!(v, json!({ "vector": [1.0, 2.0, 2.0] }));
    let (_, v) = run_json(&[
        "gradient", "--function", f.to_str().unwrap(), "--set", "2", "--variant", "sub", "--perm", "2,1,3",
    ]);
    assert_eq!(v, json!({ "vector": [0.5, 2.0, 0.5] }));
}

#[test]
fn tilde_is_rejected_with_witness() {
    let f = three_element();
    let (code, v) = run_json(&[
        "membership", "--poly", "superdiff", "--set", "1", "--point", "1,1.5,1.8", "--function",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({ "member": false, "witness": "{2}" }));
    let (_, v) = run_json(&[
        "membership", "--poly", "superdiff", "--set", "1", "--point", "0,1.5,1.8", "--function",
        f.to_str().unwrap(),
    ]);
    assert_eq!(v, json!({ "member": true }));
}

#[test]
fn verify_is_reproducible() {
    let f = three_element();
    let args = ["verify", "--suite", "sandwich", "--function", f.to_str().unwrap(), "--trials", "100", "--seed", "7"];
    let (code, first) = run(&args);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["passed"], json!(true));
    let (_, second) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn evaluation_and_marginals() {
    let f = three_element();
    let f = f.to_str().unwrap();
    let (_, v) = run_json(&["eval", "--function", f, "--set", "2,3"]);
    assert_eq!(v, json!({ "set": "{2,3}", "value": 3.0 }));
    let (_, v) = run_json(&["marginal", "--function", f, "--element", "1", "--set", "{3}"]);
    assert_eq!(v["value"], json!(0.8));
    let (_, v) = run_json(&["eval", "--function", f, "--set", ""]);
    assert_eq!(v["value"], json!(0.0));
}

#[test]
fn extensions() {
    let f = three_element();
    let f = f.to_str().unwrap();
    let (_, v) = run_json(&["extension", "--function", f, "--kind", "concave", "--point", "0.5,0.5,0.5"]);
    assert_eq!(v["value"], json!(2.4));
    let (_, v) = run_json(&["extension", "--function", f, "--kind", "bar", "--point", "0.5,0.5,0.5"]);
    assert_eq!(v["value"], json!(2.5));
    let (_, v) = run_json(&["extension", "--function", f, "--kind", "lovasz", "--point", "0.5,1,0"]);
    assert_eq!(v["value"], json!(2.25));
    let (code, _) = run_json(&["extension", "--function", f, "--kind", "lovasz", "--point", "1.5,0,0"]);
    assert_eq!(code, 2);
}

#[test]
fn optimization() {
    let f = three_element();
    let f = f.to_str().unwrap();
    let (code, v) = run_json(&["minimize", "--function", f]);
    assert_eq!(code, 0);
    assert_eq!(v["minimizer"], json!("{}"));
    assert_eq!(v["value"], json!(0.0));
    let (_, v) = run_json(&["minimize", "--function", f, "--method", "minnorm"]);
    assert_eq!(v["value"], json!(0.0));
    let (_, v) = run_json(&["maximize", "--function", f, "--method", "brute", "--constraint", "cardinality:1"]);
    assert_eq!(v["value"], json!(2.0));
    let (_, v) = run_json(&[
        "maximize", "--function", f, "--constraint", "cardinality:2", "--k", "2", "--l", "2",
    ]);
    assert_eq!(v["value"], json!(3.0));
    assert_eq!(v["certificate"]["verdict"], json!(true));
    let (code, _) = run_json(&["maximize", "--function", f, "--constraint", "budget:2"]);
    assert_eq!(code, 2);
}

#[test]
fn separation_and_duals() {
    let f = three_element();
    let g = spec_file("g_below.json", r#"{"type":"table","n":3,"values":[0,0,0,1,0,1,1,2]}"#);
    let (code, v) = run_json(&[
        "separate", "--function", f.to_str().unwrap(), "--other", g.to_str().unwrap(), "--side", "convex",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["h"], json!([1.0, 1.5, 0.5]));
    assert_eq!(v["sandwich"]["verdict"], json!(true));
    let (_, v) = run_json(&["fenchel", "--function", f.to_str().unwrap(), "--point", "1,1,1", "--side", "concave"]);
    assert_eq!(v, json!({ "value": -1.0, "set": "{2}" }));
    let (code, v) = run_json(&[
        "separate", "--function", g.to_str().unwrap(), "--other", f.to_str().unwrap(), "--side", "convex",
    ]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("premise"));
}

#[test]
fn error_exit_codes() {
    let f = three_element();
    let f = f.to_str().unwrap();
    let (code, v) = run_json(&["eval", "--function", f, "--set", "1", "--bogus"]);
    assert_eq!(code, 2);
    assert!(v.get("error").is_some());
    let (code, _) = run_json(&["eval", "--function", f, "--set", "4"]);
    assert_eq!(code, 2);
    let bad = spec_file("bad.json", r#"{"type":"table","n":2,"values":[0,1]}"#);
    let (code, _) = run_json(&["eval", "--function", bad.to_str().unwrap(), "--set", "1"]);
    assert_eq!(code, 2);
    let (code, _) = run_json(&["eval", "--function", "/nonexistent/f.json", "--set", "1"]);
    assert_eq!(code, 2);

    let ones = vec!["1"; 26].join(",");
    let big = spec_file("big.json", &format!(r#"{{"type":"modular","weights":[{ones}]}}"#));
    let (code, v) = run_json(&[
        "membership", "--poly", "superdiff", "--set", "1", "--point", &ones, "--function", big.to_str().unwrap(),
    ]);
    assert_eq!(code, 3);
    assert!(v["np_hard_note"].is_string());
}
