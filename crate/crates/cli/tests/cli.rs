use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subadjoint"))
}

fn run(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn catalog_pipes_into_check() {
    let (code, dump, _) = run(&["catalog", "twisted-cubic"], None);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["check", "-"], Some(&dump));
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["verdict"], "legendrian");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["inputs"]["seed"], subadjoint_cli::DEFAULT_SEED);
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["curve", "t", "t", "t"], None).0, 2);
    assert_eq!(run(&["curve", "-1/3*t^3", "t", "t^2"], None).0, 0);
    assert_eq!(run(&["frobnicate"], None).0, 1);
    let (code, _, err) = run(&["check", "-"], Some("n=2\nx0*x2 - x1^2\nx0 + x9\n"));
    assert_eq!(code, 1);
    assert!(err.contains("line 3, column 6"), "{err}");
    let perturbed = "n=2\nform=standard\nx2^2 - x1*x3 + x0*x1\nx0*x2 - x1^2\nx0*x3 - x1*x2\n";
    let (code, out, _) = run(&["check", "-"], Some(perturbed));
    assert_eq!(code, 2);
    assert_eq!(json(&out)["result"]["verdict"], "not-legendrian");
    let (code, out, _) = run(&["--budget", "1", "gb", "-"], Some(perturbed));
    assert_eq!(code, 3);
    assert_eq!(json(&out)["exhausted_budget"], "groebner_pairs");
}

#[test]
fn bracket_gb_and_nf() {
    let (_, dump, _) = run(&["catalog", "twisted-cubic"], None);
    let (code, out, _) = run(&["bracket", "-", "x2^2 - x1*x3", "x0*x2 - x1^2"], Some(&dump));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["bracket"], "-x1*x2 + x0*x3");
    let (code, out, _) = run(&["gb", "-"], Some(&dump));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["elements"].as_array().unwrap().len(), 3);
    let (_, out, _) = run(&["nf", "-", "x0*x3^2 - x1*x2*x3"], Some(&dump));
    assert_eq!(json(&out)["result"]["in_ideal"], true);
}

#[test]
fn algebra_and_classify() {
    let (_, dump, _) = run(&["catalog", "segre-5"], None);
    let (code, out, _) = run(&["algebra", "-"], Some(&dump));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["label"], "A1+B2");
    let (code, out, _) = run(&["classify", "--max-rank", "8", "--max-dim", "100"], None);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["accepted_simple"].as_array().unwrap().len(), 5);
    let (code, out, _) = run(&["--text", "classify", "--max-rank", "3", "--max-dim", "20"], None);
    assert_eq!(code, 0);
    assert!(out.contains("A1       3ω1"), "{out}");
}

#[test]
fn catalog_listing_and_xf() {
    let (code, out, _) = run(&["catalog"], None);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["entries"].as_array().unwrap().len(), subadjoint_core::catalog::ENTRY_NAMES.len());
    let (code, out, _) = run(&["xf", "y1^3", "--vars", "2"], None);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["degenerate"], true);
    assert_eq!(v["result"]["note"], "contained in a hyperplane");
    assert_eq!(run(&["catalog", "nope"], None).0, 1);
}
