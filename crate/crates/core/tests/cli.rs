use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opn-bounds")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    bin(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(bin(args).stdout).unwrap()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn lp_solve_prints_bound() {
    let text = stdout(&["lp", "solve"]);
    assert!(text.contains("99/37·ω − 187/37 ≤ Ω"), "{text}");
    let text = stdout(&["lp", "solve", "--variant", "no3"]);
    assert!(text.contains("51/19·ω − 46/19 ≤ Ω"), "{text}");
}

#[test]
fn solve_output_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("solve.json");
    assert_eq!(code(&["lp", "solve", "--out", path.to_str().unwrap()]), 0);
    let json = read_json(&path);
    assert_eq!(json["result"]["a"], "99/37");
    assert_eq!(json["result"]["b"], "-187/37");

    let checked = dir.path().join("check.json");
    assert_eq!(code(&["lp", "check", path.to_str().unwrap(), "--out", checked.to_str().unwrap()]), 0);
    let json = read_json(&checked);
    assert_eq!(json["a"], "99/37");
    assert_eq!(json["b"], "-187/37");
}

#[test]
fn invalid_certificate_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("bad.json");
    let mut multipliers = serde_json::Map::new();
    for (id, c) in [
        ("5.1", "1"), ("5.2", "99/37"), ("5.3", "28/37"), ("5.4", "28/37"), ("5.5", "25/37"),
        ("5.6", "20/37"), ("5.7", "25/37"), ("5.8", "28/37"), ("5.9", "4/37"), ("5.10", "1/37"),
        ("5.11", "1/37"), ("5.12", "1/37"), ("5.13", "4/37"), ("5.14", "1"), ("5.15", "8/37"),
        ("5.16", "5/37"), ("5.17", "8/37"), ("5.18", "2/37"), ("5.19", "1/37"),
    ] {
        multipliers.insert(id.into(), c.into());
    }
    let body = serde_json::json!({ "variant": "standard", "multipliers": multipliers });
    std::fs::write(&cert, body.to_string()).unwrap();
    let out = dir.path().join("verdict.json");
    assert_eq!(code(&["lp", "check", cert.to_str().unwrap(), "--out", out.to_str().unwrap()]), 1);
    let json = read_json(&out);
    assert_eq!(json["valid"], false);
    assert!(json["violations"][0].as_str().unwrap().contains("S31_ST"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["verify", "--lemma", "no-such-lemma"]), 2);
    assert_eq!(code(&["classify", "3"]), 2);
    assert_eq!(code(&["link", "4"]), 2);
    assert_eq!(code(&["lp", "check", "/nonexistent/cert.json"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["verify", "--lemma", "modularity", "--bound", "5"]), 2);
}

#[test]
fn exhausted_budget_exits_three() {
    assert_eq!(code(&["--budget", "1", "classify", "557"]), 3);
    assert_eq!(code(&["--budget", "1", "verify", "--lemma", "modularity", "--bound", "1000"]), 3);
    assert_eq!(code(&["--budget", "1", "collide"]), 3);
    assert_eq!(code(&["--budget", "1", "verify", "--lemma", "census", "--bound", "1000"]), 3);
}

#[test]
fn verify_passes_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["verify", "--lemma", "factorization1", "--bound", "10000", "--jobs", "2", "--out"];
    let mut args = args.to_vec();
    args.push(path.to_str().unwrap());
    assert_eq!(code(&args), 0);
    let json = read_json(&path);
    assert_eq!(json["lemma_id"], "factorization1");
    assert_eq!(json["counterexamples"].as_array().unwrap().len(), 0);
    assert!(json["witnesses"].as_array().unwrap().iter().any(|w| w["a"] == 11 && w["c"] == 19));
}

#[test]
fn classify_link_and_reconstruct() {
    let text = stdout(&["classify", "557"]);
    assert!(text.contains("7² · 6343") && text.contains("S32"), "{text}");
    let text = stdout(&["link", "11"]);
    assert!(text.contains('7'), "{text}");
    let text = stdout(&["reconstruct", "--d", "7"]);
    assert!(text.contains("11") && text.contains("19"), "{text}");
    assert_eq!(code(&["cyclo", "--t", "5", "--r", "9"]), 0);
    assert_eq!(code(&["cyclo", "--t", "3", "--r", "3"]), 0);
}

#[test]
fn collide_finds_the_quintuple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("collide.json");
    let args = ["collide", "--bound", "1000000", "--min-share", "5", "--class", "S32", "--out", path.to_str().unwrap()];
    assert_eq!(code(&args), 0);
    let json = read_json(&path);
    let fiber = json
        .as_array()
        .unwrap()
        .iter()
        .find(|f| f["shared_prime"] == "16963")
        .expect("fiber over 16963");
    let members: Vec<&str> = fiber["members"].as_array().unwrap().iter().map(|m| m["p"].as_str().unwrap()).collect();
    for p in ["120587", "269561", "324143", "473117", "833033"] {
        assert!(members.contains(&p), "{p} missing from {members:?}");
    }
}
