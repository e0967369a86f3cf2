use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn teter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_teter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn teter_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_teter"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn analyze_with_approximation() {
    let out = teter(&["analyze", "3,4,5", "--approximate", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["verdict"]["kind"], "teter");
    assert_eq!(doc["verdict"]["witness"]["shift"], 6);
    assert_eq!(doc["verdict"]["witness"]["quotient"]["generator"], 3);
    assert_eq!(doc["verdict"]["witness"]["quotient"]["length"], 3);
    assert_eq!(doc["strongly_teter"]["status"], "yes");
    assert_eq!(doc["approximation"]["multiplicity"], 4);
    assert_eq!(doc["approximation"]["is_gorenstein"], true);
    assert_eq!(
        doc["approximation"]["primes"],
        serde_json::json!([32003, 65521])
    );
    assert_eq!(doc["timings"], Value::Null);
}

#[test]
fn analyze_not_teter_and_bad_input() {
    let out = teter(&["analyze", "5,6,7,9", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(
        doc["verdict"],
        serde_json::json!({"kind": "not_teter", "reason": "type_bound"})
    );
    assert_eq!(doc["approximation"], Value::Null);

    let out = teter(&["analyze", "2,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd 2"));
    assert_eq!(teter(&["analyze", ""]).status.code(), Some(2));
    assert_eq!(teter(&["analyze", "3,-4"]).status.code(), Some(2));
    assert_eq!(
        teter(&["analyze", "3,4,5", "--approximate", "--primes", "32003,9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        teter(&["analyze", "3,4,5", "--window-multiplier", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic_and_seed_is_honoured() {
    let args = [
        "analyze",
        "4,5,11",
        "--approximate",
        "--json",
        "--seed",
        "7",
    ];
    let a = teter(&args);
    let b = teter(&args);
    assert_eq!(a.stdout, b.stdout);
    let timed = json(&teter(&["analyze", "3,4", "--json", "--timings"]));
    assert!(timed["timings"]["teter_micros"].is_u64());
}

#[test]
fn custom_precision_and_primes() {
    let doc = json(&teter(&[
        "analyze",
        "3,4,5",
        "--approximate",
        "--json",
        "--precision",
        "60",
        "--primes",
        "65521",
    ]));
    assert_eq!(
        doc["approximation"]["checked_precisions"],
        serde_json::json!([60, 70])
    );
    assert_eq!(doc["approximation"]["primes"], serde_json::json!([65521]));
    assert_eq!(doc["approximation"]["multiplicity"], 4);
}

#[test]
fn text_output_matches_json_verdict() {
    let text = stdout(&teter(&["analyze", "4,5,11"]));
    assert!(text.contains("teter (s = 11, g = 11, c = 2)"));
    assert!(text.contains("no (tangent_cone_not_cm)"));
}

#[test]
fn paper_examples_all_match() {
    let out = teter(&["paper-examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("MATCH").count(), 4);
    assert!(!text.contains("MISMATCH"));

    let table = json(&teter(&["paper-examples", "--json"]));
    assert_eq!(table["rows"].as_array().unwrap().len(), 4);
    assert_eq!(table["all_match"], true);
}

#[test]
fn paper_examples_detect_a_mismatch() {
    let out = teter(&["paper-examples", "--inject-mismatch"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn batch_keeps_input_order() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# three semigroups\n4,5,11\n\n3,4,5\n5,6,7,9").unwrap();
    let out = teter(&["batch", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let inputs: Vec<&Value> = lines.iter().map(|d| &d["input"]).collect();
    assert_eq!(
        inputs,
        [
            &serde_json::json!([4, 5, 11]),
            &serde_json::json!([3, 4, 5]),
            &serde_json::json!([5, 6, 7, 9])
        ]
    );
}

#[test]
fn batch_reports_bad_lines() {
    let input = "3,4,5\n2,4\n3,4\n";
    let strict = teter_stdin(&["batch", "-"], input);
    assert_eq!(strict.status.code(), Some(2));
    let lenient = teter_stdin(&["batch", "-", "--lenient"], input);
    assert_eq!(lenient.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&lenient)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1]["line"], 2);
    assert_eq!(lines[1]["kind"], "bad_input");
    assert_eq!(lines[2]["verdict"]["kind"], "gorenstein");
}

#[test]
fn batch_empty_input() {
    let file = tempfile::NamedTempFile::new().unwrap();
    let out = teter(&["batch", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        teter(&["batch", "/nonexistent/file"]).status.code(),
        Some(2)
    );
}
