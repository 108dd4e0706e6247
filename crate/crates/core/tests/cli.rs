use std::io::Write;
use std::process::{Command, Output, Stdio};

use cubepaths::json::parse_set;
use cubepaths::verify::Certificate;
use serde_json::{json, Value};

fn cubepaths(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cubepaths"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn boundary_command() {
    let out = cubepaths(
        &["boundary", "--n", "2", "--set", "[[ ],[1]]", "--kind", "edge", "--directed"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), json!({ "size": 2 }));

    let out = cubepaths(
        &["boundary", "--n", "3", "--set", "[\"0x0\"]", "--kind", "vertex", "--list"],
        None,
    );
    let v = stdout_json(&out);
    assert_eq!(v["size"], json!(3));
    assert_eq!(parse_set(&v["members"], 3).unwrap().len(), 3);

    let out = cubepaths(
        &["boundary", "--n", "3", "--set", "[[1,2],[1,3]]", "--kind", "shadow"],
        None,
    );
    assert_eq!(stdout_json(&out)["size"], json!(3));
}

#[test]
fn bounds_command() {
    let out = cubepaths(&["bounds", "b", "--n", "4", "--x", "5"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), json!({ "value": "6", "rational": "6/1" }));
    let out = cubepaths(&["bounds", "e", "--n", "4", "--x", "8"], None);
    assert_eq!(stdout_json(&out), json!({ "value": "8" }));
    let out = cubepaths(&["bounds", "e", "--n", "3", "--x", "3"], None);
    assert_eq!(stdout_json(&out), json!({ "value": "4.24511249784" }));
    let out = cubepaths(&["bounds", "s", "--n", "4", "--x", "0"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compress_command() {
    let input = r#"{"n": 3, "A": [[]], "B": [[1,2,3]], "S": [[], [1,2]], "mode": "edge"}"#;
    let out = cubepaths(&["compress", "--input", "-"], Some(input));
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let trace = v["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 3);
    assert_eq!(trace[0]["before"], json!(4));
    let down = parse_set(&v["S'"], 3).unwrap();
    assert!(cubepaths::cube::is_down_set(&down));

    let bad = r#"{"n": 2, "A": [[1]], "B": [[1,2]], "S": [[1]], "mode": "edge"}"#;
    let out = cubepaths(&["compress", "--input", "-"], Some(bad));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("A is not a down-set") && err.contains("[1]"), "{err}");
}

#[test]
fn paths_command_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.json");
    std::fs::write(
        &path,
        r#"{"n": 3, "A": [[]], "B": ["0x7"], "mode": "edge", "directed": false}"#,
    )
    .unwrap();
    let out = cubepaths(&["paths", "--input", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["count"], json!(3));
    assert_eq!(v["cut"]["size"], json!(3));
    assert_eq!(v["paths"].as_array().unwrap().len(), 3);
    for p in v["paths"].as_array().unwrap() {
        parse_set(p, 3).unwrap();
    }
}

#[test]
fn verify_command() {
    let out = cubepaths(&["verify", "--theorem", "diredges", "--n", "3", "--exhaustive"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let certs: Vec<Certificate> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(certs.len(), 129);
    assert!(certs.iter().all(|c| c.passed() && c.recheck()));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("certs.jsonl");
    let args = [
        "verify", "--theorem", "weakKK", "--n", "6", "--random", "50", "--seed", "42", "--out",
        file.to_str().unwrap(),
    ];
    let out = cubepaths(&args, None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&file).unwrap();
    assert_eq!(first.iter().filter(|&&b| b == b'\n').count(), 50);
    cubepaths(&args, None);
    assert_eq!(std::fs::read(&file).unwrap(), first);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cubepaths(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(cubepaths(&[], None).status.code(), Some(2));
    let out = cubepaths(&["verify", "--theorem", "edgelemma", "--n", "5", "--exhaustive"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = cubepaths(&["verify", "--theorem", "nope", "--n", "3"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = cubepaths(
        &["boundary", "--n", "2", "--set", "[[3]]", "--kind", "edge"],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(cubepaths(&["--help"], None).status.code(), Some(0));
}

#[test]
fn in_process_run_matches_binary() {
    let args = ["cubepaths", "bounds", "s", "--n", "4", "--x", "6"];
    let mut out = Vec::new();
    let mut err = Vec::new();
    assert_eq!(cubepaths::cli::run(args, &mut out, &mut err), 0);
    let binary = cubepaths(&args[1..], None);
    assert_eq!(out, binary.stdout);
    assert_eq!(
        serde_json::from_slice::<Value>(&out).unwrap(),
        json!({ "value": "4.33333333333", "rational": "13/3" })
    );
}
