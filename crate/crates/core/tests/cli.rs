//! End-to-end runs of the binary: formats, exit codes and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bioct(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bioct"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
        .display()
        .to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn tables_markdown() {
    let o = bioct(&["tables", "--format", "md"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let s = stdout(&o);
    assert!(s.contains("## Table 1") && s.contains("## Table 2"));
    assert!(s.contains("| OH2 | F4(-20) |"));
    assert!(s.contains("78 - 46 = 32"));
    assert!(!s.contains("FAIL"));
}

#[test]
fn tables_json_has_the_table_document() {
    let o = bioct(&["tables", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["details"]["table1"].as_array().unwrap().len(), 4);
    assert_eq!(v["details"]["table2"].as_array().unwrap().len(), 5);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn veronese_check_on_an_input_point() {
    let o = bioct(&[
        "veronese-check",
        "--kind",
        "complex",
        "--input",
        &data("point.json"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let path = scratch("bad.json");
    std::fs::write(&path, "{\n  \"kind\": \"complex\",\n  \"b\": [,]\n}").unwrap();
    let o = bioct(&["jordan-rank", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.json:3:"), "{err}");
}

#[test]
fn unknown_arguments_are_usage_errors() {
    assert_eq!(
        bioct(&["lie-char", "--construction", "foo:J3(O)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bioct(&["lie-der", "--carrier", "J3(X)"]).status.code(),
        Some(2)
    );
    assert_eq!(bioct(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(bioct(&["tables", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(
        bioct(&["tables", "--input", "missing.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn failing_checks_exit_one() {
    let o = bioct(&["lie-char", "--construction", "der:O", "--expect-dim", "13"]);
    assert_eq!(o.status.code(), Some(1));
    let o = bioct(&[
        "lie-char",
        "--construction",
        "der:O",
        "--expect-dim",
        "14",
        "--expect-chi",
        "-14",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn real_plane_dimension_is_reported_as_a_failure() {
    let o = bioct(&[
        "veronese-dim",
        "--kind",
        "real",
        "--points",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.starts_with("check,expected,computed,origin,result"));
    assert!(
        s.contains("real plane dimension,32,18,literature,FAIL"),
        "{s}"
    );
    let o = bioct(&["veronese-dim", "--kind", "complex", "--points", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn runs_are_deterministic() {
    for cmd in ["norms", "identities", "jordan-rank", "veronese-check"] {
        let a = bioct(&[cmd, "--seed", "42", "--samples", "30", "--format", "json"]);
        let b = bioct(&[cmd, "--seed", "42", "--samples", "30", "--format", "json"]);
        assert_eq!(a.status.code(), Some(0), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn output_file_matches_stdout() {
    let path = scratch("adjacency.md");
    let o = bioct(&["adjacency-demo", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), o.stdout);
}

#[test]
fn lie_der_on_a_jordan_carrier() {
    let o = bioct(&[
        "lie-der",
        "--carrier",
        "J3(H)",
        "--format",
        "json",
        "--threads",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.iter().any(|n| n.contains("D(1) = 0")));
    assert!(names.iter().any(|n| n.contains("trace form is invariant")));
}
