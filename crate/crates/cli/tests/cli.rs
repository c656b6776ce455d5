//! CLI error paths around derivation table files and stream separation.

use std::process::{Command, Output};

fn invoke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn missing_table_file_is_a_usage_error() {
    let out = invoke(&[
        "verify-derivation",
        "--table",
        "/nonexistent/kappa.tbl",
        "--upto",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("cannot read /nonexistent/kappa.tbl"));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_table_files_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();

    let no_rule = dir.path().join("no_rule.tbl");
    std::fs::write(&no_rule, "2 -> Sq1\n").unwrap();
    let out = invoke(&["verify-derivation", "--table", no_rule.to_str().unwrap(), "--upto", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("rule"));

    let bad_token = dir.path().join("bad_token.tbl");
    std::fs::write(&bad_token, "rule: Sq(m-1)\n2 -> Sq1 junk\n").unwrap();
    let out = invoke(&["verify-derivation", "--table", bad_token.to_str().unwrap(), "--upto", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("`junk`"));

    let inhomogeneous = dir.path().join("inhomogeneous.tbl");
    std::fs::write(&inhomogeneous, "rule: Sq(m-1)\n3 -> Sq5\n").unwrap();
    let out = invoke(&[
        "verify-derivation",
        "--table",
        inhomogeneous.to_str().unwrap(),
        "--upto",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("homogeneous"));
}

#[test]
fn custom_tables_can_pass_and_only_use_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let kappa = dir.path().join("kappa.tbl");
    std::fs::write(&kappa, "# the built-in, spelled out\nrule: Sq(m-1)\n1 -> 1\n").unwrap();
    let out = invoke(&[
        "verify-derivation",
        "--table",
        kappa.to_str().unwrap(),
        "--upto",
        "12",
        "--mode",
        "leibniz-pairs",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("derivation property check: table"));
    assert!(stdout.ends_with("result: PASS\n"));
}

#[test]
fn verification_failures_report_on_stdout_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    // zero on all generators except Sq^3: kills no relation involving Sq^3
    let broken = dir.path().join("broken.tbl");
    std::fs::write(&broken, "rule: 0\nshift: -1\n3 -> Sq2\n").unwrap();
    let out = invoke(&["verify-derivation", "--table", broken.to_str().unwrap(), "--upto", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stderr.is_empty());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("first counterexample"));
    assert!(stdout.ends_with("result: FAIL\n"));
}
