//! End-to-end tests against the built binary: golden outputs, exit codes,
//! and byte-for-byte determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whittaker"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn eval_identity_normalization() {
    let out = run(&["eval", "--type", "A1", "--coweight", "0", "--weyl", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn eval_outside_support_is_zero() {
    let out = run(&["eval", "--type", "A2", "--coweight", "-1,0", "--weyl", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn eval_symbolic_cell_value() {
    let out = run(&["eval", "--type", "A1", "--coweight", "2", "--weyl", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-z1^2*q^-3\n");
}

#[test]
fn eval_numeric_specialization() {
    let out = run(&[
        "eval", "--type", "A1", "--coweight", "1", "--weyl", "", "--z", "1/2", "--p", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1/6\n");
    let out = run(&[
        "eval", "--type", "A1", "--coweight", "0", "--weyl", "1", "--z", "1/2", "--p", "3",
    ]);
    assert_eq!(stdout(&out), "-1/3\n");
}

#[test]
fn eval_usage_errors_exit_2() {
    for args in [
        vec!["eval", "--type", "Z9", "--coweight", "0", "--weyl", ""],
        vec!["eval", "--type", "A1", "--coweight", "0", "--weyl", "3"],
        vec!["eval", "--type", "A1", "--coweight", "0,0", "--weyl", ""],
        vec!["eval", "--type", "A1", "--coweight", "0", "--weyl", "", "--z", "1/2"],
        vec!["eval", "--type", "A1", "--coweight", "0", "--weyl", "", "--p", "3"],
        vec!["eval", "--type", "A1", "--coweight", "x", "--weyl", ""],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn table_csv_is_golden_and_deterministic() {
    let args = ["table", "--type", "A1", "--radius", "1", "--format", "csv"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let expected = "coweight,weyl_word,value\n\
                    \"-1\",\"\",\"0\"\n\
                    \"-1\",\"1\",\"-z1^-1\"\n\
                    \"0\",\"\",\"1\"\n\
                    \"0\",\"1\",\"-q^-1\"\n\
                    \"1\",\"\",\"z1*q^-1\"\n\
                    \"1\",\"1\",\"-z1*q^-2\"\n";
    assert_eq!(stdout(&first), expected);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn table_json_rows_parse_and_match_golden() {
    let out = run(&["table", "--type", "A1", "--radius", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    for line in &lines {
        let value: serde_json::Value = serde_json::from_str(line).expect("valid JSON row");
        assert!(value.get("coweight").is_some());
        assert!(value.get("weyl_word").is_some());
        assert!(value.get("value").is_some());
    }
    assert_eq!(
        lines[1],
        r#"{"coweight":[-1],"weyl_word":[1],"value":{"terms":[{"q":0,"z":[-1],"c":-1}]}}"#
    );
}

#[test]
fn table_out_file_matches_stdout() {
    let to_stdout = run(&["table", "--type", "A2", "--radius", "1", "--format", "csv"]);
    let path = std::env::temp_dir().join("whittaker_cli_test_table.csv");
    let path_str = path.to_str().unwrap();
    let to_file = run(&[
        "table", "--type", "A2", "--radius", "1", "--format", "csv", "--out", path_str,
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    let written = std::fs::read(&path).expect("file written");
    assert_eq!(written, to_stdout.stdout);
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_passes_on_a2() {
    let out = run(&["verify", "--type", "A2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
    assert_eq!(report["suites"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_unknown_type_is_usage_error() {
    let out = run(&["verify", "--type", "Z9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_finite_census_totals() {
    let out = run(&["oracle-finite", "--n", "3", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["total"], serde_json::json!(21));
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
    assert_eq!(report["census"]["e"], serde_json::json!(1));
    assert_eq!(report["census"]["1,2,1"], serde_json::json!(8));
}

#[test]
fn oracle_finite_out_of_window_is_config_error() {
    let out = run(&["oracle-finite", "--n", "4", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_padic_twist_point_all_pass() {
    let out = run(&["oracle-padic", "--p", "3", "--z", "1", "--mmax", "1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {:?}", out.stderr);
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    let summary: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(summary["pass"], serde_json::Value::Bool(true));
    assert_eq!(summary["flip_control"], serde_json::Value::Bool(true));
    assert_eq!(summary["rows"], serde_json::json!(6));
}

#[test]
fn oracle_padic_generic_z_reports_failures_honestly() {
    // Away from z^2 = 1 the integral genuinely deviates from the closed
    // formula; the report must say so and exit 1.
    let out = run(&["oracle-padic", "--p", "3", "--z", "1/2", "--mmax", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("\"pass\":false"));
}

#[test]
fn oracle_padic_out_of_window_is_config_error() {
    let out = run(&["oracle-padic", "--p", "3", "--z", "2", "--mmax", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
