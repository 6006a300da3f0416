//! End-to-end checks of the command-line surface: output formats, exit
//! codes, and determinism.

use std::process::{Command, Output};

fn tesler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tesler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn count_prints_the_family_size() {
    let out = tesler(&["count", "--alpha", "1,1,1,1,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "357");
}

#[test]
fn count_csv_census() {
    let out = tesler(&["count", "--alpha", "1,0,1", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "alpha,count\n\"1,0,1\",4\n");
}

#[test]
fn enumerate_emits_json_lines() {
    let out = tesler(&["enumerate", "--alpha", "1,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in &lines {
        let matrix: tesler::GTMatrix = serde_json::from_str(line).expect("valid matrix JSON");
        assert_eq!(matrix.alpha().entries(), &[1, 1]);
    }
    assert!(lines.contains(&r#"{"n":2,"alpha":[1,1],"rows":[[0,1],[2]]}"#));
}

#[test]
fn charpoly_reports_factored_and_raw() {
    let out = tesler(&["charpoly", "--alpha", "1,2,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(q)*(q-1)^3"), "{text}");
    assert!(text.contains("[0, -1, 3, -3, 1]"), "{text}");
}

#[test]
fn hilbert_specializations() {
    let out = tesler(&["hilbert", "--n", "2", "--specialize", "t=0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 + q");

    let out = tesler(&["hilbert", "--n", "3", "--specialize", "q=1,t=1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "16");
}

#[test]
fn poset_dot_output_is_deterministic() {
    let first = tesler(&["poset", "--alpha", "1,1,1", "--dot", "--annotate-mobius"]);
    let second = tesler(&["poset", "--alpha", "1,1,1", "--dot", "--annotate-mobius"]);
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));
    let text = stdout(&first);
    assert_eq!(text.matches(" -> ").count(), 10);
    assert!(text.contains("digraph"));
    assert!(text.contains("mu = "));
}

#[test]
fn quotient_check_json_trace() {
    let out = tesler(&[
        "quotient-check",
        "--alpha",
        "1,0,1",
        "--r",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(parsed["class_count"], 7);
    assert_eq!(parsed["conditions"]["summation"]["passed"], true);
}

#[test]
fn family_csv_export() {
    let out = tesler(&["family", "--kind", "staircase", "--n", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("family,n,value,bound_low,bound_high,verdict\n"));
    assert!(text.contains("staircase,4,140,140,140,true"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    let out = tesler(&["count"]); // missing --alpha
    assert_eq!(out.status.code(), Some(2));
    let out = tesler(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ceiling_exits_three() {
    let out = tesler(&["enumerate", "--alpha", "1,1,1,1,1", "--ceiling", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn hilbert_respects_the_default_ceiling() {
    let out = tesler(&["hilbert", "--n", "8"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_file_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("tesler-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("census.csv");
    let out = tesler(&[
        "count",
        "--alpha",
        "1,1",
        "--format",
        "csv",
        "--out",
        path.to_str().expect("utf8 path"),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).expect("file written");
    assert_eq!(written, "alpha,count\n\"1,1\",2\n");
    let _ = std::fs::remove_dir_all(&dir);
}
