//! Process-level tests of the `siggb` binary: exit codes, record shape,
//! determinism, and diagnostics.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};

fn siggb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siggb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn kv(out: &Output) -> BTreeMap<String, String> {
    stdout(out)
        .lines()
        .map(|l| {
            let (k, v) = l
                .split_once('=')
                .unwrap_or_else(|| panic!("bad kv line {l:?}"));
            (k.to_string(), v.to_string())
        })
        .collect()
}

fn example_path() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("testdata/example.ideal")
        .display()
        .to_string()
}

fn write_temp(name: &str, content: &str) -> String {
    let path = std::env::temp_dir().join(format!("siggb-test-{}-{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path.display().to_string()
}

#[test]
fn benchmark_run_reports_the_expected_reduced_basis() {
    let out = siggb(&["--bench", "katsura:5"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let rec = kv(&out);
    assert_eq!(rec["input"], "katsura:5");
    assert_eq!(rec["char"], "32003");
    assert_eq!(rec["order"], "grevlex");
    assert_eq!(rec["module_order"], "schreyer");
    assert_eq!(rec["rewrite_order"], "gvw");
    assert_eq!(rec["strategy"], "sig");
    assert_eq!(rec["reduced_gb_size"], "22");
    assert_eq!(rec["outcome"], "complete");
    let all: u64 = rec["all_pairs"].parse().unwrap();
    let red: u64 = rec["reduced_pairs"].parse().unwrap();
    assert!(red <= all);
}

#[test]
fn file_input_with_verification_passes() {
    let out = siggb(&["--input", &example_path(), "--verify"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let rec = kv(&out);
    assert_eq!(rec["char"], "0");
    assert_eq!(rec["verify"], "pass");
    assert_eq!(rec["outcome"], "complete");
}

#[test]
fn records_are_bit_identical_except_time() {
    let args = [
        "--bench",
        "cyclic:4",
        "--verify",
        "--seed",
        "7",
        "--strategy",
        "degree",
    ];
    let a = siggb(&args);
    let b = siggb(&args);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(exit_code(&b), 0);
    let strip = |o: &Output| {
        stdout(o)
            .lines()
            .filter(|l| !l.starts_with("time_ms="))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn flag_overrides_shadow_the_file_header() {
    let out = siggb(&[
        "--input",
        &example_path(),
        "--char",
        "101",
        "--order",
        "lex",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let rec = kv(&out);
    assert_eq!(rec["char"], "101");
    assert_eq!(rec["order"], "lex");
}

#[test]
fn capped_runs_exit_with_two() {
    let out = siggb(&["--bench", "katsura:5", "--max-pairs", "3"]);
    assert_eq!(exit_code(&out), 2);
    let rec = kv(&out);
    assert_eq!(rec["outcome"], "capped");
    assert_eq!(rec["capped_by"], "pairs");
    assert_eq!(rec["reduced_gb_size"], "0");

    let out = siggb(&["--bench", "katsura:5", "--max-degree", "2"]);
    assert_eq!(exit_code(&out), 2);
    assert_eq!(kv(&out)["capped_by"], "degree");
}

#[test]
fn inadmissible_order_fails_with_three() {
    let out = siggb(&["--input", &example_path(), "--rewrite-order", "inverted"]);
    assert_eq!(exit_code(&out), 3);
    let rec = kv(&out);
    assert_eq!(rec["outcome"], "failed");
    assert!(
        stderr(&out).contains("admissib"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn usage_problems_exit_with_one() {
    // no source
    assert_eq!(exit_code(&siggb(&[])), 1);
    // both sources
    assert_eq!(
        exit_code(&siggb(&["--bench", "cyclic:4", "--input", &example_path()])),
        1
    );
    // unknown enum values
    for args in [
        ["--bench", "cyclic:4", "--strategy", "bogus"],
        ["--bench", "cyclic:4", "--rewrite-order", "bogus"],
        ["--bench", "cyclic:4", "--module-order", "bogus"],
        ["--bench", "cyclic:4", "--order", "bogus"],
        ["--bench", "cyclic:4", "--stats-format", "bogus"],
    ] {
        let out = siggb(&args);
        assert_eq!(exit_code(&out), 1, "{args:?}");
        assert!(stderr(&out).contains("bogus"), "{args:?}");
    }
    // bad benchmark spec
    assert_eq!(exit_code(&siggb(&["--bench", "nope:4"])), 1);
    assert_eq!(exit_code(&siggb(&["--bench", "katsura:1"])), 1);
    // non-prime characteristic
    let out = siggb(&["--input", &example_path(), "--char", "91"]);
    assert_eq!(exit_code(&out), 1);
    // missing file
    let out = siggb(&["--input", "/nonexistent/no.ideal"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("cannot read"));
}

#[test]
fn parse_errors_name_the_line() {
    let path = write_temp(
        "badvar.ideal",
        "ring: x,y\nchar: 0\norder: grevlex\npoly: x*w + 1\n",
    );
    let out = siggb(&["--input", &path]);
    assert_eq!(exit_code(&out), 1);
    let err = stderr(&out);
    assert!(err.contains('4') && err.contains('w'), "stderr: {err}");
}

#[test]
fn help_exits_cleanly() {
    let out = siggb(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("--rewrite-order"));
}

#[test]
fn table_format_lists_every_key() {
    let out = siggb(&["--bench", "cyclic:4", "--stats-format", "table"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("outcome")));
    assert!(!text.contains('='));
}
