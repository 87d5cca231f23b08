//! End-to-end tests of the command-line interface: exit codes, JSON record
//! shape, determinism, and the dispersion-scan file output.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mcs-dkp"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn algebra_suite_passes_with_zero_residuals_in_json() {
    let out = run(&["verify", "--suite", "algebra", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut records = 0;
    for line in stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("one JSON object per line");
        assert_eq!(v["status"], "pass", "{line}");
        assert_eq!(v["residual"], 0.0, "{line}");
        assert!(v["paper_ref"].as_str().is_some_and(|s| !s.is_empty()));
        for key in ["id", "inputs", "tolerance", "detail"] {
            assert!(v.get(key).is_some(), "missing {key} in {line}");
        }
        records += 1;
    }
    assert!(records >= 3);
}

#[test]
fn errata_suite_reports_notes_without_failing() {
    let out = run(&["verify", "--suite", "errata", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let notes = stdout
        .lines()
        .filter(|l| l.contains("\"status\":\"erratum-note\""))
        .count();
    assert!(notes >= 1, "expected erratum notes:\n{stdout}");
    assert!(!stdout.contains("\"status\":\"fail\""));
}

#[test]
fn invalid_configuration_exits_with_usage_code() {
    assert_eq!(run(&["verify", "--suite", "momentum", "--mass", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "momentum", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "no-such-suite"]).status.code(), Some(2));
    // clap itself reports malformed flags as usage errors
    assert_eq!(run(&["verify", "--mass", "not-a-number"]).status.code(), Some(2));
}

#[test]
fn identical_configurations_are_byte_identical() {
    let args = ["verify", "--suite", "all", "--format", "json", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn seeds_change_samples_but_not_verdicts() {
    let a = run(&["verify", "--suite", "fieldtheory", "--format", "json", "--seed", "1"]);
    let b = run(&["verify", "--suite", "fieldtheory", "--format", "json", "--seed", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_ne!(a.stdout, b.stdout, "different seeds must draw different samples");
}

#[test]
fn dispersion_scan_writes_the_expected_table() {
    let dir = std::env::temp_dir().join("mcs-dkp-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.csv");
    let out = run(&[
        "scan-dispersion",
        "--p1min", "-5", "--p1max", "5",
        "--p2min", "-5", "--p2max", "5",
        "--grid", "11",
        "--mass", "12",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("p1,p2,p0_found,p0_expected,abs_err"));
    assert_eq!(csv.lines().count(), 1 + 121);
    let textbook = csv
        .lines()
        .find(|l| l.starts_with("3,4,"))
        .expect("row for (3, 4)");
    let p0: f64 = textbook.split(',').nth(2).unwrap().parse().unwrap();
    assert!((p0 - 13.0).abs() < 1e-6 * 13.0);
    std::fs::remove_file(&path).ok();
}

#[test]
fn scan_rejects_bad_grid_and_unwritable_path() {
    let out = run(&[
        "scan-dispersion",
        "--p1min", "0", "--p1max", "1",
        "--p2min", "0", "--p2max", "1",
        "--grid", "1",
        "--mass", "1",
        "--out", "/tmp/never-written.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "scan-dispersion",
        "--p1min", "0", "--p1max", "1",
        "--p2min", "0", "--p2max", "1",
        "--grid", "2",
        "--mass", "1",
        "--out", "/nonexistent-dir/scan.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_format_prints_summary() {
    let out = run(&["verify", "--suite", "dkp"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("checks:"), "{stdout}");
    assert!(stdout.contains("passed"));
}
