//! End-to-end CLI behavior: exit codes, file formats, failure paths.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_sefcc")
}

fn work_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sefcc-cli-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--n", "3"]).status.code(), Some(2)); // missing --out
    let dir = work_dir("usage");
    let out = dir.join("spec5.csv");
    let result = run(&["spectrum", "--n", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("capacity"), "diagnostic: {stderr}");
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn kraw_check_passes() {
    let result = run(&["kraw-check", "--max-N", "63"]);
    assert_eq!(result.status.code(), Some(0));
}

#[test]
fn dual_check_passes() {
    assert_eq!(run(&["dual-check"]).status.code(), Some(0));
    assert_eq!(run(&["dual-check", "--n", "3"]).status.code(), Some(0));
    assert_eq!(run(&["dual-check", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn construct_and_verify_round_trip() {
    let dir = work_dir("roundtrip");
    let table = dir.join("table3.json");
    let report = dir.join("report3.json");
    assert_eq!(
        run(&["construct", "--n", "3", "--out", table.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&[
            "verify",
            "--n",
            "3",
            "--table",
            table.to_str().unwrap(),
            "--report",
            report.to_str().unwrap(),
        ])
        .status
        .code(),
        Some(0)
    );
    let parsed: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed["total_d2"], 960);
    assert_eq!(parsed["d_min"], 2);
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_rejects_tampered_table() {
    let dir = work_dir("tamper");
    let table = dir.join("table3.json");
    run(&["construct", "--n", "3", "--out", table.to_str().unwrap()]);
    let mut parsed: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&table).unwrap()).unwrap();
    // give one non-codeword the parity of its sphere center (the zero word)
    let zero_parity = parsed["parities"]["0000000"].as_str().unwrap().to_string();
    parsed["parities"]["1000000"] = serde_json::Value::String(zero_parity);
    fs::write(&table, serde_json::to_string(&parsed).unwrap()).unwrap();
    let report = dir.join("report3.json");
    let result = run(&[
        "verify",
        "--n",
        "3",
        "--table",
        table.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&result.stderr).contains("not a valid encoder"));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn construct_with_explicit_cut_function() {
    let dir = work_dir("fu");
    let fu = dir.join("bent4.txt");
    let table = dir.join("table4.json");
    assert_eq!(
        run(&["bent", "--n", "4", "--out", fu.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&[
            "construct",
            "--n",
            "4",
            "--fu",
            fu.to_str().unwrap(),
            "--out",
            table.to_str().unwrap(),
        ])
        .status
        .code(),
        Some(0)
    );

    // a non-minimizing cut function is rejected without --force
    let zero = dir.join("zero3.txt");
    fs::write(&zero, "n=3\n00000000\n").unwrap();
    let table3 = dir.join("table3.json");
    let rejected = run(&[
        "construct",
        "--n",
        "3",
        "--fu",
        zero.to_str().unwrap(),
        "--out",
        table3.to_str().unwrap(),
    ]);
    assert_eq!(rejected.status.code(), Some(2));
    let forced = run(&[
        "construct",
        "--n",
        "3",
        "--fu",
        zero.to_str().unwrap(),
        "--force",
        "--out",
        table3.to_str().unwrap(),
    ]);
    assert_eq!(forced.status.code(), Some(0));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn graph_export_format() {
    let dir = work_dir("graph");
    let out = dir.join("g3.txt");
    run(&[
        "graph", "export", "--n", "2", "--set", "all", "--distance", "3", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        "# vertices=2 distance=3\n0 1\n"
    );
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn spectrum_csv_footer() {
    let dir = work_dir("spectrum");
    let out = dir.join("spec3.csv");
    assert_eq!(
        run(&["spectrum", "--n", "3", "--method", "both", "--out", out.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.first(), Some(&"u_hex,lambda"));
    assert_eq!(lines.len(), 1 + 128 + 2);
    assert_eq!(lines[lines.len() - 2], "lambda_min,-1");
    assert_eq!(lines[lines.len() - 1], "argmin_count,112");
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn code_export_omits_codewords_beyond_enumeration_cap() {
    let dir = work_dir("code");
    let out = dir.join("code6.json");
    run(&["code", "export", "--n", "6", "--out", out.to_str().unwrap()]);
    let parsed: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(parsed["length"], 63);
    assert_eq!(parsed["dimension"], 57);
    assert!(parsed.get("codewords").is_none());
    assert_eq!(parsed["parity_check_rows"].as_array().unwrap().len(), 6);
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn worker_flag_does_not_change_results() {
    let dir = work_dir("workers");
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    run(&["--workers", "1", "construct", "--n", "3", "--out", a.to_str().unwrap()]);
    run(&["--workers", "4", "construct", "--n", "3", "--out", b.to_str().unwrap()]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    // the parallel all-pairs scans behind verify are reduction-order
    // independent too
    let ra = dir.join("ra.json");
    let rb = dir.join("rb.json");
    run(&["--workers", "1", "verify", "--n", "3", "--table", a.to_str().unwrap(), "--report", ra.to_str().unwrap()]);
    run(&["--workers", "3", "verify", "--n", "3", "--table", b.to_str().unwrap(), "--report", rb.to_str().unwrap()]);
    assert_eq!(fs::read(&ra).unwrap(), fs::read(&rb).unwrap());
    fs::remove_dir_all(&dir).ok();
}
