//! End-to-end smoke tests driving the built binary.

use std::io::Write;
use std::process::{Command, Stdio};

fn pursuit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pursuit"))
}

#[test]
fn gen_solve_and_capttime_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("c6.g6");
    let out = pursuit()
        .args(["gen", "cycle", "6", "--out"])
        .arg(&g6)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let out = pursuit()
        .args(["solve", "--graph"])
        .arg(&g6)
        .args(["--cops", "1", "-s", "2", "--no-cache"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["cop_win"], serde_json::json!(false));

    // The robber wins, so capttime reports a domain error with exit code 3.
    let out = pursuit()
        .args(["capttime", "--graph"])
        .arg(&g6)
        .args(["--cops", "1", "-s", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = pursuit()
        .args(["copnumber", "--graph"])
        .arg(&g6)
        .args(["-s", "2", "--max-cops", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");
}

#[test]
fn cache_dir_env_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("p4.g6");
    pursuit()
        .args(["gen", "path", "4", "--out"])
        .arg(&g6)
        .output()
        .unwrap();
    let cache = dir.path().join("cache");
    let run = || {
        pursuit()
            .env("PURSUIT_CACHE_DIR", &cache)
            .args(["solve", "--graph"])
            .arg(&g6)
            .args(["--cops", "1"])
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert!(cache.join("solves.jsonl").exists());
    let second = run();
    assert_eq!(
        first.stdout, second.stdout,
        "cached result must match recompute"
    );
}

#[test]
fn partition_reports_layers() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("g9.edges");
    pursuit()
        .args(["gen", "capture-family", "9", "--out"])
        .arg(&edges)
        .output()
        .unwrap();
    let out = pursuit()
        .args(["partition", "--graph"])
        .arg(&edges)
        .args(["--power", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["capture_time"], serde_json::json!(2));
    assert_eq!(report["layers"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_single_claim_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("report.csv");
    let out = pursuit()
        .args(["verify", "q9_one_cop_escape", "--report"])
        .arg(&csv)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let body = std::fs::read_to_string(&csv).unwrap();
    assert!(body.starts_with("claim_id,status,expected,computed,millis"));
    assert!(body.contains("q9_one_cop_escape,holds"));

    let out = pursuit()
        .args(["verify", "no_such_claim"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn scan_reads_graph6_streams() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("stars.g6");
    std::fs::write(&g6, "D?{\nD?{\n").unwrap();
    let out = pursuit()
        .args(["scan", "--g6"])
        .arg(&g6)
        .args(["-n", "5", "-s", "1", "--spot", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["max_capture_time"], serde_json::json!(1));
    assert_eq!(report["cop_win"], serde_json::json!(2));
}

#[test]
fn play_accepts_piped_moves() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("p5.g6");
    pursuit()
        .args(["gen", "path", "5", "--out"])
        .arg(&g6)
        .output()
        .unwrap();
    let mut child = pursuit()
        .args(["play", "--graph"])
        .arg(&g6)
        .args(["--cops", "1", "-s", "1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    // Place at an end and run into the corner until captured.
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"0\n0\n0\n0\n0\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("captured in"), "transcript:\n{text}");
}

#[test]
fn budget_override_exits_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("p9.g6");
    pursuit()
        .args(["gen", "path", "9", "--out"])
        .arg(&g6)
        .output()
        .unwrap();
    let out = pursuit()
        .args(["solve", "--graph"])
        .arg(&g6)
        .args(["--cops", "2", "--budget", "10", "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn play_concedes_when_the_robber_wins() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("c6.g6");
    pursuit()
        .args(["gen", "cycle", "6", "--out"])
        .arg(&g6)
        .output()
        .unwrap();
    let out = pursuit()
        .args(["play", "--graph"])
        .arg(&g6)
        .args(["--cops", "1", "-s", "2"])
        .stdin(Stdio::null())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("concede"));
}
