//! End-to-end tests of the binary: argument handling, exit codes, file
//! round-trips and the published-example outputs.

use std::path::Path;
use std::process::{Command, Output};

const EQ6_DIGITS: [&str; 8] = [
    "0002000200022220000200022220000200020002",
    "0200020002002022020002002022020002000200",
    "0002222000020002000222202220222000022220",
    "0200202202000200020020222022202202002022",
    "0002000200022220000200022220000222202220",
    "0200020002002022020002002022020020222022",
    "0002222000020002000222202220222022200002",
    "0200202202000200020020222022202220220200",
];

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mocs-forge"))
        .args(args)
        .env_remove("MOCS_FORGE_MODE")
        .output()
        .expect("binary runs")
}

fn forge_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mocs-forge"))
        .args(args)
        .env_remove("MOCS_FORGE_MODE")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn construct_to(path: &Path, extra: &[&str]) -> Output {
    let path = path.to_str().unwrap().to_string();
    let mut args = vec![
        "construct", "--q", "4", "--m", "6", "--t", "3", "--parts", "1,2;3,4,5",
    ];
    args.extend_from_slice(extra);
    let out_flag = ["--out".to_string(), path];
    let mut full: Vec<&str> = args;
    full.push(&out_flag[0]);
    full.push(&out_flag[1]);
    forge(&full)
}

#[test]
fn construct_writes_published_digits() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eq6.fam");
    let out = construct_to(&path, &["--method", "gcs"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "(M, N, L) = (1, 8, 40)");

    let text = std::fs::read_to_string(&path).unwrap();
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, EQ6_DIGITS);
}

#[test]
fn construct_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.fam"), dir.path().join("b.fam"));
    construct_to(&a, &["--method", "mocs"]);
    construct_to(&b, &["--method", "mocs"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn construct_without_out_prints_family() {
    let out = forge(&[
        "construct", "--q", "4", "--m", "6", "--t", "3", "--parts", "1,2;3,4,5",
        "--method", "mocs",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("# construction: mocs"));
    assert!(stderr(&out).contains("(M, N, L) = (2, 8, 40)"));
}

#[test]
fn construct_rejects_condition_violation_with_explanation() {
    let out = forge(&[
        "construct", "--q", "4", "--m", "6", "--t", "3", "--parts", "1,2;4,3,5",
        "--method", "gcs",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("[1, 2, 4]"), "stderr was: {err}");
    assert!(err.contains("1..=3"), "stderr was: {err}");
}

#[test]
fn construct_usage_errors() {
    let out = forge(&["construct", "--q", "4", "--m", "6", "--t", "3", "--method", "gcs"]);
    assert_eq!(out.status.code(), Some(64), "missing --parts");
    let out = forge(&[
        "construct", "--q", "4", "--m", "6", "--t", "3", "--parts", "1,,2;3,4,5",
        "--method", "gcs",
    ]);
    assert_eq!(out.status.code(), Some(64), "malformed --parts");
    let out = forge(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_passes_published_family() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eq6.fam");
    construct_to(&path, &["--method", "gcs"]);
    let out = forge(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("peak: 320 (expected 320)"));
    assert!(text.contains("result: PASS"));
}

#[test]
fn verify_detects_one_mutated_symbol() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fam.fam");
    construct_to(&path, &["--method", "mocs"]);
    let text = std::fs::read_to_string(&path).unwrap();
    // bump the first digit of the first body line: 0 -> 1
    let mutated = text.replacen("\n0002", "\n1002", 1);
    assert_ne!(text, mutated);
    std::fs::write(&path, mutated).unwrap();

    let out = forge(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    assert!(report.contains("result: FAIL"));
    assert!(report.contains("sets ("), "violations listed: {report}");
}

#[test]
fn verify_round_trip_matches_in_memory_result() {
    // construct -> write -> read -> verify agrees with verifying without the
    // file detour (same PASS, same peak), in both modes
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cor.fam");
    let out = forge(&[
        "construct", "--q", "2", "--m", "6", "--t", "4", "--parts", "1;4,2;3,5",
        "--method", "mocs-cor", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "(M, N, L) = (8, 16, 48)");
    for mode in ["exact", "float"] {
        let out = forge(&["verify", path.to_str().unwrap(), "--mode", mode]);
        assert_eq!(out.status.code(), Some(0), "mode {mode}");
        assert!(stdout(&out).contains("peak: 768 (expected 768)"));
    }
}

#[test]
fn verify_mode_env_default() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fam.fam");
    construct_to(&path, &["--method", "mocs"]);
    let out = forge_with_env(&["verify", path.to_str().unwrap()], "MOCS_FORGE_MODE", "float");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("mode: float"));
    let out = forge_with_env(&["verify", path.to_str().unwrap()], "MOCS_FORGE_MODE", "sloppy");
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn verify_data_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.fam");
    construct_to(&path, &["--method", "gcs"]);
    let text = std::fs::read_to_string(&path).unwrap();

    // a non-digit symbol, with line/column in the message
    std::fs::write(&path, text.replacen("\n0002", "\n00x2", 1)).unwrap();
    let out = forge(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(65));
    assert!(stderr(&out).contains("column 3"), "{}", stderr(&out));

    // header without any body
    let header_only: String = text
        .lines()
        .filter(|l| l.starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    std::fs::write(&path, header_only).unwrap();
    let out = forge(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(65));
    assert!(stderr(&out).contains("empty body"));

    // unreadable input
    let out = forge(&["verify", dir.path().join("nope.fam").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(66));
}

#[test]
fn enumerate_reproduces_both_tables() {
    let out = forge(&["enumerate", "--q", "4", "--max-m", "7", "--check-table", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("table cells matched"));

    let out = forge(&["enumerate", "--q", "2", "--max-m", "7", "--check-table", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("table cells matched"));
    // lengths past 40 are beyond the pair table's grid, not mismatches
    assert!(text.contains("beyond-table"));
}

#[test]
fn enumerate_machine_lines_are_parseable() {
    let out = forge(&["enumerate", "--q", "2", "--max-m", "4", "--machine"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert!(fields.len() >= 8, "short line: {line}");
        let _: u64 = fields[0].parse().unwrap();
        let _: u64 = fields[1].parse().unwrap();
        let _: u64 = fields[2].parse().unwrap();
        assert!(fields[3] == "mocs" || fields[3] == "mocs-cor");
        assert!(fields[4].starts_with("q="));
        assert!(fields[7].starts_with("parts="));
    }
}

#[test]
fn enumerate_refuses_past_cap() {
    let out = forge(&["enumerate", "--q", "4", "--max-m", "12"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr(&out).contains("cap"));
}
