//! Behavioural tests for the `dca-ldpc` binary: flags, file outputs,
//! exit codes and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dca-ldpc"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dca-ldpc-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn construct_writes_alist_and_dump() {
    let dir = temp_dir("construct");
    let alist = dir.join("h3.alist");
    let dump = dir.join("design3.txt");
    let output = run(&[
        "construct",
        "--n",
        "3",
        "--alist",
        alist.to_str().unwrap(),
        "--dump",
        dump.to_str().unwrap(),
    ]);
    assert!(output.status.success());

    let alist_text = std::fs::read_to_string(&alist).unwrap();
    let mut lines = alist_text.lines();
    assert_eq!(lines.next().unwrap(), "30 18");
    assert_eq!(lines.next().unwrap(), "3 5");

    let dump_text = std::fs::read_to_string(&dump).unwrap();
    assert_eq!(dump_text.lines().count(), 30);
    assert!(dump_text.starts_with("0 0 : 0 6 13\n"));

    // Re-running produces byte-identical files.
    let again = run(&[
        "construct",
        "--n",
        "3",
        "--alist",
        alist.to_str().unwrap(),
        "--dump",
        dump.to_str().unwrap(),
    ]);
    assert!(again.status.success());
    assert_eq!(std::fs::read_to_string(&alist).unwrap(), alist_text);
    assert_eq!(std::fs::read_to_string(&dump).unwrap(), dump_text);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn construct_n6_weight_lines() {
    let dir = temp_dir("construct6");
    let alist = dir.join("h6.alist");
    let output = run(&[
        "construct",
        "--n",
        "6",
        "--alist",
        alist.to_str().unwrap(),
        "--dump",
        dir.join("design6.txt").to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let text = std::fs::read_to_string(&alist).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "132 36");
    assert!(lines[2].split(' ').all(|w| w == "3"));
    assert!(lines[3].split(' ').all(|w| w == "11"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn construct_rejects_unwritable_path() {
    let output = run(&["construct", "--n", "3", "--alist", "/nonexistent-dir/h.alist"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn verify_passes_for_small_n() {
    for n in ["2", "7"] {
        let output = run(&["verify", "--n", n]);
        assert!(output.status.success(), "n={n}");
        let text = stdout(&output);
        assert!(text.lines().all(|l| l.ends_with("PASS")), "n={n}: {text}");
    }
}

#[test]
fn verify_reports_named_failures_for_injected_defects() {
    let output = run(&["verify", "--n", "3", "--inject-defect", "drop-block"]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("lambda-table: FAIL"));
    assert!(text.contains("block-count: FAIL"));
    assert!(text.contains("p1: PASS"));

    let output = run(&["verify", "--n", "3", "--inject-defect", "dup-block"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("lambda-table: FAIL"));
}

#[test]
fn analyze_reports_known_values() {
    let cases = [
        ("9", 306u64, 254u64, "0.830"),
        ("12", 552, 482, "0.873"),
    ];
    for (n, length, dimension, rate) in cases {
        let output = run(&["analyze", "--n", n]);
        assert!(output.status.success());
        let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
        assert_eq!(report["length"].as_u64(), Some(length), "n={n}");
        assert_eq!(report["dimension"].as_u64(), Some(dimension), "n={n}");
        assert_eq!(report["rate_decimal"].as_str(), Some(rate), "n={n}");
    }

    let output = run(&["analyze", "--n", "4"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["min_distance"].as_u64(), Some(4));
}

#[test]
fn analyze_writes_json_file() {
    let dir = temp_dir("analyze");
    let path = dir.join("report.json");
    let output = run(&["analyze", "--n", "3", "--json", path.to_str().unwrap()]);
    assert!(output.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["n"].as_u64(), Some(3));
    assert_eq!(report["min_distance"].as_u64(), Some(6));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn rate_table_edges() {
    let output = run(&["rate-table", "--from", "2", "--to", "2"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "n length dimension rate\n2 12 2 0.167\n");

    let output = run(&["rate-table", "--from", "8", "--to", "8"]);
    let text = stdout(&output);
    let rate: f64 = text.lines().nth(1).unwrap().split(' ').nth(3).unwrap().parse().unwrap();
    assert!(rate >= 0.8);
}

#[test]
fn latin_prints_pair_and_verdict() {
    let output = run(&["latin", "--n", "3"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("0 1 2 3 4 5\n1 2 3 4 5 0\n"));
    assert!(text.ends_with("pseudo-orthogonal: true\n"));

    let output = run(&["latin", "--n", "10"]);
    assert!(stdout(&output).ends_with("pseudo-orthogonal: true\n"));
}

#[test]
fn simulate_noiseless_and_row_count() {
    let output = run(&[
        "simulate", "--n", "3", "--channel", "bsc", "--points", "0.0,0.02,0.04",
        "--frames", "20", "--decoder", "sum-product", "--seed", "9",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "point,frames,bit_errors,frame_errors,ber,fer,seed");
    let zero_point: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(zero_point[0], "bsc:0.0000");
    assert_eq!(zero_point[2], "0");
    assert_eq!(zero_point[3], "0");
}

#[test]
fn simulate_is_reproducible_and_thread_invariant() {
    let dir = temp_dir("simulate");
    let args_base = [
        "simulate", "--n", "3", "--channel", "bsc", "--points", "0.03",
        "--frames", "60", "--decoder", "bit-flip", "--seed", "31",
    ];
    let csv1 = dir.join("a.csv");
    let csv2 = dir.join("b.csv");
    let mut first = args_base.to_vec();
    first.extend(["--csv", csv1.to_str().unwrap()]);
    assert!(run(&first).status.success());
    let mut second = args_base.to_vec();
    second.extend(["--threads", "4", "--csv", csv2.to_str().unwrap()]);
    assert!(run(&second).status.success());
    assert_eq!(
        std::fs::read(&csv1).unwrap(),
        std::fs::read(&csv2).unwrap()
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn simulate_awgn_points_are_db_values() {
    let output = run(&[
        "simulate", "--n", "3", "--channel", "awgn", "--points", "8.0,4.0",
        "--frames", "30", "--decoder", "sum-product", "--seed", "2",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().nth(1).unwrap().starts_with("awgn:8.00,"));
    assert!(text.lines().nth(2).unwrap().starts_with("awgn:4.00,"));
}

#[test]
fn construct_default_paths() {
    let dir = temp_dir("construct-defaults");
    let output = bin()
        .args(["construct", "--n", "4"])
        .current_dir(&dir)
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    assert!(dir.join("h4.alist").exists());
    assert!(dir.join("design4.txt").exists());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_with_two() {
    let output = run(&["analyze"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["no-such-command"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn invalid_n_exits_with_one() {
    let output = run(&["analyze", "--n", "1"]);
    assert_eq!(output.status.code(), Some(1));
}
