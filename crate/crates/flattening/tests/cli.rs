//! Black-box tests of the command-line interface: exit codes, output
//! format, flag handling, and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flattening"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flattening"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn flagship_invocation_prints_rank_18() {
    let out = run(&["3", "[5,2,1]", "[1,2,3]", "a^3+b*c^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "rank: 18");
}

#[test]
fn bound_flag_prints_quotient() {
    let out = run(&["3", "[5,2,1]", "[1,2,3]", "a^3+b*c^2", "--bound", "a"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("rank: 18"));
    let bound_line = lines.next().unwrap();
    assert!(bound_line.starts_with("bound: "), "got {bound_line}");
}

#[test]
fn matrix_flag_round_trips() {
    let dir = std::env::temp_dir().join("flattening-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("golden.txt");
    let path_str = path.to_str().unwrap();
    let out = run(&["2", "[2,1]", "[2]", "b", "--matrix", path_str]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "2 3\n-1 0 0\n0 -1/2 0\n");
    // the bundled reader reproduces the matrix
    let m = flattening::RationalMatrix::read_text(text.as_bytes()).unwrap();
    assert_eq!((m.rows(), m.cols()), (2, 3));
    assert_eq!(m.rank(), 2);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn basis_flag_lists_tableaux() {
    let out = run(&["2", "[2,1]", "[2]", "b", "--basis"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("rows ([2,1]):"));
    assert!(text.contains("cols ([2]):"));
    assert!(text.contains("[[1, 1], [2]]"));
    assert!(text.contains("[[2, 2]]"));
}

#[test]
fn boxfill_flag_switches_map() {
    // the box-filling matrix for x2 is [[1,0,0],[0,1,0]], rank 2
    let dir = std::env::temp_dir().join("flattening-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("boxfill.txt");
    let out = run(&["2", "[2,1]", "[2]", "b", "--boxfill", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "2 3\n1 0 0\n0 1 0\n");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn selfcheck_passes_for_pieri_map() {
    let out = run(&["2", "[2,1]", "[2]", "b", "--selfcheck"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("selfcheck: PASS"));
}

#[test]
fn selfcheck_fails_for_boxfill_map() {
    let out = run(&["2", "[2,1]", "[2]", "b", "--selfcheck", "--boxfill"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("selfcheck: FAIL"));
}

#[test]
fn invalid_removal_exits_2() {
    let out = run(&["2", "[2,2]", "[1]", "a"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn parse_error_exits_3() {
    let out = run(&["2", "[2,1]", "[2]", "a+$"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["2", "[2,1]", "[2]", "z"]);
    assert_eq!(out.status.code(), Some(3), "variable index beyond n");
}

#[test]
fn degree_mismatch_exits_4() {
    let out = run(&["2", "[2,1]", "[2]", "a^2"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn usage_error_exits_1() {
    let out = run(&["2", "[2,1]", "[2]"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["2", "[2,1]", "[2]", "a", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic_and_thread_independent() {
    let a = run(&["3", "[3,2,1]", "[1,2]", "a*b+c^2", "--basis"]);
    let b = run(&["3", "[3,2,1]", "[1,2]", "a*b+c^2", "--basis"]);
    let c = run_env(&["3", "[3,2,1]", "[1,2]", "a*b+c^2", "--basis"], "THREADS", "3");
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), stdout(&c));
}

#[test]
fn bad_threads_value_exits_1() {
    let out = run_env(&["2", "[2,1]", "[2]", "b"], "THREADS", "zero");
    assert_eq!(out.status.code(), Some(1));
}
