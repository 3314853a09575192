//! End-to-end tests of the command-line surface and its exit-code contract:
//! 0 ok, 2 parse/input error, 3 not in class, 4 budget exhausted.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bullmwss"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn unique_path(name: &str) -> PathBuf {
    // Tests in one binary run concurrently; every call gets its own file.
    static COUNTER: std::sync::atomic::AtomicUsize = std::sync::atomic::AtomicUsize::new(0);
    let tag = COUNTER.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
    std::env::temp_dir().join(format!("bullmwss-test-{}-{tag}-{name}", std::process::id()))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = unique_path(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn c5_file() -> PathBuf {
    write_temp("c5.mwss", "p mwss 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n")
}

fn p7_file() -> PathBuf {
    write_temp("p7.mwss", "p mwss 7 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\n")
}

fn fixture_file() -> PathBuf {
    let path = unique_path("fixture.mwss");
    let out = run(&["generate", "--family", "fixture", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    path
}

#[test]
fn solve_c5() {
    let file = c5_file();
    let out = run(&["solve", "--class", "p7bull", "--input", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("weight: 2"), "{}", stdout(&out));
}

#[test]
fn solve_json_shape() {
    let file = c5_file();
    let out = run(&["solve", "--class", "auto", "--json", "--input", file.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["weight"], 2);
    assert_eq!(doc["class"], "p7bull");
    let set = doc["set"].as_array().unwrap();
    assert_eq!(set.len(), 2);
    assert!(set.iter().all(|v| (1..=5).contains(&v.as_u64().unwrap())));
    for key in ["recursions", "leaves", "c5_scans"] {
        assert!(doc["stats"][key].is_u64(), "missing stats.{key}");
    }
}

#[test]
fn solve_fixture_matches_oracle_command() {
    let file = fixture_file();
    let solve = run(&["solve", "--class", "p7bull", "--json", "--input", file.to_str().unwrap()]);
    let oracle = run(&["oracle", "--json", "--input", file.to_str().unwrap()]);
    assert!(solve.status.success() && oracle.status.success());
    let s: serde_json::Value = serde_json::from_str(stdout(&solve).trim()).unwrap();
    let o: serde_json::Value = serde_json::from_str(stdout(&oracle).trim()).unwrap();
    assert_eq!(s["weight"], o["weight"]);
    assert_eq!(s["weight"], 6);
}

#[test]
fn strict_mode_rejects_out_of_class_input() {
    let file = p7_file();
    let out = run(&[
        "solve", "--class", "p7bull", "--strict", "--input", file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("witness p7"), "stderr: {err}");
    assert!(err.contains("[1, 2, 3, 4, 5, 6, 7]"), "stderr: {err}");
}

#[test]
fn parse_errors_exit_2() {
    let file = write_temp("bad.mwss", "p mwss 3 1\nq 1 2\n");
    let out = run(&["solve", "--input", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = std::env::temp_dir().join("bullmwss-test-definitely-missing.mwss");
    let out = run(&["solve", "--input", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_4() {
    let file = fixture_file();
    let out = run(&["oracle", "--budget", "2", "--input", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn recognize_reports_membership_and_primality() {
    let bull = write_temp("bull.mwss", "p mwss 5 5\ne 1 2\ne 2 3\ne 3 4\ne 2 5\ne 3 5\n");
    let out = run(&["recognize", "--json", "--input", bull.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["p7bull"]["member"], false);
    assert_eq!(doc["p7bull"]["witness"]["pattern"], "bull");
    assert_eq!(doc["s123bull"]["member"], false);
    assert_eq!(doc["prime"], true);

    let c5 = c5_file();
    let out = run(&["recognize", "--json", "--input", c5.to_str().unwrap()]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["p7bull"]["member"], true);
    assert_eq!(doc["s123bull"]["member"], true);
    assert_eq!(doc["prime"], true);
}

#[test]
fn recognize_prints_a_module_for_twin_expansions() {
    // C5 with vertex 1 duplicated as 6: {1,6} is a homogeneous set.
    let file = write_temp(
        "twin.mwss",
        "p mwss 6 7\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 6 2\ne 6 5\n",
    );
    let out = run(&["recognize", "--json", "--input", file.to_str().unwrap()]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["p7bull"]["member"], true);
    assert_eq!(doc["prime"], false);
    assert_eq!(doc["homogeneous_set"], serde_json::json!([1, 6]));
}

#[test]
fn generate_output_parses_and_validates() {
    let path = unique_path("gen.mwss");
    let out = run(&[
        "generate", "--family", "random", "--n", "14", "--p", "0.3", "--class", "p7bull",
        "--seed", "5", "--weights", "random", "--wmax", "9",
        "--output", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let rec = run(&["recognize", "--json", "--input", path.to_str().unwrap()]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&rec).trim()).unwrap();
    assert_eq!(doc["p7bull"]["member"], true);

    // Reproducible: the same seed writes identical bytes.
    let path2 = unique_path("gen2.mwss");
    let out = run(&[
        "generate", "--family", "random", "--n", "14", "--p", "0.3", "--class", "p7bull",
        "--seed", "5", "--weights", "random", "--wmax", "9",
        "--output", path2.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(&path2).unwrap());
}

#[test]
fn generate_c7blowup_needs_seven_sizes() {
    let path = unique_path("blow.mwss");
    let out = run(&[
        "generate", "--family", "c7blowup", "--sizes", "2,1,1", "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "generate", "--family", "c7blowup", "--sizes", "2,1,1,1,1,1,1",
        "--output", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
}

#[test]
fn bench_requires_sizes_and_writes_the_pinned_header() {
    let csv = unique_path("bench.csv");
    let out = run(&["bench", "--csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "bench", "--family", "c7blowup", "--sizes", "14,21", "--repeat", "1",
        "--oracle-cap-ms", "2000", "--csv", csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&csv).unwrap();
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("n,time_ms,recursions,leaves"));
    assert_eq!(lines.clone().count(), 2);
    assert!(lines.all(|l| l.starts_with("14,") || l.starts_with("21,")));
    assert!(stdout(&out).contains("log-log slope"));
}

#[test]
fn solve_auto_falls_back_to_the_second_class() {
    // A P7 fails the first class but is a member of the second.
    let file = p7_file();
    let out = run(&["solve", "--class", "auto", "--json", "--input", file.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["class"], "s123bull");
    assert_eq!(doc["weight"], 4);
}

#[test]
fn strict_json_reports_a_structured_diagnostic() {
    let file = p7_file();
    let out = run(&[
        "solve", "--class", "p7bull", "--strict", "--json", "--input", file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["error"], "not_in_class");
    assert_eq!(doc["witness"]["label"], "p7");
    assert_eq!(doc["witness"]["vertices"], serde_json::json!([1, 2, 3, 4, 5, 6, 7]));
}

#[test]
fn solve_auto_rejects_graphs_outside_both_classes() {
    // A bull is outside both classes.
    let bull = write_temp("bull2.mwss", "p mwss 5 5\ne 1 2\ne 2 3\ne 3 4\ne 2 5\ne 3 5\n");
    let out = run(&["solve", "--class", "auto", "--input", bull.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn threads_do_not_change_the_answer() {
    let file = fixture_file();
    let one = run(&["solve", "--class", "p7bull", "--json", "--input", file.to_str().unwrap()]);
    let four = run(&[
        "solve", "--class", "p7bull", "--threads", "4", "--json", "--input", file.to_str().unwrap(),
    ]);
    let a: serde_json::Value = serde_json::from_str(stdout(&one).trim()).unwrap();
    let b: serde_json::Value = serde_json::from_str(stdout(&four).trim()).unwrap();
    assert_eq!(a["weight"], b["weight"]);
    assert_eq!(a["set"], b["set"]);
    assert_eq!(a["stats"], b["stats"]);
}
