//! End-to-end tests against the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn mws(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mws"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn tmpfile(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("mws-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn construct_bk3_reports_fws() {
    let out = mws(&["construct", "bk", "--k", "3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("gmat 2 3 7\n"), "code precedes the report");
    assert!(text.contains("\nn 7\n"));
    assert!(text.contains("\nd 1\n"));
    assert!(text.contains("fws true\n"));
    assert!(text.contains("spread 0\n"));
}

#[test]
fn construct_dq4_strictly_compact() {
    let out = mws(&["construct", "dq", "--q", "4"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("\nn 10\n"));
    assert!(text.contains("\nd 6\n"));
    assert!(text.contains("strictly_compact true\n"));
    assert!(text.contains("fws false\n"));
}

#[test]
fn construct_dq_rejects_k3() {
    let out = mws(&["construct", "dq", "--q", "3", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_bk_rejects_odd_field() {
    let out = mws(&["construct", "bk", "--k", "2", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_then_analyze_roundtrip() {
    let path = tmpfile("b3.gmat");
    let out = mws(&[
        "construct",
        "bk",
        "--k",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // with --out the code goes to the file, not stdout
    assert!(stdout(&out).starts_with("q 2\n"));
    let disk = std::fs::read_to_string(&path).unwrap();
    assert!(disk.starts_with("gmat 2 3 7\n"));

    let analyzed = mws(&["analyze", path.to_str().unwrap(), "--method", "both"]);
    assert!(analyzed.status.success(), "{}", stderr(&analyzed));
    assert_eq!(stdout(&analyzed), stdout(&out), "same report either way");
    std::fs::remove_file(&path).ok();
}

#[test]
fn analyze_pow2_projective_and_json() {
    let path = tmpfile("pow2.pmul");
    let out = mws(&[
        "construct",
        "pow2",
        "--q",
        "3",
        "--k",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let analyzed = mws(&[
        "analyze",
        path.to_str().unwrap(),
        "--method",
        "projective",
        "--json",
    ]);
    assert!(analyzed.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&analyzed).trim()).unwrap();
    assert_eq!(v["n"], 15);
    assert_eq!(v["qk"], 4);
    assert_eq!(v["flags"]["mws"], true);
    std::fs::remove_file(&path).ok();
}

#[test]
fn analyze_degenerate_names_column() {
    let path = tmpfile("degen.gmat");
    std::fs::write(&path, "gmat 2 2 3\n1 0 0\n1 0 1\n").unwrap();
    let out = mws(&["analyze", path.to_str().unwrap(), "--method", "projective"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("column 1"), "{}", stderr(&out));
    std::fs::remove_file(&path).ok();
}

#[test]
fn enumerate_delta_2_and_6() {
    let out = mws(&["enumerate", "--q", "3", "--k", "3", "--delta", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "6 9 10 11 12 13 14 15 16 17 18 19 20\n\
         7 8 10 11 12 13 14 15 16 17 18 19 20\n\
         count 2\n"
    );
    let out6 = mws(&["enumerate", "--q", "3", "--k", "3", "--delta", "6"]);
    assert!(out6.status.success());
    assert!(stdout(&out6).ends_with("count 11\n"));
}

#[test]
fn enumerate_infeasible_delta() {
    let out = mws(&["enumerate", "--q", "3", "--k", "3", "--delta", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_requires_exactly_one_selector() {
    let out = mws(&["enumerate", "--q", "3", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let both = mws(&["enumerate", "--q", "3", "--k", "3", "--n", "20", "--delta", "2"]);
    assert_eq!(both.status.code(), Some(2)); // clap conflict
}

#[test]
fn search_is_reproducible() {
    let args = ["search", "--q", "3", "--k", "3", "--n", "32", "--seed", "1"];
    let a = mws(&args);
    let b = mws(&args);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(stdout(&a), stdout(&b), "same seed, same hit");
    assert!(stdout(&a).starts_with("pmul 3 3\n"));
    assert!(stderr(&a).contains("iterations"));
}

#[test]
fn search_miss_exits_one() {
    let out = mws(&[
        "search", "--q", "2", "--k", "2", "--n", "2", "--mode", "exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_hit_analyzes_to_spread_50() {
    let path = tmpfile("hit.pmul");
    let out = mws(&[
        "search", "--q", "3", "--k", "3", "--n", "32", "--seed", "1", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let analyzed = mws(&["analyze", path.to_str().unwrap(), "--method", "both"]);
    assert!(analyzed.status.success());
    let text = stdout(&analyzed);
    assert!(text.contains("spread 50\n"));
    assert!(text.contains("mws true\n"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_passes_with_three_deviations() {
    let out = mws(&["verify", "--q-max", "4", "--k-max", "3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let deviations = text.lines().filter(|l| l.starts_with("DEVIATION")).count();
    let failures = text.lines().filter(|l| l.starts_with("FAIL")).count();
    assert_eq!(deviations, 3);
    assert_eq!(failures, 0);
    assert!(text.contains("failures=0"));
}

#[test]
fn verify_json_summary() {
    let out = mws(&["verify", "--q-max", "3", "--k-max", "2", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["deviation"], 3);
}

#[test]
fn construct_pow2_as_matrix() {
    let out = mws(&["construct", "pow2", "--q", "2", "--k", "2", "--format", "gmat"]);
    assert!(out.status.success());
    // n = 7 columns expanded from multiplicities 1, 2, 4
    assert!(stdout(&out).starts_with("gmat 2 2 7\n"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["construct", "hsum", "--q", "3", "--k", "3"],
        vec!["enumerate", "--q", "3", "--k", "3", "--n", "21"],
        vec!["verify", "--q-max", "3", "--k-max", "3"],
    ] {
        let a = mws(&args);
        let b = mws(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
    }
}
