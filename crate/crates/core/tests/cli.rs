use std::process::{Command, Output};

use serde_json::Value;

fn matgrowth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matgrowth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = matgrowth(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    matgrowth(args).status.code().expect("exit code")
}

#[test]
fn jsr_reports_bounds_and_witness() {
    let v = json(&["jsr", "--pair", "binary24", "--max-len", "8"]);
    assert_eq!(v["lower_witness"], "AAAB");
    assert_eq!(v["pair"], "binary24");
    let lower = v["lower"].as_f64().unwrap();
    assert!((lower - ((3.0 + 13f64.sqrt()) / 2.0).powf(0.25)).abs() < 1e-11);
    assert!(v["upper"].as_f64().unwrap() >= lower);
}

#[test]
fn maximizers_and_probe() {
    let v = json(&["maximizers", "--pair", "1,2;0,1|1,0;2,1", "--len", "4"]);
    assert_eq!(v["max_value"], "29");
    assert_eq!(v["witnesses"], serde_json::json!(["ABAB", "BABA"]));

    let v = json(&["probe-period", "--pair", "a2bm2", "--max-len", "12"]);
    assert_eq!(v["period"]["period"], 4);
    assert_eq!(v["period"]["word"], "AABB");
}

#[test]
fn average_serializes_exact_rationals() {
    let v = json(&["average", "--pair", "a1b1", "--n", "3"]);
    assert_eq!(v["s_ave_exact"], "3/2");
    assert_eq!(v["mean_matrix"], "1,1/2;1/2,1");
    assert_eq!(v["recurrence"]["det"], "3/4");

    let v = json(&[
        "average",
        "--pair",
        "a2b2",
        "--n",
        "8",
        "--check",
        "trials=500,seed=9",
    ]);
    assert_eq!(v["check"]["expected"], "128");
    assert_eq!(v["check"]["seed"], 9);
    assert_eq!(v["check"]["trials"], 500);
}

#[test]
fn lyapunov_is_reproducible_and_records_the_generator() {
    let args = [
        "lyapunov", "--pair", "a1b1", "--n", "20000", "--trials", "4", "--seed", "11",
    ];
    let first = matgrowth(&args);
    let second = matgrowth(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["seed"], 11);
    assert!(v["rng_algorithm"]
        .as_str()
        .unwrap()
        .contains("xoshiro256++"));

    let other = matgrowth(&[
        "lyapunov", "--pair", "a1b1", "--n", "20000", "--trials", "4", "--seed", "12",
    ]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn bounds_girth_verify_bound() {
    let v = json(&["bounds", "--pair", "a2b2", "--n", "20000", "--trials", "4"]);
    assert_eq!(v["tighter"], "sturman_thiffeault");

    let v = json(&["girth", "--pair", "a2b2", "--p", "11"]);
    assert_eq!(v["collision"]["depth"], 5);
    assert_eq!(v["entry_bound_holds"], true);

    let v = json(&[
        "verify",
        "--pair",
        "2,0;0,3|3,5;0,5",
        "--u",
        "AB^10A^2BA^2BA^10",
        "--v",
        "B^2A^6B^2A^2BABABA^2B^2A^2BAB^2",
    ]);
    assert_eq!(v["equal"], true);
    assert_eq!(
        (v["u_len"].as_u64(), v["v_len"].as_u64()),
        (Some(27), Some(27))
    );

    let v = json(&["bound", "--p", "1000003", "--s", "2.41421356237"]);
    assert_eq!(v["girth_bound"], 16);
}

#[test]
fn summary_csv_to_file_overwrites() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let path_str = path.to_str().unwrap();
    let args = [
        "summary",
        "--pair",
        "a2b2",
        "--pair",
        "a1b1",
        "--n",
        "20000",
        "--trials",
        "4",
        "--search-depth",
        "6",
        "--format",
        "csv",
        "--out",
        path_str,
    ];
    for _ in 0..2 {
        assert_eq!(code(&args), 0);
    }
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "pair,s_max,s_ave,s_gen,lambda,s_ave_exact");
    assert!(lines[1].starts_with("a2b2,2.41421356237,2,"));
    assert!(lines[2].starts_with("a1b1,1.61803398875,1.5,"));
    assert!(text.ends_with('\n'));
}

#[test]
fn threads_flag_is_accepted() {
    let v = json(&[
        "--threads",
        "2",
        "maximizers",
        "--pair",
        "a1b1",
        "--len",
        "3",
    ]);
    assert_eq!(v["length"], 3);
}

#[test]
fn exit_codes() {
    // input errors
    assert_eq!(code(&["jsr", "--pair", "1,2;0|1,0;1,1"]), 1);
    assert_eq!(code(&["jsr", "--pair", "nosuchpair"]), 1);
    assert_eq!(code(&["girth", "--pair", "a2b2", "--p", "12"]), 1);
    assert_eq!(
        code(&["verify", "--pair", "a2b2", "--u", "A^0", "--v", "B"]),
        1
    );
    assert_eq!(
        code(&["lyapunov", "--pair", "1,1;1,1|1,0;0,1", "--n", "100"]),
        1
    );
    assert_eq!(code(&["bound", "--p", "7", "--s", "1"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    // resource caps
    assert_eq!(code(&["maximizers", "--pair", "a2b2", "--len", "31"]), 2);
    assert_eq!(code(&["average", "--pair", "a2b2", "--n", "20000"]), 2);
    assert_eq!(
        code(&["girth", "--pair", "a2b2", "--p", "1000003", "--budget", "100"]),
        2
    );
    // help is not an error
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn error_messages_go_to_stderr() {
    let out = matgrowth(&["jsr", "--pair", "1,2/0;0,1|1,0;1,1"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("denominator"));
}
