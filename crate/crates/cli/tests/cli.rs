//! End-to-end tests against the built binary: exit-code contract, report
//! goldens, backend equivalence, the env-var guard, determinism under
//! parallelism, and atomic file output.

use std::process::{Command, Output};

fn signbal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signbal"))
        .args(args)
        .env_remove("SIGNBAL_GUARD_N")
        .output()
        .expect("binary runs")
}

fn signbal_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signbal"))
        .args(args)
        .env_remove("SIGNBAL_GUARD_N")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(exit_code(&signbal(&["frobnicate"])), 2);
    assert_eq!(
        exit_code(&signbal(&["enumerate", "--n", "5", "--patterns", "1325"])),
        2
    );
    assert_eq!(
        exit_code(&signbal(&["balance", "--n-lo", "5", "--n-max", "3"])),
        2
    );
    assert_eq!(exit_code(&signbal(&["verify", "thm9.9"])), 2);
    assert_eq!(exit_code(&signbal(&["count", "--n", "0"])), 2);

    let malformed = signbal(&["enumerate", "--n", "5", "--patterns", "1325"]);
    assert!(
        stderr(&malformed).contains("value 5"),
        "{}",
        stderr(&malformed)
    );
}

#[test]
fn count_reports_catalan_number() {
    let output = signbal(&["count", "--patterns", "321", "--n", "9"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "4862\n");
}

#[test]
fn verify_ex39_exits_zero_with_passing_verdict() {
    let output = signbal(&["verify", "ex3.9", "--format", "json", "--no-timing"]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["schema_version"], 1);
    assert_eq!(value["verdicts"][0]["name"], "ex3.9");
    assert_eq!(value["verdicts"][0]["passed"], true);
    assert!(value["verdicts"][0].get("elapsed_ms").is_none());
}

#[test]
fn balance_csv_golden_for_balanced_pair() {
    let output = signbal(&[
        "balance",
        "--patterns",
        "132,231",
        "--n-max",
        "8",
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&output), 0);
    let body = stdout(&output);
    let lines: Vec<&str> = body.trim_end().lines().collect();
    assert_eq!(lines[0], "n,even,odd,imbalance,balanced");
    assert_eq!(lines.len(), 8); // header + one row per n in 2..=8
    for line in &lines[1..] {
        assert!(line.ends_with(",0,true"), "{line}");
    }
}

#[test]
fn balance_counterexample_exits_1_with_full_report() {
    let output = signbal(&[
        "balance",
        "--patterns",
        "1324,2143",
        "--n-max",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&output), 1);
    let body = stdout(&output);
    assert!(body.contains("5,45,43,2,false"), "{body}");
}

#[test]
fn oracle_guard_violation_is_a_structured_error() {
    let output = signbal(&["count", "--patterns", "321", "--n", "11", "--oracle"]);
    assert_eq!(exit_code(&output), 1);
    let error: serde_json::Value = serde_json::from_str(&stderr(&output)).unwrap();
    assert_eq!(error["error"]["kind"], "oracle_guard_exceeded");
    assert_eq!(error["schema_version"], 1);
    assert!(stdout(&output).is_empty());
}

#[test]
fn guard_env_var_raises_and_lowers_the_oracle_limit() {
    let lowered = signbal_env(
        &["count", "--patterns", "321", "--n", "5", "--oracle"],
        "SIGNBAL_GUARD_N",
        "4",
    );
    assert_eq!(exit_code(&lowered), 1);

    let admitted = signbal_env(
        &["count", "--patterns", "321", "--n", "5", "--oracle"],
        "SIGNBAL_GUARD_N",
        "5",
    );
    assert_eq!(exit_code(&admitted), 0);
    assert_eq!(stdout(&admitted), "42\n");

    let garbage = signbal_env(
        &["count", "--patterns", "321", "--n", "5", "--oracle"],
        "SIGNBAL_GUARD_N",
        "many",
    );
    assert_eq!(exit_code(&garbage), 2);
}

#[test]
fn oracle_and_pruned_backends_emit_identical_payloads() {
    for args in [
        vec![
            "balance",
            "--patterns",
            "321",
            "--n-max",
            "6",
            "--format",
            "json",
        ],
        vec![
            "enumerate",
            "--patterns",
            "132,213",
            "--n",
            "6",
            "--format",
            "csv",
        ],
        vec![
            "count",
            "--patterns",
            "1234,3214",
            "--n",
            "7",
            "--format",
            "json",
        ],
        vec!["verify", "prop3.5", "--format", "json", "--no-timing"],
    ] {
        let pruned = signbal(&args);
        let mut oracle_args = args.clone();
        oracle_args.push("--oracle");
        let oracle = signbal(&oracle_args);
        assert_eq!(exit_code(&pruned), exit_code(&oracle));
        assert_eq!(stdout(&pruned), stdout(&oracle), "args {args:?}");
    }
}

#[test]
fn reports_are_byte_identical_across_parallelism() {
    let sequential = signbal(&[
        "verify",
        "thm1.3",
        "--n-max",
        "9",
        "--format",
        "json",
        "--no-timing",
        "--parallelism",
        "1",
    ]);
    let parallel = signbal(&[
        "verify",
        "thm1.3",
        "--n-max",
        "9",
        "--format",
        "json",
        "--no-timing",
        "--parallelism",
        "4",
    ]);
    assert_eq!(exit_code(&sequential), 0);
    assert_eq!(stdout(&sequential), stdout(&parallel));
    assert!(!stdout(&sequential).is_empty());
}

#[test]
fn identical_requests_produce_identical_bytes() {
    let first = signbal(&["scan", "--n-max", "5", "--format", "csv"]);
    let second = signbal(&["scan", "--n-max", "5", "--format", "csv"]);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn scan_writes_csv_and_orbit_sidecar_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("scan.csv");
    let output = signbal(&[
        "scan",
        "--n-max",
        "5",
        "--format",
        "csv",
        "--output",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).is_empty());

    let body = std::fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = body.trim_end().lines().collect();
    assert_eq!(
        lines[0],
        "pair,set_balanced,balanced_through,first_unbalanced,orbit_id"
    );
    assert_eq!(lines.len(), 277); // header + 276 pairs
    assert!(body.contains("\"1324,2143\",true,4,5,"), "{body}");

    let sidecar = std::fs::read_to_string(dir.path().join("scan.orbits.json")).unwrap();
    let orbits: serde_json::Value = serde_json::from_str(&sidecar).unwrap();
    assert!(orbits["orbits"].is_object());

    // stdout run matches the file contents
    let direct = signbal(&["scan", "--n-max", "5", "--format", "csv"]);
    assert_eq!(stdout(&direct), body);
}

#[test]
fn contains_json_reports_witness_positions() {
    let output = signbal(&[
        "contains",
        "--host",
        "24153",
        "--patterns",
        "132,4321",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["host"], "24153");
    assert_eq!(value["results"][0]["pattern"], "132");
    assert_eq!(value["results"][0]["contained"], true);
    assert_eq!(value["results"][0]["indices"], serde_json::json!([1, 2, 5]));
    assert_eq!(value["results"][1]["pattern"], "4321");
    assert_eq!(value["results"][1]["contained"], false);
}

#[test]
fn lis_reports_subsequence_lengths() {
    let output = signbal(&["lis", "--perm", "24153", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["lis"], 3);
    assert_eq!(value["lds"], 2);
}

#[test]
fn enumerate_unrestricted_lists_the_whole_symmetric_group() {
    let output = signbal(&["enumerate", "--n", "4"]);
    assert_eq!(exit_code(&output), 0);
    let body = stdout(&output);
    let lines: Vec<&str> = body.trim_end().lines().collect();
    assert_eq!(lines.len(), 24);
    assert_eq!(lines[0], "1234");
    assert_eq!(lines[23], "4321");
}

#[test]
fn verify_precondition_violations_are_structured_errors() {
    // The balance-criterion check needs n-max >= 4 to witness the excluded
    // set's failure; below that the work is refused, not weakened.
    let output = signbal(&["verify", "thm1.2", "--n-max", "3"]);
    assert_eq!(exit_code(&output), 1);
    let error: serde_json::Value = serde_json::from_str(&stderr(&output)).unwrap();
    assert_eq!(error["error"]["kind"], "range_too_small");
}

#[test]
fn enumerate_over_the_member_cap_fails_fast() {
    let output = signbal(&["enumerate", "--n", "13"]);
    assert_eq!(exit_code(&output), 1);
    let error: serde_json::Value = serde_json::from_str(&stderr(&output)).unwrap();
    assert_eq!(error["error"]["kind"], "output_cap_exceeded");
}

#[test]
fn verify_all_passes_every_target() {
    let output = signbal(&["verify", "all", "--format", "csv", "--no-timing"]);
    assert_eq!(exit_code(&output), 0);
    let body = stdout(&output);
    for name in [
        "thm1.2",
        "thm1.3",
        "ex3.9",
        "ss-counts",
        "prop3.5",
        "catalan321",
    ] {
        assert!(body.contains(&format!("{name},true")), "{body}");
    }
}
