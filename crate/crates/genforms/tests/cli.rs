//! End-to-end checks of the command-line surface: flags, exit codes, output
//! formats, and the report round trip.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_genforms"))
}

fn stdout_of(args: &[&str]) -> (String, i32) {
    let out = bin().args(args).output().expect("binary runs");
    (String::from_utf8_lossy(&out.stdout).into_owned(), out.status.code().unwrap_or(-1))
}

#[test]
fn series_subcommand_prints_closed_forms() {
    let (out, code) =
        stdout_of(&["series", "--family", "froberg", "--n", "3", "--degrees", "2,2,2,2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + 3z + 2z^2");

    let (out, code) = stdout_of(&["series", "--family", "max2", "--degrees", "3,2", "--prec", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + 2z + 2z^2 + z^3 + z^4 + z^5");

    let (out, code) = stdout_of(&["series", "--family", "paths", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + 5z + 8z^2 + z^3");
}

#[test]
fn compute_emits_versioned_json_with_seed_and_prime() {
    let (out, code) = stdout_of(&[
        "compute", "--algebra", "comm", "--n", "3", "--gens", "generic:2x4", "--max-deg", "4",
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["prime"], 32003);
    assert_eq!(doc["seed"], 42);
    assert!(doc["version"].as_str().is_some());
    assert_eq!(doc["series"]["coeffs"][0], "1");
    assert_eq!(doc["series"]["coeffs"][1], "3");
    assert_eq!(doc["series"]["coeffs"][2], "2");
    assert_eq!(doc["series"]["coeffs"][3], "0");
}

#[test]
fn compute_tensor_fl_family() {
    let (out, code) = stdout_of(&[
        "compute", "--algebra", "tensor", "--n", "4", "--gens", "fl-family:q=2", "--max-deg", "6",
        "--trials", "1", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    // Prefix of (1 - 4z + 3z^2 - z^5)^{-1}: 1, 4, 13, 40, 121, 365, 1101.
    let coeffs: Vec<&str> =
        doc["series"]["coeffs"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(coeffs, ["1", "4", "13", "40", "121", "365", "1101"]);
}

#[test]
fn verify_exit_codes_follow_expectations() {
    // Proved case: expectation met, exit 0.
    let (_, code) =
        stdout_of(&["verify", "--check", "froberg", "--n", "3", "--degrees", "3,3,3,3"]);
    assert_eq!(code, 0);

    // Known counterexample with the matching expectation also exits 0.
    let (_, code) = stdout_of(&[
        "verify", "--check", "odd-sums", "--n", "7", "--d", "3", "--trials", "2",
    ]);
    assert_eq!(code, 0);

    // Forcing the wrong expectation flips the exit code to 1.
    let (_, code) = stdout_of(&[
        "verify", "--check", "odd-sums", "--n", "7", "--d", "3", "--trials", "2", "--expect",
        "match",
    ]);
    assert_eq!(code, 1);

    // Open cells never fail.
    let (_, code) = stdout_of(&[
        "verify", "--check", "powers", "--n", "3", "--d", "2", "--k", "2", "--r", "4",
        "--trials", "1",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn report_json_rechecks_to_identical_verdict() {
    let dir = std::env::temp_dir().join("genforms-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (_, code) = stdout_of(&[
        "verify", "--check", "froberg", "--n", "2", "--degrees", "3,2", "--format", "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (out, code) = stdout_of(&["verify", "--recheck", path.to_str().unwrap()]);
    assert_eq!(code, 0, "recheck must reproduce the stored verdict: {out}");
    assert!(out.contains("identical"));
}

#[test]
fn usage_errors_exit_2() {
    let (_, code) = stdout_of(&["compute", "--algebra", "comm", "--n", "3", "--gens", "junk:1"]);
    assert_eq!(code, 2);
    let (_, code) = stdout_of(&["verify", "--check", "no-such-check", "--n", "2"]);
    assert_eq!(code, 2);
    // clap rejects unknown flags with exit code 2 as well.
    let out = bin().args(["series", "--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_caps_exit_3() {
    let (_, code) = stdout_of(&["search-max", "--n", "3", "--degrees", "5,4,3,2", "--cap", "10"]);
    assert_eq!(code, 3);
}

#[test]
fn grid_runs_from_config_with_csv_columns() {
    let dir = std::env::temp_dir().join("genforms-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("small.grid");
    std::fs::write(
        &config,
        "check = froberg\nseed = 11\ntrials = 2\nn = 2, 3\ndegrees = 2,2 | 3,2\n",
    )
    .unwrap();
    let (out, code) = stdout_of(&["grid", "--config", config.to_str().unwrap()]);
    assert_eq!(code, 0, "all proved cells must meet expectations:\n{out}");
    assert!(out.contains("cells                 4"));
    assert!(out.contains("expectation failures  0"));

    let (csv, code) =
        stdout_of(&["grid", "--config", config.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "check_id,params,verdict,first_divergence,seed,prime");
    assert_eq!(csv.lines().count(), 5);
    assert!(csv.lines().skip(1).all(|l| l.starts_with("froberg,") && l.contains(",match,")));
}

#[test]
fn search_max_reports_unique_maximum() {
    let (out, code) = stdout_of(&["search-max", "--n", "2", "--degrees", "3,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("unique coefficientwise maximum series: true"));
    assert!(out.contains("sharp two-variable bound attained: true"));
    let (out, code) =
        stdout_of(&["search-max", "--n", "2", "--degrees", "3,2", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc["unique_maximum"], true);
}

#[test]
fn bigraded_series_subcommand() {
    let (out, code) = stdout_of(&[
        "series", "--family", "bigraded", "--m", "1", "--n", "1", "--bidegrees", "1:1",
        "--prec-x", "2", "--prec-y", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc["coeffs"][1][1], "3"); // coefficient i + j + 1 at (1,1)
}
