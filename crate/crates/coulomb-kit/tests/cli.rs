//! End-to-end runs of the `coulomb-kit` binary: exit codes, parse
//! diagnostics, the shell-cap environment variable, and byte-identical JSON
//! at the process level.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coulomb-kit"))
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = bin();
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

#[test]
fn anomaly_exit_codes() {
    let pass = run(&["anomaly", &data("sl2_cotangent_v1.json")], &[]);
    assert_eq!(pass.status.code(), Some(0));

    let fail = run(&["anomaly", &data("sl2_single_half_hyper.json")], &[]);
    assert_eq!(fail.status.code(), Some(1));
    let text = String::from_utf8_lossy(&fail.stdout);
    assert!(text.contains("\"1/2\""), "monopole number missing: {text}");
}

#[test]
fn malformed_specs_exit_2_with_diagnostics() {
    let dir = std::env::temp_dir();
    let bad = dir.join("coulomb_kit_bad_spec.json");
    std::fs::write(&bad, r#"{"schema": "coulomb-kit/repspec/1", "group": [{"preset": "XX", "size": 1}], "representation": []}"#).unwrap();
    let out = run(&["rep-info", bad.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("group[0]"), "no location in: {text}");

    let missing = run(&["anomaly", "/nonexistent/never.json"], &[]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn hilbert_not_good_exit_3_and_env_cap() {
    let out = run(
        &["hilbert", &data("sl2_single_half_hyper.json"), "--order", "4"],
        &[],
    );
    assert_eq!(out.status.code(), Some(3));

    // A tighter cap via the environment also trips on a good theory whose
    // order outruns the allowed shells.
    let out = run(
        &["hilbert", &data("torus_two_hypers.json"), "--order", "30"],
        &[("COULOMB_KIT_SHELL_CAP", "5")],
    );
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("shell cap 5"), "{text}");

    let ok = run(
        &["hilbert", &data("torus_two_hypers.json"), "--order", "30"],
        &[],
    );
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn json_reports_are_byte_identical_across_runs_and_threads() {
    let mut outputs = Vec::new();
    for threads in ["1", "2", "4"] {
        for _ in 0..3 {
            let out = run(
                &[
                    "hilbert",
                    &data("sl2_n3.json"),
                    "--order",
                    "15",
                    "--threads",
                    threads,
                    "--json",
                ],
                &[],
            );
            assert_eq!(out.status.code(), Some(0));
            outputs.push(out.stdout);
        }
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));

    let mut suite39 = Vec::new();
    for _ in 0..3 {
        let out = run(
            &["kostant-verify", "--n", "1", "--samples", "15", "--seed", "39", "--json"],
            &[],
        );
        assert_eq!(out.status.code(), Some(0));
        suite39.push(out.stdout);
    }
    assert!(suite39.windows(2).all(|w| w[0] == w[1]));
    // A different seed still passes but produces a different input echo.
    let other = run(
        &["kostant-verify", "--n", "1", "--samples", "15", "--seed", "40", "--json"],
        &[],
    );
    assert_eq!(other.status.code(), Some(0));
    assert_ne!(suite39[0], other.stdout);
}

#[test]
fn kostant_verify_rejects_large_n_with_guidance() {
    let out = run(&["kostant-verify", "--n", "5", "--samples", "3", "--seed", "1"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("seed_y_point"), "no guidance in: {text}");
}

#[test]
fn rep_info_reports_sp4_split() {
    let out = run(&["rep-info", &data("sp4_defining.json"), "--json"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["dim"], 4);
    assert_eq!(v["results"]["symplectic"], true);
    assert_eq!(v["results"]["cotangent_split"][0][0], serde_json::json!([0, 1]));
    assert_eq!(v["results"]["cotangent_split"][1][0], serde_json::json!([1, 0]));
}
