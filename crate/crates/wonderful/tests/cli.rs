//! End-to-end tests of the `wonderful` binary: exit codes, output schema,
//! byte-for-byte determinism, and the oracle-cap environment variable.

use std::process::{Command, Output};

use serde_json::Value;

fn wonderful(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wonderful"))
        .args(args)
        .env_remove("WONDERFUL_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn json_of(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn roots_round_trip() {
    let out = wonderful(&["roots", "F4"]);
    assert_eq!(out.status.code(), Some(0));
    let value = json_of(&out);
    assert_eq!(value["schema_version"], "1");
    assert_eq!(value["results"][0]["positive_root_count"], 24);
    assert_eq!(
        value["results"][0]["theta_coroot"],
        serde_json::json!([2, 3, 2, 1])
    );
    assert_eq!(value["provenance"]["F4"], "section-3");
}

#[test]
fn curve_examples_from_the_short_root_row() {
    // L(alpha_1) . C_{theta_s} = 1 in G2, point at infinity on the first divisor
    let out = wonderful(&[
        "curve",
        "--type",
        "G2",
        "--additive",
        "theta-short",
        "--weight",
        "2,-1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value = json_of(&out);
    assert_eq!(
        value["results"][0]["orbit_at_infinity"],
        serde_json::json!([1])
    );
    assert_eq!(value["results"][1]["degree"], 1);

    // the first fundamental weight pairs to 2 with theta_s^vee = 2a1 + 3a2
    let out = wonderful(&[
        "curve",
        "--type",
        "G2",
        "--additive",
        "theta-short",
        "--weight",
        "1,0",
    ]);
    let value = json_of(&out);
    assert_eq!(value["results"][1]["degree"], 2);

    // B3: L(alpha_1) . C_{theta_s} = 2
    let out = wonderful(&[
        "curve",
        "--type",
        "B3",
        "--additive",
        "theta-short",
        "--weight",
        "2,-1,0",
    ]);
    let value = json_of(&out);
    assert_eq!(value["results"][1]["degree"], 2);
}

#[test]
fn mult_curve_report() {
    let out = wonderful(&["curve", "--type", "A2", "--mult", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let value = json_of(&out);
    assert_eq!(value["results"][0]["anticanonical_degree"], 6);
    assert_eq!(value["results"][0]["smooth"], true);
    assert_eq!(value["results"][0]["orbit_at_zero"], serde_json::json!([1]));
    assert_eq!(
        value["results"][0]["orbit_at_infinity"],
        serde_json::json!([2])
    );
}

#[test]
fn vmrt_reports() {
    let out = wonderful(&["vmrt", "A1"]);
    let value = json_of(&out);
    assert_eq!(value["results"][0]["family"], "P3_full");
    assert_eq!(value["results"][0]["dim_kx"], 2);
    let out = wonderful(&["vmrt", "E8"]);
    let value = json_of(&out);
    assert_eq!(value["results"][0]["family"], "adjoint_variety");
    assert_eq!(value["results"][0]["dim_kx"], 57);
    assert_eq!(value["results"][0]["i0"], 8);
    let out = wonderful(&["vmrt", "A4"]);
    let value = json_of(&out);
    assert_eq!(value["results"][0]["family"], "segre_projection");
    assert_eq!(value["results"][0]["dim_kx"], 8);
}

#[test]
fn orbit_queries() {
    let out = wonderful(&["orbits", "D4", "--contains", "2", "--in", "1,2,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["results"][0]["answer"], true);
    let out = wonderful(&["orbits", "D4", "--contains", "3", "--in", "1,2,4"]);
    assert_eq!(json_of(&out)["results"][0]["answer"], false);
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(wonderful(&["roots", "D3"]).status.code(), Some(2));
    assert_eq!(wonderful(&["table", "bogus"]).status.code(), Some(2));
    assert_eq!(wonderful(&["curve", "--type", "A2"]).status.code(), Some(2));
    assert_eq!(
        wonderful(&["orbits", "A2", "--contains", "5", "--in", "1"])
            .status
            .code(),
        Some(2)
    );
    // success paths
    assert_eq!(wonderful(&["table", "lemma-dim"]).status.code(), Some(0));
    assert_eq!(
        wonderful(&["verify", "--max-rank", "3"]).status.code(),
        Some(0)
    );
    // usage errors mention the offending input
    let err = wonderful(&["roots", "D3"]);
    let message = String::from_utf8_lossy(&err.stderr);
    assert!(message.contains("rank 3"), "stderr: {message}");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["table", "remark-lines", "--max-rank", "8"],
        vec![
            "table",
            "remark-short",
            "--max-rank",
            "8",
            "--format",
            "tsv",
        ],
        vec!["verify", "--max-rank", "3"],
        vec!["roots", "E6"],
    ] {
        let first = wonderful(&args);
        let second = wonderful(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn verify_reports_per_identity_status() {
    let out = wonderful(&["verify", "--max-rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let value = json_of(&out);
    let results = value["results"].as_array().unwrap();
    // per-identity records carry a status
    assert!(results
        .iter()
        .any(|r| r["check"] == "lemma-roots-i" && r["status"] == "pass"));
    // oracle checks are skipped without --all
    assert!(results
        .iter()
        .any(|r| r["check"] == "w0-oracle-equivalence" && r["status"] == "skip"));
    let total = results.last().unwrap();
    assert_eq!(total["subject"], "total");
    assert_eq!(total["fail"], 0);
}

#[test]
fn oracle_cap_env_is_honored() {
    // cap 4: only A1 (|W| = 2) fits at max rank 2
    let out = Command::new(env!("CARGO_BIN_EXE_wonderful"))
        .args(["verify", "--all", "--max-rank", "2"])
        .env("WONDERFUL_ORACLE_CAP", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = value["results"].as_array().unwrap();
    let status_of = |subject: &str| {
        results
            .iter()
            .find(|r| r["check"] == "w0-oracle-equivalence" && r["subject"] == subject)
            .map(|r| r["status"].as_str().unwrap().to_string())
            .unwrap()
    };
    assert_eq!(status_of("A1"), "pass");
    assert_eq!(status_of("A2"), "skip");
    assert_eq!(status_of("G2"), "skip");

    // the --oracle-cap flag overrides the environment
    let out = Command::new(env!("CARGO_BIN_EXE_wonderful"))
        .args(["verify", "--all", "--max-rank", "2", "--oracle-cap", "50"])
        .env("WONDERFUL_ORACLE_CAP", "4")
        .output()
        .expect("binary runs");
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = value["results"].as_array().unwrap();
    assert!(results.iter().any(|r| r["check"] == "w0-oracle-equivalence"
        && r["subject"] == "A2"
        && r["status"] == "pass"));

    // a malformed env value is a usage error
    let out = Command::new(env!("CARGO_BIN_EXE_wonderful"))
        .args(["verify", "--all", "--max-rank", "2"])
        .env("WONDERFUL_ORACLE_CAP", "many")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tsv_has_header_and_rows() {
    let out = wonderful(&["table", "lemma-roots", "--max-rank", "4", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
    assert!(header.contains(&"type"));
    assert!(header.contains(&"pairing_one_set"));
    // A1..A4, B2..B4, C2..C4, D4, F4, G2
    assert_eq!(lines.count(), 13);
}
