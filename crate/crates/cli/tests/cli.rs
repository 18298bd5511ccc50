//! Black-box tests of the `colorlie` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn colorlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn colorlie_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_colorlie"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn witt_single_degree() {
    let out = colorlie(&["witt", "--rank", "2", "--degree", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "9\n");
}

#[test]
fn witt_color_degree() {
    let out = colorlie(&["witt", "--rank", "2", "--odd", "1", "--degree", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");
}

#[test]
fn witt_series_json() {
    let out = colorlie(&[
        "witt",
        "--rank",
        "2",
        "--max-degree",
        "8",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["meta"]["truncation"], 8);
    assert_eq!(
        doc["result"],
        serde_json::json!([0, 2, 1, 2, 3, 6, 9, 18, 30])
    );
}

#[test]
fn witt_large_values_stay_exact_in_json() {
    let out = colorlie(&["witt", "--rank", "2", "--degree", "100", "--format", "json"]);
    assert!(out.status.success());
    // dim L_100 for rank 2 does not fit in 64 bits; the JSON integer must be
    // emitted exactly: (2^100 - 2^50 - 2^20 + 2^10)/100.
    assert!(stdout(&out).contains("12676506002282282755967953152"));
}

#[test]
fn schreier_color_rank() {
    let out = colorlie(&["schreier", "color", "--rank-l", "4", "--odd-codim", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7\n");
}

#[test]
fn schreier_group_rank() {
    let out = colorlie(&["schreier", "group", "--rank", "2", "--index", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");
}

#[test]
fn schreier_lie_commutator_case() {
    let dir = std::env::temp_dir().join("colorlie-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("two-letters.json");
    std::fs::write(
        &path,
        r#"{"group": [], "gamma_on_generators": [], "generators": [
            {"label": "x", "weight": 1, "degree": []},
            {"label": "y", "weight": 1, "degree": []}
        ]}"#,
    )
    .unwrap();
    let out = colorlie(&[
        "schreier",
        "lie",
        "--alphabet",
        path.to_str().unwrap(),
        "--quotient-coeffs",
        "0,2",
        "--max-degree",
        "6",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["result"], serde_json::json!([0, 0, 1, 2, 3, 4, 5]));
}

#[test]
fn euler_reads_stdin() {
    let out = colorlie_with_stdin(
        &["euler", "--max-degree", "7", "--format", "csv"],
        "0 1 1\n",
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("degree,coefficient\n0,1\n1,1\n2,2\n3,2\n"));
}

#[test]
fn euler_and_inverse_round_trip() {
    let out = colorlie(&[
        "euler",
        "--coeffs",
        "0,2,1,2",
        "--max-degree",
        "10",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let coeffs: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    let back = colorlie(&[
        "inv-euler",
        "--coeffs",
        &coeffs.join(","),
        "--max-degree",
        "10",
        "--format",
        "csv",
    ]);
    assert!(back.status.success());
    let text = stdout(&back);
    let mut lines = text.lines().skip(1);
    let coeff = |l: Option<&str>| l.unwrap().split(',').nth(1).unwrap().to_string();
    assert_eq!(coeff(lines.next()), "0");
    assert_eq!(coeff(lines.next()), "2");
    assert_eq!(coeff(lines.next()), "1");
    assert_eq!(coeff(lines.next()), "2");
    assert!(lines.all(|l| l.ends_with(",0")));
}

#[test]
fn envelope_restricted_series() {
    let out = colorlie(&[
        "envelope",
        "--even",
        "1",
        "--prime",
        "3",
        "--allow-small-characteristic",
        "--max-degree",
        "4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["result"], serde_json::json!([1, 1, 1, 0, 0]));
}

#[test]
fn envelope_small_characteristic_needs_override() {
    let out = colorlie(&["envelope", "--even", "1", "--odd", "1", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn growth_estimate_json() {
    let coeffs: Vec<String> = std::iter::once(0u64)
        .chain((1..=30).map(|n| 3u64.pow(n)))
        .map(|v| v.to_string())
        .collect();
    let out = colorlie(&[
        "growth",
        "--coeffs",
        &coeffs.join(","),
        "--window",
        "10,30",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["result"]["classification"], "exponential");
    assert_eq!(doc["meta"]["window"], serde_json::json!([10, 30]));
    let rate = doc["result"]["rate"].as_f64().unwrap();
    assert!((rate - 3.0).abs() < 1e-9);
}

#[test]
fn verify_witt_exits_zero() {
    let out = colorlie(&["verify", "witt", "--max-rank", "3", "--max-degree", "7"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("3 of 3 checks passed"));
}

#[test]
fn verify_pbw_json_reports_passed() {
    let out = colorlie(&["verify", "pbw", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["result"]["passed"], true);
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = [
        "verify",
        "jacobi",
        "--seed",
        "7",
        "--trials",
        "25",
        "--max-degree",
        "3",
        "--format",
        "json",
    ];
    let a = colorlie(&args);
    let b = colorlie(&args);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(doc["meta"]["seed"], 7);
}

#[test]
fn invalid_input_exits_two() {
    // Nonzero constant term rejected by the Euler transform.
    let out = colorlie(&["euler", "--coeffs", "1,2"]);
    assert_eq!(out.status.code(), Some(2));

    // Composite characteristic rejected.
    let out = colorlie(&[
        "envelope",
        "--even",
        "1",
        "--prime",
        "6",
        "--allow-small-characteristic",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Malformed coefficients rejected.
    let out = colorlie(&["euler", "--coeffs", "0,abc"]);
    assert_eq!(out.status.code(), Some(2));

    // Degree zero rejected.
    let out = colorlie(&["witt", "--rank", "2", "--degree", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn schreier_lie_rejects_odd_alphabets() {
    let dir = std::env::temp_dir().join("colorlie-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("super-alphabet.json");
    std::fs::write(
        &path,
        r#"{"group": [2], "gamma_on_generators": [[-1]], "generators": [
            {"label": "x", "weight": 1, "degree": [0]},
            {"label": "y", "weight": 1, "degree": [1]}
        ]}"#,
    )
    .unwrap();
    let out = colorlie(&[
        "schreier",
        "lie",
        "--alphabet",
        path.to_str().unwrap(),
        "--quotient-coeffs",
        "0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("purely even"));
}

#[test]
fn table_format_is_default() {
    let out = colorlie(&["witt", "--rank", "2", "--max-degree", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("degree  coefficient\n"));
    assert!(text.contains("     1  2\n"));
}
