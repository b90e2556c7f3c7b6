//! End-to-end checks of the binary: fixture output, report determinism,
//! exit codes and the CSV surfaces.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cliff13"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn cliff13")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cliff13-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn rep_fixtures_match_the_classical_matrices() {
    let output = run(&["rep", "--fixtures"]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let e0 = parsed["e0"].as_array().unwrap();
    // diag(1, 1, -1, -1)
    for (row, want) in [1.0, 1.0, -1.0, -1.0].iter().enumerate() {
        assert_eq!(e0[row][row][0], *want);
        assert_eq!(e0[row][row][1], 0.0);
    }
    // gamma^2 row 0 col 3 is -i
    assert_eq!(parsed["e2"][0][3][0], 0.0);
    assert_eq!(parsed["e2"][0][3][1], -1.0);
    // byte-for-byte stability across runs
    let again = run(&["rep", "--fixtures"]);
    assert_eq!(output.stdout, again.stdout);
}

#[test]
fn frame_dumps_have_the_documented_shape() {
    let output = run(&["frame", "--k", "3"]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed["dim_complex"], 12);
    assert_eq!(parsed["basis"].as_array().unwrap().len(), 12);
    assert_eq!(parsed["generators"].as_array().unwrap().len(), 9);
    assert_eq!(parsed["structure_constants"].as_array().unwrap().len(), 9);
    // t_(3) carries the scalar coefficient 3/4
    assert_eq!(parsed["t"][""][0], 0.75);

    let bad = run(&["frame", "--k", "9"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn spin_reports_membership_and_lorentz_block() {
    let output = run(&["spin", "--generator", r#"{"12": [0.3, 0.0]}"#]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(parsed["is_spin"], true);
    let p11 = parsed["lorentz"][1][1].as_f64().unwrap();
    assert!((p11 - (0.6f64).cos()).abs() < 1e-12);
    // exterior exponent outside its domain is a clean failure
    let outside = run(&["spin", "--generator", r#"{"01": [1.5, 0.0]}"#, "--exterior"]);
    assert_eq!(outside.status.code(), Some(2));
}

#[test]
fn geometry_emits_csv_rows() {
    let dir = tempdir();
    let config = dir.join("conformal.json");
    std::fs::write(
        &config,
        r#"{"preset": "conformal", "params": {"kind": "exponential", "kappa": [0.2, -0.15, 0.1, 0.05]}}"#,
    )
    .unwrap();
    let output = run(&["geometry", "--config", config.to_str().unwrap(), "--points", "4"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("x0,x1,x2,x3,g00"));
    assert!(header.ends_with("sqrt_neg_g,gamma_sup,riemann_sup,ricci_sup,scalar_curvature"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn equations_report_is_deterministic_modulo_timestamp() {
    let strip = |text: &str| -> String {
        text.lines().filter(|l| !l.contains("timestamp_unix")).collect::<Vec<_>>().join("\n")
    };
    let a = run(&["equations", "--suite", "even", "--k", "1", "--seed", "11"]);
    let b = run(&["equations", "--suite", "even", "--k", "1", "--seed", "11"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(strip(&stdout(&a)), strip(&stdout(&b)));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(parsed["pass"], true);
    assert_eq!(parsed["suites"][0]["suite"], "even[flat]");

    let c = run(&["equations", "--suite", "even", "--k", "1", "--seed", "12"]);
    assert_ne!(strip(&stdout(&a)), strip(&stdout(&c)), "seed reaches the field stream");
}

#[test]
fn equations_rejects_bad_requests() {
    let bad_suite = run(&["equations", "--suite", "nope"]);
    assert_eq!(bad_suite.status.code(), Some(2));
    let bad_k = run(&["equations", "--suite", "even", "--k", "3"]);
    assert_eq!(bad_k.status.code(), Some(2));
    let dir = tempdir();
    let config = dir.join("bad.json");
    std::fs::write(&config, r#"{"preset": "wormhole"}"#).unwrap();
    let bad_config =
        run(&["equations", "--suite", "even", "--config", config.to_str().unwrap()]);
    assert_eq!(bad_config.status.code(), Some(2));
    let diag = String::from_utf8_lossy(&bad_config.stderr).into_owned();
    assert!(diag.contains("schema"), "diagnostics point at the schema: {diag}");
}

#[test]
fn fixture_export_writes_wave_coordinates() {
    let dir = tempdir();
    let csv = dir.join("fixture.csv");
    let output = run(&[
        "equations",
        "--suite",
        "even",
        "--k",
        "1",
        "--export-fixture",
        csv.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert_eq!(header, "x0,x1,x2,x3,re_psi0,im_psi0,re_psi1,im_psi1,re_psi2,im_psi2,re_psi3,im_psi3");
    // the rest-frame wave has unit modulus in its first coordinate
    let first: Vec<f64> = lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    let (re, im) = (first[4], first[5]);
    assert!((re * re + im * im - 1.0).abs() < 1e-12);
    assert!(first[6..].iter().all(|v| v.abs() < 1e-15));
}
