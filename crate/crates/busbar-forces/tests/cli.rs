//! End-to-end tests of the command-line interface: subcommands, file
//! formats, exit codes, and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_busbar-forces"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("busbar-forces-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn compute_emits_one_positive_row() {
    let out = run(&[
        "compute", "--a", "0.005", "--b", "0.05", "--d", "0.02", "--i1", "1", "--i2", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "fx");
    assert_eq!(lines[1], "4.20668531e-6");
}

#[test]
fn compute_rejects_touching_conductors() {
    let out = run(&[
        "compute", "--a", "0.005", "--b", "0.05", "--d", "0.01", "--i1", "1", "--i2", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("d > 2a"), "stderr: {err}");
    assert!(!err.contains("panicked"), "stderr: {err}");
}

#[test]
fn compute_non_adjacent_emits_both_components() {
    let out = run(&[
        "compute", "--a", "0.005", "--b", "0.05", "--d", "0.011", "--h", "0.11", "--i1", "1",
        "--i2", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "fx,fy");
    assert_eq!(lines[1], "3.44274394e-7,2.14291878e-6");
}

#[test]
fn example_three_is_a_120_row_grid() {
    let out = run(&["example", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "d,h,fx,fy");
    assert_eq!(lines.len(), 121);
    for line in &lines[1..] {
        assert_eq!(line.split(',').count(), 4);
    }
}

#[test]
fn example_output_is_byte_stable() {
    let first = run(&["example", "1"]);
    let second = run(&["example", "1"]);
    assert!(first.status.success() && second.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn json_output_carries_units_metadata() {
    let out = run(&[
        "compute", "--a", "0.005", "--b", "0.05", "--d", "0.02", "--i1", "1", "--i2", "1",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["metadata"]["units"], "N/m");
    assert_eq!(value["metadata"]["method"], "closed-form");
}

#[test]
fn sweep_config_writes_the_requested_file() {
    let config_path = temp_path("sweep.json");
    let output_path = temp_path("sweep.csv");
    std::fs::write(
        &config_path,
        format!(
            r#"{{
                "mode": "sweep",
                "geometry": {{
                    "a": 0.005, "b": 0.05,
                    "d": {{ "start": 0.011, "stop": 0.2, "count": 5 }}
                }},
                "currents": {{ "i1": 1, "i2": 1 }},
                "output": {{ "format": "csv", "path": "{}" }}
            }}"#,
            output_path.display()
        ),
    )
    .unwrap();
    let out = run(&["sweep", "--config", config_path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let written = std::fs::read_to_string(&output_path).unwrap();
    let lines: Vec<&str> = written.lines().collect();
    assert_eq!(lines[0], "d,fx");
    assert_eq!(lines.len(), 6);
    std::fs::remove_file(&config_path).ok();
    std::fs::remove_file(&output_path).ok();
}

#[test]
fn sweep_subcommand_rejects_other_modes() {
    let config_path = temp_path("mode-mismatch.json");
    std::fs::write(
        &config_path,
        r#"{
            "mode": "adjacent",
            "geometry": { "a": 0.005, "b": 0.05, "d": 0.02 },
            "currents": { "i1": 1, "i2": 1 }
        }"#,
    )
    .unwrap();
    let out = run(&["sweep", "--config", config_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("expects 'sweep'"));
    std::fs::remove_file(&config_path).ok();
}

#[test]
fn timeseries_config_produces_samples() {
    let config_path = temp_path("timeseries.json");
    std::fs::write(
        &config_path,
        r#"{
            "mode": "timeseries",
            "geometry": { "a": 0.005, "b": 0.05, "d": 0.02 },
            "waveform": {
                "amplitude": 1.0, "frequency_hz": 50.0,
                "phase1_rad": 0.0, "phase2_rad": 1.5707963267948966,
                "samples": 100, "periods": 1.0
            }
        }"#,
    )
    .unwrap();
    let out = run(&["timeseries", "--config", config_path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,i1,i2,fx");
    assert_eq!(lines.len(), 101);
    std::fs::remove_file(&config_path).ok();
}

#[test]
fn validate_accepts_good_configs_and_rejects_bad_ones() {
    let good = temp_path("good.json");
    std::fs::write(
        &good,
        r#"{
            "mode": "non-adjacent",
            "geometry": { "a": 0.005, "b": 0.05, "d": 0.011, "h": 0.11 },
            "currents": { "i1": 1, "i2": 1 }
        }"#,
    )
    .unwrap();
    let out = run(&["validate", "--config", good.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("configuration OK"));

    let bad = temp_path("bad.json");
    std::fs::write(
        &bad,
        r#"{
            "mode": "non-adjacent",
            "geometry": { "a": 0.005, "b": 0.05, "d": 0.011, "h": 0.10 },
            "currents": { "i1": 1, "i2": 1 }
        }"#,
    )
    .unwrap();
    let out = run(&["validate", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("h > 2b"));

    std::fs::remove_file(&good).ok();
    std::fs::remove_file(&bad).ok();
}

#[test]
fn unknown_config_keys_are_rejected() {
    let path = temp_path("unknown-key.json");
    std::fs::write(
        &path,
        r#"{
            "mode": "adjacent",
            "geometry": { "a": 0.005, "b": 0.05, "d": 0.02 },
            "currents": { "i1": 1, "i2": 1 },
            "extra": 1
        }"#,
    )
    .unwrap();
    let out = run(&["validate", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("extra"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn missing_config_file_is_an_io_error() {
    let out = run(&["sweep", "--config", "/nonexistent/there.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unresolvable_tolerance_is_a_convergence_failure() {
    // order 2 with an impossible tolerance exhausts the subdivision budget.
    let out = run(&[
        "compute", "--a", "0.005", "--b", "0.05", "--d", "0.011", "--i1", "1", "--i2", "1",
        "--method", "reduced-quadrature", "--order", "2", "--rel-tol", "1e-16",
    ]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("did not converge"));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("compute"));
}
