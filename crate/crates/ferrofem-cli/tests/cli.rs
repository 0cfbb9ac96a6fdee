//! End-to-end tests of the `ferrofem` binary: output file formats, the
//! published spot values reachable from the command line, config handling,
//! and byte-level determinism of the CSV artifacts.

use std::path::Path;
use std::process::{Command, Output};

const COLUMNS: [&str; 12] = [
    "u_l2", "u_h1", "p", "m_l2", "div_m", "h_l2", "div_h", "z", "k", "omega_l2", "omega_h1",
    "phi",
];

fn ferrofem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ferrofem"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn run_ok(args: &[&str]) -> Output {
    let out = ferrofem(args);
    assert!(
        out.status.success(),
        "command {:?} failed:\n{}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn stderr_of_failure(args: &[&str]) -> String {
    let out = ferrofem(args);
    assert!(!out.status.success(), "command {:?} should have failed", args);
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

fn json_of(path: &Path) -> serde_json::Value {
    serde_json::from_str(&read(path)).unwrap_or_else(|e| panic!("parse {}: {e}", path.display()))
}

/// Splits a CSV document into rows of fields (no quoting is ever emitted).
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

#[test]
fn converge_reports_errors_and_orders_in_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    run_ok(&["converge", "--example", "1", "--k", "4,8", "--out", out]);

    let rows = csv_rows(&read(&dir.path().join("converge_ex1.csv")));
    assert_eq!(rows.len(), 5, "header, two meshes, two order rows");
    let mut header = vec!["K".to_string()];
    header.extend(COLUMNS.iter().map(|s| s.to_string()));
    assert_eq!(rows[0], header);
    assert_eq!(rows[1][0], "4");
    assert_eq!(rows[2][0], "8");
    assert_eq!(rows[3][0], "order_ls");
    assert_eq!(rows[4][0], "order_last");
    for row in &rows[1..] {
        assert_eq!(row.len(), 13);
        for field in &row[1..] {
            field.parse::<f64>().unwrap_or_else(|_| panic!("numeric field, got {field}"));
        }
    }

    let doc = json_of(&dir.path().join("converge_ex1.json"));
    assert_eq!(doc["spec"]["mode"], "converge");
    assert_eq!(doc["spec"]["example"], 1);
    let json_rows = doc["rows"].as_array().expect("rows array");
    assert_eq!(json_rows.len(), 2);
    for (row, k) in json_rows.iter().zip([4, 8]) {
        assert_eq!(row["k"], k);
        for name in COLUMNS {
            let v = row["errors"][name].as_f64().expect("error value");
            assert!(v.is_finite() && v > 0.0, "{name} = {v}");
        }
    }

    // Halving h halves the O(h) errors and quarters the O(h^2) ones; the
    // two-mesh fit must land near those slopes (u: 0.0554 -> 0.0140).
    let order = |name: &str| doc["order_ls"][name].as_f64().expect("order");
    assert!((1.7..=2.3).contains(&order("u_l2")), "u_l2 order {}", order("u_l2"));
    assert!((0.8..=1.3).contains(&order("m_l2")), "m_l2 order {}", order("m_l2"));
    assert!((0.8..=1.3).contains(&order("h_l2")), "h_l2 order {}", order("h_l2"));
    for name in COLUMNS {
        let ls = doc["order_ls"][name].as_f64().expect("ls");
        let last = doc["order_last"][name].as_f64().expect("last");
        assert!(
            (ls - last).abs() < 1e-9,
            "two meshes: the fit and the last-pair slope coincide ({name})"
        );
    }
}

#[test]
fn single_run_reproduces_the_published_velocity_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    // Example 2 defaults to T = 2, so this is the published 16-step setup.
    run_ok(&["run", "--example", "2", "--k", "8", "--out", out]);

    let doc = json_of(&dir.path().join("run_ex2_k8.json"));
    assert_eq!(doc["k"], 8);
    assert_eq!(doc["steps"], 16);
    assert!((doc["final_time"].as_f64().unwrap() - 2.0).abs() < 1e-12);

    let u = doc["errors"]["u_l2"].as_f64().expect("u error");
    assert!(
        (0.0144 / 1.35..=0.0144 * 1.35).contains(&u),
        "u L2 error {u} vs published 0.0144"
    );

    for key in ["div_residual", "mag_residual", "grad_residual", "k_residual"] {
        let r = doc["final_step"][key].as_f64().expect("residual");
        assert!(r.abs() <= 1e-9, "{key} = {r}");
    }
    let e = doc["energy"]["E"].as_f64().unwrap();
    assert!(e.is_finite() && e > 0.0);
}

#[test]
fn energy_series_record_every_step_and_decay() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    run_ok(&["energy", "--k", "2", "--dt", "1/8", "--T", "0.5", "--out", out]);

    let rows = csv_rows(&read(&dir.path().join("energy_k2_dt1over8.csv")));
    assert_eq!(rows[0], ["n", "t", "energy", "dissipation"]);
    assert_eq!(rows.len(), 6, "header plus steps 0..=4");
    let energies: Vec<f64> = rows[1..].iter().map(|r| r[2].parse().unwrap()).collect();
    assert!(energies.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-8)), "{energies:?}");

    let doc = json_of(&dir.path().join("energy_summary.json"));
    let series = doc["series"].as_array().expect("series");
    assert_eq!(series.len(), 1);
    assert_eq!(series[0]["k"], 2);
    assert_eq!(series[0]["file"], "energy_k2_dt1over8.csv");
    assert_eq!(series[0]["nonincreasing"], true);
}

#[test]
fn csv_output_is_byte_identical_across_runs() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        run_ok(&["converge", "--example", "1", "--k", "4", "--out", dir.path().to_str().unwrap()]);
        (read(&dir.path().join("converge_ex1.csv")), read(&dir.path().join("converge_ex1.json")))
    };
    let (csv_a, json_a) = run();
    let (csv_b, json_b) = run();
    assert_eq!(csv_a, csv_b, "repeated runs must agree byte for byte");
    assert_eq!(json_a, json_b);
}

#[test]
fn config_file_drives_a_run_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("exp.conf");
    std::fs::write(
        &cfg,
        format!(
            "# smallest useful setup\nexample = 1\nk = 2\ndt = 1/4\nT = 0.5\nsweeps = 5\nout = {}\n",
            dir.path().display()
        ),
    )
    .unwrap();
    run_ok(&["run", "--config", cfg.to_str().unwrap(), "--sweeps", "1"]);

    let doc = json_of(&dir.path().join("run_ex1_k2.json"));
    assert_eq!(doc["spec"]["sweeps"], 1, "flag wins over the file");
    assert_eq!(doc["spec"]["example"], 1);
    assert_eq!(doc["k"], 2);
    assert_eq!(doc["steps"], 2);
}

#[test]
fn bad_inputs_fail_with_named_causes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();

    let err = stderr_of_failure(&["run", "--example", "7", "--out", out]);
    assert!(err.contains("example"), "{err}");

    let err = stderr_of_failure(&["run", "--example", "1", "--k", "4", "--dt", "0.3", "--out", out]);
    assert!(err.contains("integer multiple"), "{err}");

    let err = stderr_of_failure(&["run", "--param", "wobble=2", "--out", out]);
    assert!(err.contains("wobble"), "{err}");

    let cfg = dir.path().join("bad.conf");
    std::fs::write(&cfg, "wibble = 3\n").unwrap();
    let err = stderr_of_failure(&["run", "--config", cfg.to_str().unwrap()]);
    assert!(err.contains("wibble"), "{err}");

    let missing = stderr_of_failure(&["run", "--config", "/nonexistent/nope.conf"]);
    assert!(missing.contains("nope.conf"), "{missing}");
}
