// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn rabisim(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rabisim"))
        .args(args)
        .arg("--out")
        .arg(dir)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// Rows of a CSV as header-keyed string maps.
fn read_csv(path: &Path) -> Vec<std::collections::HashMap<String, String>> {
    let mut r = csv::Reader::from_path(path).unwrap();
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    r.records()
        .map(|rec| header.iter().cloned().zip(rec.unwrap().iter().map(String::from)).collect())
        .collect()
}

fn num(row: &std::collections::HashMap<String, String>, key: &str) -> f64 {
    row[key].parse().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn unknown_key_exits_2_and_names_it() {
    let d = TempDir::new().unwrap();
    let cfg = write(d.path(), "bad.toml", "omega_r = 8.13\ntemprature = 90\n");
    let o = rabisim(d.path(), &["levels", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("temprature"), "{}", stderr(&o));
}

#[test]
fn empty_axis_exits_2() {
    let d = TempDir::new().unwrap();
    let cfg = write(d.path(), "e.toml", "freq_points = 0\n");
    let o = rabisim(d.path(), &["trace", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(2));
    let o = rabisim(d.path(), &["trace", "--preset", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decoupled_levels_are_bare() {
    let d = TempDir::new().unwrap();
    let cfg = write(d.path(), "g0.toml", "g = 0.0\nflux_start = -2.0\nflux_stop = 2.0\nflux_points = 5\n");
    let o = rabisim(d.path(), &["levels", "--config", &cfg]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = read_csv(&d.path().join("levels.csv"));
    assert_eq!(rows.len(), 5 * 6);
    for r in rows.iter().filter(|r| r["label"] == "(1,-)") {
        // Qubit-like at g = 0: ω_q(Φ) = sqrt(Δ² + ε²).
        let phi = num(r, "flux_mPhi0") * 1e-3 * 2.067833848e-15;
        let eps_ghz = 2.0 * 500e-9 * phi / 6.62607015e-34 * 1e-9;
        let wq = (4.2f64.powi(2) + eps_ghz.powi(2)).sqrt();
        assert!((num(r, "transition_GHz") - wq).abs() < 1e-9, "{r:?}");
    }
    for r in rows.iter().filter(|r| r["label"] == "(1,+)") {
        assert!((num(r, "transition_GHz") - 8.13).abs() < 1e-9, "{r:?}");
    }
}

#[test]
fn lab_and_si_configs_give_identical_output() {
    let d = TempDir::new().unwrap();
    let lab = write(d.path(), "lab.toml", "g = 0.5\nflux = -1.0\ntemperature = 120.0\n");
    let two_pi = 2.0 * std::f64::consts::PI;
    let si = write(
        d.path(),
        "si.toml",
        &format!(
            "units = \"si\"\ng = {:?}\nflux = {:?}\ntemperature = {:?}\n",
            two_pi * 0.5 * 1e9,
            -1.0 * 1e-3 * 2.067833848e-15,
            120.0 * 1e-3
        ),
    );
    let a = d.path().join("a");
    let b = d.path().join("b");
    fs::create_dir_all(&a).unwrap();
    fs::create_dir_all(&b).unwrap();
    assert!(rabisim(&a, &["elements", "--config", &lab]).status.success());
    assert!(rabisim(&b, &["elements", "--config", &si]).status.success());
    assert_eq!(
        fs::read_to_string(a.join("elements.csv")).unwrap(),
        fs::read_to_string(b.join("elements.csv")).unwrap()
    );
}

#[test]
fn ratio_presets_match_quoted_values() {
    let d = TempDir::new().unwrap();
    let cfg = write(d.path(), "r.toml", "ratio_start = 0.1\nratio_points = 1\n");
    let o = rabisim(d.path(), &["ratio", "--preset", "fig4e", "--config", &cfg]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = read_csv(&d.path().join("ratio.csv"));
    let get = |axis: &str| num(rows.iter().find(|r| r["axis"] == axis).unwrap(), "ratio");
    assert!((get("resonator") - 234.0).abs() / 234.0 < 0.05);
    assert!((get("qubit") - 4.8).abs() / 4.8 < 0.05);

    let o = rabisim(d.path(), &["ratio", "--preset", "fig4e_resonant", "--config", &cfg]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = read_csv(&d.path().join("ratio.csv"));
    let q = num(rows.iter().find(|r| r["axis"] == "qubit").unwrap(), "ratio");
    assert!((q - 1.0).abs() < 0.15, "{q}");
}

#[test]
fn elements_lists_the_sign_changing_line() {
    let d = TempDir::new().unwrap();
    let o = rabisim(d.path(), &["elements"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = read_csv(&d.path().join("elements.csv"));
    let r = rows
        .iter()
        .find(|r| r["from_label"] == "(1,-)" && r["to_label"] == "(2,+)")
        .unwrap();
    assert_eq!(r["sign_changing"], "true");
    assert!((num(r, "frequency_GHz") - 12.39).abs() < 0.01);

    let cfg = write(d.path(), "jc.toml", "model = \"jc\"\n");
    let o = rabisim(d.path(), &["elements", "--config", &cfg]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn trace_preset_has_two_dips() {
    let d = TempDir::new().unwrap();
    let o = rabisim(d.path(), &["trace", "--preset", "fig2b"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = read_csv(&d.path().join("trace.csv"));
    assert_eq!(rows.len(), 71);
    assert!(rows.iter().all(|r| r["converged"] == "true"));
    let p: Vec<f64> = rows.iter().map(|r| num(r, "p_switch")).collect();
    let f: Vec<f64> = rows.iter().map(|r| num(r, "omega_d_GHz")).collect();
    let dips: Vec<usize> = (1..p.len() - 1)
        .filter(|&i| p[i] < p[i - 1] && p[i] <= p[i + 1] && p[i] < 49.5)
        .collect();
    assert_eq!(dips.len(), 2, "{:?}", dips.iter().map(|&i| f[i]).collect::<Vec<_>>());
    let (weak, strong) = (dips[0], dips[1]);
    assert!((f[weak] - 8.02).abs() < 0.05 && (f[strong] - 8.25).abs() < 0.05);
    assert!(50.0 - p[weak] < 50.0 - p[strong]);
}

#[test]
fn sidecar_round_trips() {
    let d = TempDir::new().unwrap();
    let cfg = write(d.path(), "t.toml", "freq_start = 8.2\nfreq_stop = 8.3\nfreq_points = 3\n");
    let a = d.path().join("a");
    let b = d.path().join("b");
    fs::create_dir_all(&a).unwrap();
    fs::create_dir_all(&b).unwrap();
    assert!(rabisim(&a, &["trace", "--config", &cfg]).status.success());
    let sidecar = a.join("trace.json");
    let meta: serde_json::Value = serde_json::from_str(&fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(meta["config"]["freq_points"], 3);
    assert!(meta["columns"]["p_switch"].is_string());
    assert!(rabisim(&b, &["trace", "--config", sidecar.to_str().unwrap()]).status.success());
    assert_eq!(
        fs::read_to_string(a.join("trace.csv")).unwrap(),
        fs::read_to_string(b.join("trace.csv")).unwrap()
    );
}

#[test]
fn steady_timeout_exits_3_with_diagnostics() {
    let d = TempDir::new().unwrap();
    let cfg = write(d.path(), "s.toml", "max_time = 0.01\nrel_tol = 1e-12\nomega_d = 8.24\n");
    let o = rabisim(d.path(), &["steady", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("final_residual"));
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(d.path().join("steady.json")).unwrap()).unwrap();
    assert_eq!(meta["timeout"]["points"], 1);
}

#[test]
fn evolve_presets_contrast() {
    let d = TempDir::new().unwrap();
    let swing = |preset: &str| -> (f64, f64) {
        let o = rabisim(d.path(), &["evolve", "--preset", preset]);
        assert!(o.status.success(), "{}", stderr(&o));
        let rows = read_csv(&d.path().join("evolve.csv"));
        let p: Vec<f64> = rows.iter().map(|r| num(r, "pop_1m")).collect();
        // Largest rise after a fall: zero for a monotone decay.
        let mut low = f64::INFINITY;
        let mut rise: f64 = 0.0;
        for &x in &p {
            low = low.min(x);
            rise = rise.max(x - low);
        }
        let drift = rows.iter().map(|r| (num(r, "trace") - 1.0).abs()).fold(0.0, f64::max);
        (rise, drift)
    };
    let (strong, d1) = swing("fig7a");
    let (weak, d2) = swing("fig7b");
    assert!(strong > 0.3, "{strong}");
    assert!(weak < 0.01, "{weak}");
    assert!(d1 < 1e-9 && d2 < 1e-9);
}

#[test]
fn calibrate_recovers_generating_point() {
    let d = TempDir::new().unwrap();
    let cfg = write(
        d.path(),
        "c.toml",
        "freq_start = 7.96\nfreq_stop = 8.36\nfreq_points = 9\nrel_tol = 1e-6\n\
         temperature = 90.0\ngamma_1 = 15.0\na_qb = 12.0\na_r = 12.0\n\
         cal_gamma_r = [1.0]\ncal_gamma_1 = [10.0, 15.0]\ncal_amplitude = [12.0]\n\
         cal_temperature = [90.0, 150.0]\ncal_scale = [-50.0, -100.0]\ncal_offset = [50.0]\n",
    );
    assert!(rabisim(d.path(), &["trace", "--config", &cfg]).status.success());
    let rows = read_csv(&d.path().join("trace.csv"));
    let mut measured = String::from("omega_d_GHz,p_switch\n");
    for r in &rows {
        measured += &format!("{},{}\n", r["omega_d_GHz"], r["p_switch"]);
    }
    let m = write(d.path(), "measured.csv", &measured);
    let o = rabisim(d.path(), &["calibrate", "--config", &cfg, "--measured", &m]);
    assert!(o.status.success(), "{}", stderr(&o));
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(d.path().join("calibrate.json")).unwrap()).unwrap();
    let best = &meta["summary"]["best"];
    assert!((best["gamma_1_MHz"].as_f64().unwrap() - 15.0).abs() < 1e-9);
    assert!((best["temperature_mK"].as_f64().unwrap() - 90.0).abs() < 1e-9);
    assert_eq!(best["scale"].as_f64().unwrap(), -100.0);
    assert_eq!(read_csv(&d.path().join("calibrate.csv")).len(), 4);
}

#[test]
fn small_sweep_covers_grid() {
    let d = TempDir::new().unwrap();
    let cfg = write(
        d.path(),
        "s.toml",
        "flux_start = -0.5\nflux_stop = 0.5\nflux_points = 2\nfreq_start = 8.2\nfreq_stop = 8.3\nfreq_points = 2\n",
    );
    let o = rabisim(d.path(), &["sweep", "--config", &cfg, "--threads", "2", "--n-fock", "4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = read_csv(&d.path().join("sweep.csv"));
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["flux_mPhi0"], "-0.5");
    let meta: serde_json::Value = serde_json::from_str(&fs::read_to_string(d.path().join("sweep.json")).unwrap()).unwrap();
    assert_eq!(meta["config"]["n_fock"], 4);
}
