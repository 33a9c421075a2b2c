// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use anyhow::{anyhow, bail, Context};
use serde_json::json;

use rabisim::constants::{to_ghz, to_milli_flux_quanta};
use rabisim::dynamics::{build_dissipators, evolve, thermal_state, EvolveOptions, Generator};
use rabisim::models::{eigensystem, label_dressed_with, DressedLabel, EigenSystem, SystemParams};
use rabisim::operators::{fock_space, DensityMatrix, HilbertSpace};
use rabisim::spectroscopy::{
    calibrate, excited_probability, observable_sigma_z, qubit_polarization, sweep, ObservableSet,
    SweepConfig, SweepRecord,
};
use rabisim::transitions::{transition_table, DriveAxis};

use crate::config::{Initial, Resolved};
use crate::output::{float, Artifact};

const SWEEP_HEADER: [&str; 13] = [
    "flux_mPhi0",
    "omega_d_GHz",
    "sigma_z",
    "excited_prob",
    "pop_g",
    "pop_1m",
    "pop_1p",
    "pop_2m",
    "pop_2p",
    "p_switch",
    "converged",
    "windows",
    "residual",
];

const SWEEP_COLUMNS: [(&str, &str); 13] = [
    ("flux_mPhi0", "flux offset from half a flux quantum, mPhi0"),
    ("omega_d_GHz", "drive frequency omega_d/2pi, GHz"),
    ("sigma_z", "Tr(rho sigma_z) in the persistent-current basis"),
    ("excited_prob", "1 - P_g^2 with P_g the ground-state population"),
    ("pop_g", "population of (0,g)"),
    ("pop_1m", "population of (1,-)"),
    ("pop_1p", "population of (1,+)"),
    ("pop_2m", "population of (2,-)"),
    ("pop_2p", "population of (2,+)"),
    ("p_switch", "offset + scale * (readout - thermal readout), percent"),
    ("converged", "steady-state convergence flag"),
    ("windows", "averaging windows used"),
    ("residual", "trace distance between the last two window averages"),
];

fn labelled(res: &Resolved, params: &SystemParams, space: &HilbertSpace) -> anyhow::Result<(EigenSystem, Option<String>)> {
    let es = eigensystem(&res.model.build(params, space)?)?;
    Ok(match label_dressed_with(&es, params, space, res.guard) {
        Ok(l) => (l, None),
        Err(e) => (es, Some(e.to_string())),
    })
}

pub fn levels(res: &Resolved) -> anyhow::Result<Artifact> {
    let mut a = Artifact::new(
        vec!["flux_mPhi0", "index", "label", "parity", "energy_GHz", "transition_GHz"],
        vec![
            ("flux_mPhi0", "flux offset, mPhi0"),
            ("index", "eigenvalue index, ascending"),
            ("label", "dressed-state label; empty if unassigned"),
            ("parity", "parity eigenvalue at the symmetry point; empty elsewhere"),
            ("energy_GHz", "eigenvalue E/2pi, GHz"),
            ("transition_GHz", "(E - E_0)/2pi, GHz"),
        ],
    );
    let space = fock_space(res.n_fock)?;
    for &flux in &res.flux_axis {
        let p = res.params.with_flux_offset(flux);
        let (es, warn) = labelled(res, &p, &space)?;
        if let Some(w) = warn {
            a.warnings.push(format!("flux {} mPhi0: {w}", to_milli_flux_quanta(flux)));
        }
        let e0 = es.energies()[0];
        for i in 0..es.len().min(res.max_level) {
            a.rows.push(vec![
                float(to_milli_flux_quanta(flux)),
                i.to_string(),
                es.label(i).map(|l| l.to_string()).unwrap_or_default(),
                es.parity(i).map(|p| p.to_string()).unwrap_or_default(),
                float(to_ghz(es.energies()[i])),
                float(to_ghz(es.energies()[i] - e0)),
            ]);
        }
    }
    Ok(a)
}

pub fn elements(res: &Resolved) -> anyhow::Result<Artifact> {
    let mut a = Artifact::new(
        vec![
            "from",
            "to",
            "from_label",
            "to_label",
            "frequency_GHz",
            "resonator",
            "sigma_x",
            "sigma_z",
            "parity_allowed",
            "sign_changing",
        ],
        vec![
            ("from", "lower eigenvalue index"),
            ("to", "upper eigenvalue index"),
            ("from_label", "dressed-state label of `from`"),
            ("to_label", "dressed-state label of `to`"),
            ("frequency_GHz", "transition frequency, GHz"),
            ("resonator", "|<to|a + a^dagger|from>|"),
            ("sigma_x", "|<to|sigma_x|from>|"),
            ("sigma_z", "|<to|sigma_z|from>|"),
            ("parity_allowed", "parities differ; empty off the symmetry point"),
            ("sign_changing", "both labels are doublets with different signs"),
        ],
    );
    let space = fock_space(res.n_fock)?;
    let p = res.params.with_flux_offset(res.flux);
    let (es, warn) = labelled(res, &p, &space)?;
    a.warnings.extend(warn);
    let table = transition_table(&es, &space, res.max_level)?;
    let opt = |x: Option<String>| x.unwrap_or_default();
    for r in &table.rows {
        let sign_changing = match (r.from_label, r.to_label) {
            (Some(DressedLabel::Doublet { sign: a, .. }), Some(DressedLabel::Doublet { sign: b, .. })) => Some(a != b),
            (Some(_), Some(_)) => Some(false),
            _ => None,
        };
        a.rows.push(vec![
            r.from.to_string(),
            r.to.to_string(),
            opt(r.from_label.map(|l| l.to_string())),
            opt(r.to_label.map(|l| l.to_string())),
            float(to_ghz(r.frequency)),
            float(r.resonator),
            float(r.sigma_x),
            float(r.sigma_z),
            opt(r.parity_allowed.map(|b| b.to_string())),
            opt(sign_changing.map(|b| b.to_string())),
        ]);
    }
    Ok(a)
}

pub fn ratio(res: &Resolved) -> anyhow::Result<Artifact> {
    let mut a = Artifact::new(
        vec![
            "g_over_wr",
            "axis",
            "plus_plus",
            "plus_minus",
            "minus_plus",
            "minus_minus",
            "ratio",
            "error",
        ],
        vec![
            ("g_over_wr", "coupling g/omega_r"),
            ("axis", "drive operator: resonator (a + a^dagger) or qubit (sigma_x)"),
            ("plus_plus", "|<2,+|O|1,+>|"),
            ("plus_minus", "|<2,-|O|1,+>|"),
            ("minus_plus", "|<2,+|O|1,->|"),
            ("minus_minus", "|<2,-|O|1,->|"),
            ("ratio", "minus_minus / minus_plus"),
            ("error", "failure message for this row, if any"),
        ],
    );
    let model = &res.element_model;
    for &x in &res.ratio_axis {
        let p = res.params.with_g(x * res.params.omega_r).with_flux_offset(res.flux);
        for (axis, name) in [(DriveAxis::Resonator, "resonator"), (DriveAxis::Qubit, "qubit")] {
            let mut row = vec![float(x), name.to_string()];
            match model.doublet_elements(&p, 1, axis, &res.element_options) {
                Ok(el) => {
                    row.extend(
                        [el.plus_plus, el.plus_minus, el.minus_plus, el.minus_minus, el.selection_ratio()].map(float),
                    );
                    row.push(String::new());
                }
                Err(e) => {
                    row.extend(std::iter::repeat_n("NaN".to_string(), 5));
                    row.push(e.to_string());
                }
            }
            a.rows.push(row);
        }
    }
    a.summary = json!({ "element_model": model.name() });
    Ok(a)
}

fn sweep_config(res: &Resolved, fluxes: Vec<f64>, freqs: Vec<f64>) -> SweepConfig {
    SweepConfig {
        params: res.params,
        flux_offsets: fluxes,
        drive_freqs: freqs,
        n_fock: res.n_fock,
        bath: res.bath.clone(),
        drive: res.drive,
        criteria: res.criteria,
        model: res.model.clone(),
        readout: res.readout.clone(),
        transduction: res.transduction,
        guard: res.guard,
    }
}

fn sweep_artifact(records: &[SweepRecord]) -> Artifact {
    let mut a = Artifact::new(SWEEP_HEADER.to_vec(), SWEEP_COLUMNS.to_vec());
    let mut failures = Vec::new();
    for r in records {
        let (converged, windows, residual) = match &r.diagnostics {
            Some(d) => (d.converged, d.windows.to_string(), float(d.final_residual)),
            None => (false, String::new(), String::new()),
        };
        a.rows.push(vec![
            float(to_milli_flux_quanta(r.flux_offset)),
            float(to_ghz(r.omega_d)),
            float(r.sigma_z),
            float(r.excited_prob),
            float(r.pop_g),
            float(r.pop_1m),
            float(r.pop_1p),
            float(r.pop_2m),
            float(r.pop_2p),
            float(r.p_switch),
            (converged && r.error.is_none()).to_string(),
            windows,
            residual,
        ]);
        if let Some(e) = &r.error {
            failures.push(json!({
                "flux_mPhi0": to_milli_flux_quanta(r.flux_offset),
                "omega_d_GHz": to_ghz(r.omega_d),
                "error": e,
                "diagnostics": r.diagnostics,
            }));
        }
    }
    let timed_out: Vec<_> = records
        .iter()
        .filter(|r| r.diagnostics.as_ref().is_some_and(|d| !d.converged))
        .collect();
    if !timed_out.is_empty() {
        a.timeout = Some(json!({
            "points": timed_out.len(),
            "diagnostics": timed_out.iter().map(|r| json!({
                "flux_mPhi0": to_milli_flux_quanta(r.flux_offset),
                "omega_d_GHz": to_ghz(r.omega_d),
                "diagnostics": r.diagnostics,
            })).collect::<Vec<_>>(),
        }));
    }
    let min_eig = records
        .iter()
        .filter_map(|r| r.diagnostics.as_ref().map(|d| d.min_eigenvalue))
        .fold(f64::INFINITY, f64::min);
    a.summary = json!({
        "points": records.len(),
        "failed": failures.len(),
        "min_eigenvalue": if min_eig.is_finite() { Some(min_eig) } else { None },
        "failures": failures,
    });
    a
}

fn drive_warning(res: &Resolved) -> Option<String> {
    res.drive.perturbative_warning(res.params.g)
}

pub fn trace(res: &Resolved) -> anyhow::Result<Artifact> {
    let result = sweep(&sweep_config(res, vec![res.flux], res.freq_axis.clone()))?;
    let mut a = sweep_artifact(&result.records);
    a.warnings.extend(drive_warning(res));
    Ok(a)
}

pub fn sweep_map(res: &Resolved) -> anyhow::Result<Artifact> {
    let result = sweep(&sweep_config(res, res.flux_axis.clone(), res.freq_axis.clone()))?;
    let mut a = sweep_artifact(&result.records);
    a.warnings.extend(drive_warning(res));
    Ok(a)
}

pub fn steady(res: &Resolved) -> anyhow::Result<Artifact> {
    let result = sweep(&sweep_config(res, vec![res.flux], vec![res.drive.omega_d]))?;
    let mut a = sweep_artifact(&result.records);
    a.warnings.extend(drive_warning(res));
    Ok(a)
}

pub fn evolve_trajectory(res: &Resolved) -> anyhow::Result<Artifact> {
    let mut a = Artifact::new(
        vec![
            "time_ns",
            "pop_g",
            "pop_1m",
            "pop_1p",
            "pop_2m",
            "pop_2p",
            "sigma_z",
            "polarization",
            "excited_prob",
            "trace",
        ],
        vec![
            ("time_ns", "time, ns"),
            ("pop_g", "population of (0,g)"),
            ("pop_1m", "population of (1,-)"),
            ("pop_1p", "population of (1,+)"),
            ("pop_2m", "population of (2,-)"),
            ("pop_2p", "population of (2,+)"),
            ("sigma_z", "Tr(rho sigma_z) in the persistent-current basis"),
            ("polarization", "Tr(rho sigma_z) in the qubit energy basis"),
            ("excited_prob", "1 - P_g^2"),
            ("trace", "Re Tr(rho)"),
        ],
    );
    let space = fock_space(res.n_fock)?;
    let p = res.params.with_flux_offset(res.flux);
    let (es, warn) = labelled(res, &p, &space)?;
    a.warnings.extend(warn);
    let obs = ObservableSet::new(&es, &p, &space);
    let diss = build_dissipators(&es, &space, &res.bath)?;
    let rho0 = match res.initial {
        Initial::Thermal => thermal_state(&es, res.bath.temperature)?,
        Initial::Level(label) => {
            let i = es
                .index_of(label)
                .with_context(|| format!("initial state {label} not found"))?;
            let mut pops = vec![0.0; es.len()];
            pops[i] = 1.0;
            DensityMatrix::from_populations(&pops)?
        }
    };
    let dt = match res.dt {
        Some(dt) => dt,
        None => Generator::new(&diss, &res.drive).max_step(),
    };
    let traj = evolve(
        &rho0,
        &res.drive,
        &diss,
        &EvolveOptions {
            t_end: res.t_end,
            dt,
            sample_interval: Some(res.sample_interval),
        },
    )?;
    for (t, rho) in traj.times.iter().zip(&traj.states) {
        let pops = obs.tracked_populations(rho);
        let mut row = vec![float(t * 1e9)];
        row.extend(pops.map(float));
        row.extend(
            [
                observable_sigma_z(rho, &obs),
                qubit_polarization(rho, &obs),
                excited_probability(rho),
                rho.trace().re,
            ]
            .map(float),
        );
        a.rows.push(row);
    }
    a.warnings.extend(drive_warning(res));
    a.summary = json!({ "dt_s": dt, "samples": traj.times.len() });
    Ok(a)
}

/// Reads `(drive frequency, P_sw)` pairs from the first two columns of a
/// CSV with a header row. Frequencies are in the config's units.
fn read_measured(path: &Path, to_si: impl Fn(f64) -> f64) -> anyhow::Result<Vec<(f64, f64)>> {
    let mut r = csv::Reader::from_path(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut out = Vec::new();
    for (k, rec) in r.records().enumerate() {
        let rec = rec?;
        let field = |i: usize| -> anyhow::Result<f64> {
            rec.get(i)
                .ok_or_else(|| anyhow!("{}: row {} has fewer than two columns", path.display(), k + 2))?
                .trim()
                .parse()
                .with_context(|| format!("{}: row {} is not numeric", path.display(), k + 2))
        };
        out.push((to_si(field(0)?), field(1)?));
    }
    if out.is_empty() {
        bail!("{}: no data rows", path.display());
    }
    Ok(out)
}

pub fn calibrate_trace(res: &Resolved, measured: &Path, freq_to_si: impl Fn(f64) -> f64) -> anyhow::Result<Artifact> {
    let data = read_measured(measured, freq_to_si)?;
    let config = sweep_config(res, vec![res.flux], res.freq_axis.clone());
    let result = calibrate(&config, &data, &res.calibration)?;
    let mut a = Artifact::new(
        vec!["gamma_r_MHz", "gamma_1_MHz", "amplitude_MHz", "temperature_mK", "scale", "offset", "residual"],
        vec![
            ("gamma_r_MHz", "resonator rate Gamma_r/2pi, MHz"),
            ("gamma_1_MHz", "qubit relaxation rate Gamma_1/2pi, MHz"),
            ("amplitude_MHz", "drive amplitude A/2pi on qubit and resonator, MHz"),
            ("temperature_mK", "bath temperature, mK"),
            ("scale", "best transduction scale for this row, percent"),
            ("offset", "best transduction offset for this row, percent"),
            ("residual", "RMS deviation from the measured trace, percent"),
        ],
    );
    let mhz = |w: f64| w / (2.0 * std::f64::consts::PI * 1e6);
    for (p, r) in &result.landscape {
        a.rows.push(
            [mhz(p.gamma_r), mhz(p.gamma_1), mhz(p.amplitude), p.temperature * 1e3, p.scale, p.offset, *r]
                .map(float)
                .to_vec(),
        );
    }
    let b = result.best;
    a.summary = json!({
        "best": {
            "gamma_r_MHz": mhz(b.gamma_r),
            "gamma_1_MHz": mhz(b.gamma_1),
            "amplitude_MHz": mhz(b.amplitude),
            "temperature_mK": b.temperature * 1e3,
            "scale": b.scale,
            "offset": b.offset,
        },
        "residual": result.residual,
    });
    Ok(a)
}
