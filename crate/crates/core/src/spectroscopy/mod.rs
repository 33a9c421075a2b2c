// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Driven steady-state spectroscopy: flux/frequency sweeps, switching
//! probability and parameter calibration against a measured trace.

mod calibrate;
mod observables;

pub use calibrate::{
    calibrate, fit_traces, resample, simulate_traces, CalibrationGrid, CalibrationPoint,
    CalibrationResult, SimulatedTrace,
};
pub use observables::{
    eigenbasis_expectation, excited_probability, observable_sigma_z, qubit_polarization,
    readout_registry, ExcitedProbability, ObservableSet, Polarization, Readout, SigmaZ,
    TRACKED_LABELS,
};

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::{
    build_dissipators, thermal_state, Bath, DriveSpec, SteadyCriteria, SteadyDiagnostics,
    SteadySolver,
};
use crate::models::{eigensystem, label_dressed_with, Guard, HamiltonianModel, SystemParams};
use crate::operators::{fock_space, DensityMatrix};
use crate::{Error, Result};

/// Affine map from a readout difference to switching probability, percent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransductionMap {
    pub scale: f64,
    pub offset: f64,
}

impl Default for TransductionMap {
    fn default() -> Self {
        Self {
            scale: -100.0,
            offset: 50.0,
        }
    }
}

impl TransductionMap {
    pub fn apply(&self, delta: f64) -> f64 {
        self.offset + self.scale * delta
    }
}

/// `offset + scale·(driven − reference)`.
pub fn transduce(driven: f64, reference: f64, map: &TransductionMap) -> f64 {
    map.apply(driven - reference)
}

/// Everything needed to run a flux × drive-frequency grid.
#[derive(Clone)]
pub struct SweepConfig {
    /// Template; `flux_offset` is replaced by each grid value.
    pub params: SystemParams,
    pub flux_offsets: Vec<f64>,
    pub drive_freqs: Vec<f64>,
    pub n_fock: usize,
    pub bath: Bath,
    /// Drive amplitudes; `omega_d` is replaced by each grid value.
    pub drive: DriveSpec,
    pub criteria: SteadyCriteria,
    pub model: Arc<dyn HamiltonianModel>,
    pub readout: Arc<dyn Readout>,
    pub transduction: TransductionMap,
    /// Applies to dressed-state labelling only.
    pub guard: Guard,
}

impl fmt::Debug for SweepConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SweepConfig")
            .field("params", &self.params)
            .field("flux_offsets", &self.flux_offsets.len())
            .field("drive_freqs", &self.drive_freqs.len())
            .field("n_fock", &self.n_fock)
            .field("bath", &self.bath)
            .field("drive", &self.drive)
            .field("criteria", &self.criteria)
            .field("model", &self.model.name())
            .field("readout", &self.readout.name())
            .field("transduction", &self.transduction)
            .field("guard", &self.guard)
            .finish()
    }
}

fn check_axis(name: &str, axis: &[f64]) -> Result<()> {
    if axis.is_empty() {
        return Err(Error::Config(format!("{name} is empty")));
    }
    if axis.iter().any(|x| !x.is_finite()) {
        return Err(Error::Config(format!("{name} has non-finite entries")));
    }
    let up = axis.windows(2).all(|w| w[1] > w[0]);
    let down = axis.windows(2).all(|w| w[1] < w[0]);
    if !(up || down) {
        return Err(Error::Config(format!("{name} must be strictly monotone")));
    }
    Ok(())
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.bath.validate()?;
        self.drive.validate()?;
        check_axis("flux_offsets", &self.flux_offsets)?;
        check_axis("drive_freqs", &self.drive_freqs)?;
        if self.drive_freqs.iter().any(|&w| w <= 0.0) {
            return Err(Error::Config("drive frequencies must be positive".into()));
        }
        fock_space(self.n_fock)?;
        Ok(())
    }
}

/// One grid point. Populations follow [`TRACKED_LABELS`]; a label that
/// could not be assigned reads NaN. A failed point carries `error` and NaN
/// observables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub flux_offset: f64,
    pub omega_d: f64,
    pub sigma_z: f64,
    pub excited_prob: f64,
    pub pop_g: f64,
    pub pop_1m: f64,
    pub pop_1p: f64,
    pub pop_2m: f64,
    pub pop_2p: f64,
    pub readout: f64,
    pub p_switch: f64,
    pub diagnostics: Option<SteadyDiagnostics>,
    pub error: Option<String>,
}

impl SweepRecord {
    fn failed(flux_offset: f64, omega_d: f64, err: &Error) -> Self {
        let diagnostics = match err {
            Error::NotConverged(d) => Some((**d).clone()),
            _ => None,
        };
        Self {
            flux_offset,
            omega_d,
            sigma_z: f64::NAN,
            excited_prob: f64::NAN,
            pop_g: f64::NAN,
            pop_1m: f64::NAN,
            pop_1p: f64::NAN,
            pop_2m: f64::NAN,
            pop_2p: f64::NAN,
            readout: f64::NAN,
            p_switch: f64::NAN,
            diagnostics,
            error: Some(err.to_string()),
        }
    }

    pub fn converged(&self) -> bool {
        self.error.is_none() && self.diagnostics.as_ref().is_some_and(|d| d.converged)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    /// Flux-major: all drive frequencies of the first flux come first.
    pub records: Vec<SweepRecord>,
    pub wall_time: f64,
}

/// Per-flux quantities shared by every drive frequency.
struct FluxPoint {
    obs: ObservableSet,
    solver: SteadySolver,
    thermal: DensityMatrix,
    thermal_readout: f64,
    label_error: Option<String>,
}

fn prepare(config: &SweepConfig, flux: f64) -> Result<FluxPoint> {
    let params = config.params.with_flux_offset(flux);
    let space = fock_space(config.n_fock)?;
    let es = eigensystem(&config.model.build(&params, &space)?)?;
    let (es, label_error) = match label_dressed_with(&es, &params, &space, config.guard) {
        Ok(labelled) => (labelled, None),
        Err(e) => (es, Some(format!("labelling failed: {e}"))),
    };
    let obs = ObservableSet::new(&es, &params, &space);
    let diss = build_dissipators(&es, &space, &config.bath)?;
    let solver = SteadySolver::new(&diss, &config.drive)?;
    let thermal = thermal_state(&es, config.bath.temperature)?;
    let thermal_readout = config.readout.evaluate(&thermal, &obs);
    Ok(FluxPoint {
        obs,
        solver,
        thermal,
        thermal_readout,
        label_error,
    })
}

fn solve_point(config: &SweepConfig, fp: &FluxPoint, flux: f64, omega_d: f64) -> SweepRecord {
    let (rho, diag) = match fp.solver.solve(omega_d, &fp.thermal, &config.criteria) {
        Ok(r) => r,
        Err(e) => return SweepRecord::failed(flux, omega_d, &e),
    };
    let pops = fp.obs.tracked_populations(&rho);
    let readout = config.readout.evaluate(&rho, &fp.obs);
    SweepRecord {
        flux_offset: flux,
        omega_d,
        sigma_z: observable_sigma_z(&rho, &fp.obs),
        excited_prob: excited_probability(&rho),
        pop_g: pops[0],
        pop_1m: pops[1],
        pop_1p: pops[2],
        pop_2m: pops[3],
        pop_2p: pops[4],
        readout,
        p_switch: transduce(readout, fp.thermal_readout, &config.transduction),
        diagnostics: Some(diag),
        error: fp.label_error.clone(),
    }
}

/// Steady state at every (flux, drive frequency) pair, each started from the
/// thermal state. Points run in parallel on the current rayon pool; failures
/// are recorded per point rather than aborting the sweep.
pub fn sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let start = Instant::now();
    let prepared: Vec<(f64, Result<FluxPoint>)> = config
        .flux_offsets
        .par_iter()
        .map(|&flux| (flux, prepare(config, flux)))
        .collect();
    let tasks: Vec<(&(f64, Result<FluxPoint>), f64)> = prepared
        .iter()
        .flat_map(|p| config.drive_freqs.iter().map(move |&w| (p, w)))
        .collect();
    let records = tasks
        .par_iter()
        .map(|&(&(flux, ref fp), omega_d)| match fp {
            Ok(fp) => solve_point(config, fp, flux, omega_d),
            Err(e) => SweepRecord::failed(flux, omega_d, e),
        })
        .collect();
    Ok(SweepResult {
        records,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

/// Single-flux sweep over drive frequency.
pub fn line_trace(config: &SweepConfig) -> Result<Vec<SweepRecord>> {
    if config.flux_offsets.len() != 1 {
        return Err(Error::Config(format!(
            "line trace needs exactly one flux offset, got {}",
            config.flux_offsets.len()
        )));
    }
    Ok(sweep(config)?.records)
}
