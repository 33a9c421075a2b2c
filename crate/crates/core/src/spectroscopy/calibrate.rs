// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Grid-search calibration of bath and drive parameters against a measured
//! switching-probability trace at one flux point.
//!
//! Simulation and fitting are separate: the expensive steady states depend
//! only on `(Γ_r, Γ_1, A, T)`, while scale and offset enter linearly and are
//! scanned against the cached responses.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{line_trace, SweepConfig, TransductionMap};
use crate::dynamics::{Bath, ChannelKind, DriveSpec};
use crate::{Error, Result};

/// Candidate values for each calibrated parameter. SI units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CalibrationGrid {
    pub gamma_r: Vec<f64>,
    pub gamma_1: Vec<f64>,
    /// Drive amplitude, applied to both the qubit and resonator terms.
    pub amplitude: Vec<f64>,
    pub temperature: Vec<f64>,
    pub scale: Vec<f64>,
    pub offset: Vec<f64>,
}

impl CalibrationGrid {
    fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("gamma_r", &self.gamma_r),
            ("gamma_1", &self.gamma_1),
            ("amplitude", &self.amplitude),
            ("temperature", &self.temperature),
            ("scale", &self.scale),
            ("offset", &self.offset),
        ] {
            if v.is_empty() {
                return Err(Error::Config(format!("calibration grid {name} is empty")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationPoint {
    pub gamma_r: f64,
    pub gamma_1: f64,
    pub amplitude: f64,
    pub temperature: f64,
    pub scale: f64,
    pub offset: f64,
}

/// Readout difference from thermal equilibrium along the drive axis, for
/// one set of physical parameters. NaN marks a point that failed to solve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulatedTrace {
    pub gamma_r: f64,
    pub gamma_1: f64,
    pub amplitude: f64,
    pub temperature: f64,
    pub response: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CalibrationResult {
    pub best: CalibrationPoint,
    /// Root-mean-square deviation at `best`, in switching-probability units.
    pub residual: f64,
    /// Best residual over scale/offset for each physical parameter set.
    pub landscape: Vec<(CalibrationPoint, f64)>,
}

/// Linear interpolation of `(x, y)` samples onto `axis`. Samples may be in
/// any order; axis points outside the sampled range are an error.
pub fn resample(measured: &[(f64, f64)], axis: &[f64]) -> Result<Vec<f64>> {
    if measured.len() < 2 {
        return Err(Error::Config("measured trace needs at least two points".into()));
    }
    let mut pts = measured.to_vec();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    if pts.windows(2).any(|w| w[1].0 <= w[0].0) {
        return Err(Error::Config("measured trace has repeated abscissae".into()));
    }
    let (lo, hi) = (pts[0].0, pts[pts.len() - 1].0);
    axis.iter()
        .map(|&x| {
            if x < lo || x > hi {
                return Err(Error::Config(format!(
                    "axis point {x:e} outside measured range [{lo:e}, {hi:e}]"
                )));
            }
            let k = pts.partition_point(|p| p.0 <= x).clamp(1, pts.len() - 1);
            let (x0, y0) = pts[k - 1];
            let (x1, y1) = pts[k];
            Ok(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
        })
        .collect()
}

fn with_physical(base: &SweepConfig, gamma_r: f64, gamma_1: f64, amplitude: f64, temperature: f64) -> SweepConfig {
    let gamma_z = base
        .bath
        .channels
        .iter()
        .find(|c| c.kind == ChannelKind::QubitZ)
        .map_or(0.0, |c| c.rate);
    let mut config = base.clone();
    config.bath = Bath::new(temperature, gamma_r, gamma_1, gamma_z).with_spectral(base.bath.spectral.clone());
    config.drive = DriveSpec {
        a_qb: amplitude,
        a_r: amplitude,
        ..base.drive
    };
    config.transduction = TransductionMap {
        scale: 1.0,
        offset: 0.0,
    };
    config
}

/// Steady-state responses for every physical parameter combination. The
/// base config must have exactly one flux offset.
pub fn simulate_traces(base: &SweepConfig, grid: &CalibrationGrid) -> Result<Vec<SimulatedTrace>> {
    grid.validate()?;
    base.validate()?;
    let mut combos = Vec::new();
    for &gr in &grid.gamma_r {
        for &g1 in &grid.gamma_1 {
            for &a in &grid.amplitude {
                for &t in &grid.temperature {
                    combos.push((gr, g1, a, t));
                }
            }
        }
    }
    combos
        .par_iter()
        .map(|&(gamma_r, gamma_1, amplitude, temperature)| {
            let config = with_physical(base, gamma_r, gamma_1, amplitude, temperature);
            let response = line_trace(&config)?.into_iter().map(|r| r.p_switch).collect();
            Ok(SimulatedTrace {
                gamma_r,
                gamma_1,
                amplitude,
                temperature,
                response,
            })
        })
        .collect()
}

fn rms(trace: &SimulatedTrace, measured: &[f64], scale: f64, offset: f64) -> f64 {
    let sum: f64 = trace
        .response
        .iter()
        .zip(measured)
        .map(|(r, m)| {
            let d = offset + scale * r - m;
            d * d
        })
        .sum();
    let v = (sum / measured.len() as f64).sqrt();
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

/// Exhaustive scale/offset scan against precomputed traces. `measured` must
/// already be sampled on the traces' drive axis.
pub fn fit_traces(traces: &[SimulatedTrace], measured: &[f64], grid: &CalibrationGrid) -> Result<CalibrationResult> {
    grid.validate()?;
    if traces.is_empty() {
        return Err(Error::Config("no simulated traces to fit".into()));
    }
    let mut landscape = Vec::with_capacity(traces.len());
    for t in traces {
        if t.response.len() != measured.len() {
            return Err(Error::DimensionMismatch {
                expected: t.response.len(),
                found: measured.len(),
            });
        }
        let mut best = (f64::INFINITY, grid.scale[0], grid.offset[0]);
        for &s in &grid.scale {
            for &o in &grid.offset {
                let r = rms(t, measured, s, o);
                if r < best.0 {
                    best = (r, s, o);
                }
            }
        }
        let point = CalibrationPoint {
            gamma_r: t.gamma_r,
            gamma_1: t.gamma_1,
            amplitude: t.amplitude,
            temperature: t.temperature,
            scale: best.1,
            offset: best.2,
        };
        landscape.push((point, best.0));
    }
    let (best, residual) = landscape
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("non-empty");
    if !residual.is_finite() {
        return Err(Error::Config("every calibration candidate failed to solve".into()));
    }
    Ok(CalibrationResult {
        best,
        residual,
        landscape,
    })
}

/// Simulate and fit in one call. `measured` holds `(ω_d, P_sw)` pairs and is
/// interpolated onto the config's drive axis.
pub fn calibrate(base: &SweepConfig, measured: &[(f64, f64)], grid: &CalibrationGrid) -> Result<CalibrationResult> {
    let on_axis = resample(measured, &base.drive_freqs)?;
    let traces = simulate_traces(base, grid)?;
    fit_traces(&traces, &on_axis, grid)
}
