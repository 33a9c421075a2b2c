// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::{Dissipators, DriveSpec, Generator, HermitianCoords};
use crate::operators::{trace_norm_half, DensityMatrix};
use crate::{Error, Result};

/// Consecutive converged windows required before declaring steady state.
const STREAK: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SteadyCriteria {
    /// Drive periods per averaging window.
    pub window_periods: usize,
    /// Trace-distance threshold between consecutive window averages.
    pub rel_tol: f64,
    /// Simulated-time budget, s.
    pub max_time: f64,
}

impl Default for SteadyCriteria {
    fn default() -> Self {
        Self {
            window_periods: 50,
            rel_tol: 1e-4,
            max_time: 20e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SteadyDiagnostics {
    pub windows: usize,
    /// Trace distance between the last two window averages.
    pub final_residual: f64,
    /// Most negative eigenvalue of the returned state.
    pub min_eigenvalue: f64,
    pub converged: bool,
    pub simulated_time: f64,
    pub steps_per_period: usize,
}

/// Periodic steady-state solver for one bath and one set of drive
/// amplitudes; the drive frequency is chosen per call.
///
/// The master equation is linear in `ρ`, so it is written on real Hermitian
/// coordinates as `ẋ = (L₀ + cos(ω_d t) L_d) x`. One drive period of RK4
/// steps is accumulated into a propagator `P` and a period-average operator;
/// windows of `m` periods are then advanced with `P^m`. This is the same
/// arithmetic as stepping the state itself with the same fixed step.
pub struct SteadySolver {
    coords: HermitianCoords,
    l0: DMatrix<f64>,
    ld: DMatrix<f64>,
    span: f64,
}

impl SteadySolver {
    pub fn new(diss: &Dissipators, drive: &DriveSpec) -> Result<Self> {
        drive.validate()?;
        let generator = Generator::new(diss, drive);
        let coords = HermitianCoords::new(diss.dim());
        let n = coords.len();
        let mut l0 = DMatrix::zeros(n, n);
        let mut ld = DMatrix::zeros(n, n);
        let mut col = vec![0.0; n];
        for k in 0..n {
            let b = coords.basis(k);
            coords.to_coords(&generator.rhs_scaled(&b, 0.0), &mut col);
            l0.set_column(k, &DVector::from_column_slice(&col));
            coords.to_coords(&generator.drive_rhs(&b), &mut col);
            ld.set_column(k, &DVector::from_column_slice(&col));
        }
        Ok(Self {
            coords,
            l0,
            ld,
            span: diss.spectral_span(),
        })
    }

    pub fn solve(
        &self,
        omega_d: f64,
        rho0: &DensityMatrix,
        criteria: &SteadyCriteria,
    ) -> Result<(DensityMatrix, SteadyDiagnostics)> {
        if !(omega_d > 0.0) || !omega_d.is_finite() {
            return Err(Error::Domain(format!("steady state needs omega_d > 0, got {omega_d}")));
        }
        if criteria.window_periods == 0 || !(criteria.rel_tol > 0.0) {
            return Err(Error::Config("window_periods and rel_tol must be positive".into()));
        }
        let n = self.coords.len();
        if rho0.dim() * rho0.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rho0.dim() * rho0.dim(),
            });
        }

        let period = 2.0 * PI / omega_d;
        let max_step = 2.0 * PI / self.span.max(omega_d) / 20.0;
        let steps = (period / max_step).ceil() as usize;
        let (propagator, average) = self.period_maps(omega_d, period, steps);

        let m = criteria.window_periods;
        let mut power = DMatrix::<f64>::identity(n, n);
        let mut power_sum = DMatrix::<f64>::identity(n, n);
        for _ in 1..m {
            power = &power * &propagator;
            power_sum += &power;
        }
        let window = &power * &propagator;
        let window_avg = &average * power_sum / m as f64;

        let window_time = m as f64 * period;
        let max_windows = (criteria.max_time / window_time).floor() as usize;

        let mut x = vec![0.0; n];
        self.coords.to_coords(rho0.matrix(), &mut x);
        let mut x = DVector::from_vec(x);
        let mut prev: Option<DVector<f64>> = None;
        let mut streak = 0;
        let mut residual = f64::INFINITY;
        let mut windows = 0;
        let mut avg = x.clone();
        while windows < max_windows {
            avg = &window_avg * &x;
            x = &window * &x;
            windows += 1;
            if let Some(p) = &prev {
                let diff = self.coords.from_coords((&avg - p).as_slice());
                residual = trace_norm_half(&diff);
                streak = if residual < criteria.rel_tol { streak + 1 } else { 0 };
                if streak >= STREAK {
                    break;
                }
            }
            prev = Some(avg.clone());
        }

        let state = DensityMatrix::from_matrix_unchecked(self.coords.from_coords(avg.as_slice()));
        let diagnostics = SteadyDiagnostics {
            windows,
            final_residual: residual,
            min_eigenvalue: state.min_eigenvalue(),
            converged: streak >= STREAK,
            simulated_time: windows as f64 * window_time,
            steps_per_period: steps,
        };
        if diagnostics.converged {
            Ok((state, diagnostics))
        } else {
            Err(Error::NotConverged(Box::new(diagnostics)))
        }
    }

    /// One-period propagator and the average of the state over the `steps`
    /// sample times `0, h, …, (steps−1)h`, both as maps of the initial state.
    fn period_maps(&self, omega_d: f64, period: f64, steps: usize) -> (DMatrix<f64>, DMatrix<f64>) {
        let n = self.coords.len();
        let h = period / steps as f64;
        let at = |t: f64| &self.l0 + &self.ld * (omega_d * t).cos();
        let mut phi = DMatrix::<f64>::identity(n, n);
        let mut sum = DMatrix::<f64>::zeros(n, n);
        let mut k = DMatrix::<f64>::zeros(n, n);
        let mut acc = DMatrix::<f64>::zeros(n, n);
        let mut tmp = DMatrix::<f64>::zeros(n, n);
        let mut l_start = at(0.0);
        for s in 0..steps {
            sum += &phi;
            let t = s as f64 * h;
            let l_mid = at(t + 0.5 * h);
            let l_end = at(t + h);
            // k1
            k.gemm(1.0, &l_start, &phi, 0.0);
            acc.copy_from(&k);
            // k2
            tmp.copy_from(&phi);
            axpy(&mut tmp, 0.5 * h, &k);
            k.gemm(1.0, &l_mid, &tmp, 0.0);
            axpy(&mut acc, 2.0, &k);
            // k3
            tmp.copy_from(&phi);
            axpy(&mut tmp, 0.5 * h, &k);
            k.gemm(1.0, &l_mid, &tmp, 0.0);
            axpy(&mut acc, 2.0, &k);
            // k4
            tmp.copy_from(&phi);
            axpy(&mut tmp, h, &k);
            k.gemm(1.0, &l_end, &tmp, 0.0);
            acc += &k;
            axpy(&mut phi, h / 6.0, &acc);
            l_start = l_end;
        }
        sum /= steps as f64;
        (phi, sum)
    }
}

/// `y += a·x`, entrywise.
fn axpy(y: &mut DMatrix<f64>, a: f64, x: &DMatrix<f64>) {
    for (yi, xi) in y.iter_mut().zip(x.iter()) {
        *yi += a * xi;
    }
}

/// Period-averaged steady state under `drive`, starting from `rho0`.
pub fn steady_state(
    rho0: &DensityMatrix,
    drive: &DriveSpec,
    diss: &Dissipators,
    criteria: &SteadyCriteria,
) -> Result<(DensityMatrix, SteadyDiagnostics)> {
    SteadySolver::new(diss, drive)?.solve(drive.omega_d, rho0, criteria)
}
