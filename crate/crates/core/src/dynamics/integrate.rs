// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{Dissipators, DriveSpec, Generator};
use crate::operators::DensityMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolveOptions {
    pub t_end: f64,
    /// Requested step; the actual step is `t_end / ceil(t_end / dt)`.
    pub dt: f64,
    /// Spacing of stored samples. `None` stores only the endpoints.
    pub sample_interval: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<DensityMatrix>,
}

impl Trajectory {
    pub fn last(&self) -> &DensityMatrix {
        self.states.last().expect("trajectory holds at least the initial state")
    }
}

/// Classical fixed-step RK4 from `t = 0`.
pub fn evolve(rho0: &DensityMatrix, drive: &DriveSpec, diss: &Dissipators, opts: &EvolveOptions) -> Result<Trajectory> {
    drive.validate()?;
    if rho0.dim() != diss.dim() {
        return Err(Error::DimensionMismatch {
            expected: diss.dim(),
            found: rho0.dim(),
        });
    }
    if !(opts.t_end >= 0.0) || !(opts.dt > 0.0) {
        return Err(Error::Config(format!(
            "evolution needs t_end >= 0 and dt > 0, got t_end = {}, dt = {}",
            opts.t_end, opts.dt
        )));
    }
    let generator = Generator::new(diss, drive);
    let bound = generator.max_step();
    if opts.dt > bound {
        return Err(Error::StepTooLarge { dt: opts.dt, bound });
    }

    let steps = step_count(opts.t_end, opts.dt);
    let h = if steps == 0 { 0.0 } else { opts.t_end / steps as f64 };
    let stride = match opts.sample_interval {
        Some(dt_s) if dt_s > 0.0 && h > 0.0 => ((dt_s / h).round() as usize).max(1),
        _ => steps.max(1),
    };

    let mut rho = rho0.matrix().clone();
    let mut times = vec![0.0];
    let mut states = vec![rho0.clone()];
    for n in 0..steps {
        let t = n as f64 * h;
        rho = rk4_step(&generator, &rho, t, h);
        if (n + 1) % stride == 0 || n + 1 == steps {
            times.push((n + 1) as f64 * h);
            states.push(DensityMatrix::from_matrix_unchecked(rho.clone()));
        }
    }
    Ok(Trajectory { times, states })
}

/// `ceil(span / dt)`, ignoring round-off just above an integer.
pub(crate) fn step_count(span: f64, dt: f64) -> usize {
    let ratio = span / dt;
    let nearest = ratio.round();
    if (ratio - nearest).abs() <= 1e-9 * nearest.max(1.0) {
        nearest as usize
    } else {
        ratio.ceil() as usize
    }
}

pub(crate) fn rk4_step(g: &Generator, rho: &DMatrix<Complex64>, t: f64, h: f64) -> DMatrix<Complex64> {
    let c = |x: f64| Complex64::new(x, 0.0);
    let k1 = g.rhs(rho, t);
    let k2 = g.rhs(&(rho + &k1 * c(0.5 * h)), t + 0.5 * h);
    let k3 = g.rhs(&(rho + &k2 * c(0.5 * h)), t + 0.5 * h);
    let k4 = g.rhs(&(rho + &k3 * c(h)), t + h);
    rho + (k1 + (k2 + k3) * c(2.0) + k4) * c(h / 6.0)
}
