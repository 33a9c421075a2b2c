// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{Dissipators, DriveSpec};
use crate::operators::DensityMatrix;
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Right-hand side of the master equation for a fixed bath and drive.
///
/// For Hermitian `ρ` the equation
/// `ρ̇ = −i[H(t), ρ] + Σ_k (U_k ρ S_k + S_k ρ U_k† − S_k U_k ρ − ρ U_k† S_k)`
/// is evaluated as `W + W†` with `W = K(t)ρ + Σ_k U_k ρ S_k` and
/// `K(t) = −iH(t) − Σ_k S_k U_k`.
#[derive(Debug, Clone)]
pub struct Generator {
    k0: DMatrix<Complex64>,
    drive_op: DMatrix<Complex64>,
    omega_d: f64,
    jumps: Vec<(DMatrix<Complex64>, DMatrix<Complex64>)>,
    span: f64,
}

impl Generator {
    pub fn new(diss: &Dissipators, drive: &DriveSpec) -> Self {
        let dim = diss.dim();
        let e0 = diss.energies()[0];
        let mut k0 = DMatrix::from_fn(dim, dim, |r, c| {
            if r == c {
                -I * (diss.energies()[r] - e0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let jumps: Vec<_> = diss.channels.iter().map(|c| (c.u.clone(), c.s.clone())).collect();
        for (u, s) in &jumps {
            k0 -= s * u;
        }
        Self {
            k0,
            drive_op: diss.drive_operator(drive),
            omega_d: drive.omega_d,
            jumps,
            span: diss.spectral_span(),
        }
    }

    pub fn dim(&self) -> usize {
        self.k0.nrows()
    }

    pub fn omega_d(&self) -> f64 {
        self.omega_d
    }

    /// Largest fixed step allowed: a twentieth of the shortest period among
    /// the spectral span and the drive.
    pub fn max_step(&self) -> f64 {
        2.0 * PI / self.span.max(self.omega_d) / 20.0
    }

    pub fn rhs(&self, rho: &DMatrix<Complex64>, t: f64) -> DMatrix<Complex64> {
        self.rhs_scaled(rho, (self.omega_d * t).cos())
    }

    /// RHS with the drive envelope frozen at `drive_factor`.
    pub(crate) fn rhs_scaled(&self, rho: &DMatrix<Complex64>, drive_factor: f64) -> DMatrix<Complex64> {
        let k = if drive_factor == 0.0 {
            self.k0.clone()
        } else {
            &self.k0 - &self.drive_op * (I * drive_factor)
        };
        let mut w = k * rho;
        for (u, s) in &self.jumps {
            w += u * rho * s;
        }
        let wt = w.adjoint();
        w + wt
    }

    /// `−i[H_d, ρ]` with unit envelope.
    pub(crate) fn drive_rhs(&self, rho: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let w = &self.drive_op * rho * (-I);
        let wt = w.adjoint();
        w + wt
    }
}

/// `dρ/dt` at time `t`, with `ρ` in the eigenbasis of the undriven
/// Hamiltonian.
pub fn tcpom_rhs(rho: &DensityMatrix, t: f64, drive: &DriveSpec, diss: &Dissipators) -> Result<DMatrix<Complex64>> {
    if rho.dim() != diss.dim() {
        return Err(Error::DimensionMismatch {
            expected: diss.dim(),
            found: rho.dim(),
        });
    }
    Ok(Generator::new(diss, drive).rhs(rho.matrix(), t))
}
