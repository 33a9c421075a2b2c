// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{bose_occupation, Bath, ChannelKind, DriveSpec};
use crate::models::EigenSystem;
use crate::operators::{pauli, position, Axis, HilbertSpace};
use crate::{Error, Result};

/// Transitions closer than this (rad/s) are treated as degenerate and carry
/// no dissipative weight.
pub const DEGENERACY_CUTOFF: f64 = 2.0 * PI * 1e3;

#[derive(Debug, Clone)]
pub(crate) struct ChannelOps {
    pub kind: ChannelKind,
    pub s: DMatrix<Complex64>,
    pub u: DMatrix<Complex64>,
}

/// Bath operators `(U_k, S_k)` in the eigenbasis of the undriven Hamiltonian,
/// together with the energies they were built from.
#[derive(Debug, Clone)]
pub struct Dissipators {
    energies: Vec<f64>,
    temperature: f64,
    position: DMatrix<Complex64>,
    sigma_x: DMatrix<Complex64>,
    sigma_z: DMatrix<Complex64>,
    pub(crate) channels: Vec<ChannelOps>,
}

impl Dissipators {
    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn dim(&self) -> usize {
        self.energies.len()
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Coupling operator of `kind` in the eigenbasis.
    pub fn coupling(&self, kind: ChannelKind) -> &DMatrix<Complex64> {
        match kind {
            ChannelKind::ResonatorX => &self.position,
            ChannelKind::QubitX => &self.sigma_x,
            ChannelKind::QubitZ => &self.sigma_z,
        }
    }

    /// `U_k` for every channel, in bath order.
    pub fn kernels(&self) -> impl Iterator<Item = (ChannelKind, &DMatrix<Complex64>)> {
        self.channels.iter().map(|c| (c.kind, &c.u))
    }

    /// Drive amplitude operator `A_qb σx + A_r (a + a†) + A_z σz` in the
    /// eigenbasis; the time dependence `cos(ω_d t)` is applied by the caller.
    pub fn drive_operator(&self, drive: &DriveSpec) -> DMatrix<Complex64> {
        let c = |x: f64| Complex64::new(x, 0.0);
        &self.sigma_x * c(drive.a_qb) + &self.position * c(drive.a_r) + &self.sigma_z * c(drive.a_z)
    }

    /// Largest transition frequency of the retained spectrum.
    pub fn spectral_span(&self) -> f64 {
        let lo = self.energies.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = self.energies.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        hi - lo
    }
}

/// Builds `U_k[ℓ,ℓ'] = (Γ_k/2)·J(|ω|)·S_k[ℓ,ℓ']·w` with `ω = E_ℓ' − E_ℓ`,
/// where `w = n(|ω|) + 1` when `ℓ'` lies above `ℓ` (emission into the bath),
/// `w = n(|ω|)` when it lies below (absorption), and `w = 0` for degenerate
/// pairs. Principal-value (Lamb shift) terms are not included.
pub fn build_dissipators(es: &EigenSystem, space: &HilbertSpace, bath: &Bath) -> Result<Dissipators> {
    bath.validate()?;
    if es.len() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: es.len(),
        });
    }
    let energies = es.energies().to_vec();
    let dim = energies.len();
    let position = es.transform(&position(space)).into_matrix();
    let sigma_x = es.transform(&pauli(space, Axis::X)).into_matrix();
    let sigma_z = es.transform(&pauli(space, Axis::Z)).into_matrix();

    // Bath weight per ordered pair; shared by all channels.
    let mut weight = DMatrix::<f64>::zeros(dim, dim);
    for l in 0..dim {
        for lp in 0..dim {
            let omega = energies[lp] - energies[l];
            if omega.abs() < DEGENERACY_CUTOFF {
                continue;
            }
            let n = bose_occupation(omega.abs(), bath.temperature)?;
            let w = if omega > 0.0 { n + 1.0 } else { n };
            weight[(l, lp)] = w * bath.spectral.factor(omega.abs());
        }
    }

    let channels = bath
        .channels
        .iter()
        .map(|c| {
            let s = match c.kind {
                ChannelKind::ResonatorX => position.clone(),
                ChannelKind::QubitX => sigma_x.clone(),
                ChannelKind::QubitZ => sigma_z.clone(),
            };
            let u = DMatrix::from_fn(dim, dim, |l, lp| s[(l, lp)] * (0.5 * c.rate * weight[(l, lp)]));
            ChannelOps { kind: c.kind, s, u }
        })
        .collect();

    Ok(Dissipators {
        energies,
        temperature: bath.temperature,
        position,
        sigma_x,
        sigma_z,
        channels,
    })
}
