// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Second-order time-convolutionless master equation in the eigenbasis of
//! the undriven Hamiltonian.
//!
//! Every density matrix handled here is expressed in that eigenbasis, with
//! index 0 the ground state. Use [`crate::operators::DensityMatrix::from_basis`]
//! with the eigenvectors to go back to the product basis.

mod dissipators;
mod generator;
mod integrate;
mod spectral;
mod steady;

pub use dissipators::{build_dissipators, Dissipators, DEGENERACY_CUTOFF};
pub use generator::{tcpom_rhs, Generator};
pub use integrate::{evolve, EvolveOptions, Trajectory};
pub use spectral::{spectral_registry, Flat, Ohmic, SpectralDensity};
pub use steady::{steady_state, SteadyCriteria, SteadyDiagnostics, SteadySolver};

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{BOLTZMANN, HBAR};
use crate::models::EigenSystem;
use crate::operators::DensityMatrix;
use crate::{Error, Result};

/// System operator through which a bath couples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelKind {
    /// `a + a†`.
    ResonatorX,
    /// `σx`.
    QubitX,
    /// `σz`.
    QubitZ,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BathChannel {
    pub kind: ChannelKind,
    /// Rate Γ, rad/s. A bare two-level transition with unit matrix element
    /// decays at exactly this rate at zero temperature.
    pub rate: f64,
}

/// Thermal environment: channels sharing one temperature and spectral shape.
#[derive(Clone)]
pub struct Bath {
    pub temperature: f64,
    pub channels: Vec<BathChannel>,
    pub spectral: Arc<dyn SpectralDensity>,
}

impl fmt::Debug for Bath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Bath")
            .field("temperature", &self.temperature)
            .field("channels", &self.channels)
            .field("spectral", &self.spectral.name())
            .finish()
    }
}

impl Bath {
    /// Resonator, qubit-relaxation and qubit-dephasing channels with a flat
    /// spectrum. Channels with zero rate are left out.
    pub fn new(temperature: f64, gamma_r: f64, gamma_1: f64, gamma_z: f64) -> Self {
        let channels = [
            (ChannelKind::ResonatorX, gamma_r),
            (ChannelKind::QubitX, gamma_1),
            (ChannelKind::QubitZ, gamma_z),
        ]
        .into_iter()
        .filter(|&(_, rate)| rate != 0.0)
        .map(|(kind, rate)| BathChannel { kind, rate })
        .collect();
        Self {
            temperature,
            channels,
            spectral: Arc::new(Flat),
        }
    }

    pub fn with_spectral(mut self, spectral: Arc<dyn SpectralDensity>) -> Self {
        self.spectral = spectral;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.temperature >= 0.0) || !self.temperature.is_finite() {
            return Err(Error::Domain(format!("temperature must be >= 0, got {}", self.temperature)));
        }
        for c in &self.channels {
            if !(c.rate >= 0.0) || !c.rate.is_finite() {
                return Err(Error::Domain(format!("{:?} rate must be >= 0, got {}", c.kind, c.rate)));
            }
        }
        Ok(())
    }
}

/// Coherent drive `cos(ω_d t)·(A_qb σx + A_r (a + a†) + A_z σz)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DriveSpec {
    pub a_qb: f64,
    pub a_r: f64,
    pub a_z: f64,
    pub omega_d: f64,
}

impl DriveSpec {
    pub fn undriven(omega_d: f64) -> Self {
        Self {
            omega_d,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, a) in [("a_qb", self.a_qb), ("a_r", self.a_r), ("a_z", self.a_z)] {
            if !(a >= 0.0) || !a.is_finite() {
                return Err(Error::Domain(format!("drive amplitude {name} must be >= 0, got {a}")));
            }
        }
        if !(self.omega_d >= 0.0) || !self.omega_d.is_finite() {
            return Err(Error::Domain(format!("omega_d must be >= 0, got {}", self.omega_d)));
        }
        Ok(())
    }

    pub fn max_amplitude(&self) -> f64 {
        self.a_qb.max(self.a_r).max(self.a_z)
    }

    /// Warning text when the drive is no longer weak compared to `g`.
    pub fn perturbative_warning(&self, g: f64) -> Option<String> {
        let a = self.max_amplitude();
        (a > 0.2 * g).then(|| format!("drive amplitude {a:e} rad/s exceeds 0.2 g = {:e} rad/s", 0.2 * g))
    }
}

/// Thermal occupation `1/(exp(ħω/k_BT) − 1)`; zero at `T = 0`.
pub fn bose_occupation(omega: f64, temperature: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::Domain(format!("Bose occupation needs omega > 0, got {omega}")));
    }
    if !(temperature >= 0.0) {
        return Err(Error::Domain(format!("temperature must be >= 0, got {temperature}")));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / (HBAR * omega / (BOLTZMANN * temperature)).exp_m1())
}

/// Gibbs state over the retained eigenstates, in the eigenbasis.
pub fn thermal_state(es: &EigenSystem, temperature: f64) -> Result<DensityMatrix> {
    if !(temperature >= 0.0) {
        return Err(Error::Domain(format!("temperature must be >= 0, got {temperature}")));
    }
    let e0 = es.energies()[0];
    let weights: Vec<f64> = es
        .energies()
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            if temperature == 0.0 {
                if i == 0 {
                    1.0
                } else {
                    0.0
                }
            } else {
                (-HBAR * (e - e0) / (BOLTZMANN * temperature)).exp()
            }
        })
        .collect();
    let z: f64 = weights.iter().sum();
    let pops: Vec<f64> = weights.iter().map(|w| w / z).collect();
    DensityMatrix::from_populations(&pops)
}

/// Hermitian matrix ↔ real coordinate vector. Coordinates are the diagonal
/// followed by `(Re, Im)` of each strictly upper entry, row by row.
pub(crate) struct HermitianCoords {
    dim: usize,
    pairs: Vec<(usize, usize)>,
}

impl HermitianCoords {
    pub(crate) fn new(dim: usize) -> Self {
        let pairs = (0..dim).flat_map(|i| ((i + 1)..dim).map(move |j| (i, j))).collect();
        Self { dim, pairs }
    }

    pub(crate) fn len(&self) -> usize {
        self.dim * self.dim
    }

    pub(crate) fn to_coords(&self, m: &DMatrix<Complex64>, out: &mut [f64]) {
        for i in 0..self.dim {
            out[i] = m[(i, i)].re;
        }
        for (p, &(i, j)) in self.pairs.iter().enumerate() {
            out[self.dim + 2 * p] = m[(i, j)].re;
            out[self.dim + 2 * p + 1] = m[(i, j)].im;
        }
    }

    pub(crate) fn from_coords(&self, x: &[f64]) -> DMatrix<Complex64> {
        let mut m = DMatrix::from_element(self.dim, self.dim, Complex64::new(0.0, 0.0));
        for i in 0..self.dim {
            m[(i, i)] = Complex64::new(x[i], 0.0);
        }
        for (p, &(i, j)) in self.pairs.iter().enumerate() {
            let z = Complex64::new(x[self.dim + 2 * p], x[self.dim + 2 * p + 1]);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
        m
    }

    /// Hermitian basis element for coordinate `k`.
    pub(crate) fn basis(&self, k: usize) -> DMatrix<Complex64> {
        let mut x = vec![0.0; self.len()];
        x[k] = 1.0;
        self.from_coords(&x)
    }
}
