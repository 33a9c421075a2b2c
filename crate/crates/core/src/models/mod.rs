// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! System parameters, Hamiltonians and their eigensystems.

mod bloch_siegert;
mod eigen;
mod hamiltonian;

pub use bloch_siegert::{
    bs_dressed_states, bs_eigenvalues, bs_ground_energy, bs_hamiltonian, jc_dressed_states,
    DoubletFamily, DoubletParams, MixingConvention,
};
pub use eigen::{eigensystem, label_dressed, label_dressed_with, DressedLabel, EigenSystem, Sign};
pub(crate) use bloch_siegert::bs_hamiltonian_guarded;
pub use hamiltonian::{
    jc_hamiltonian, model_registry, rabi_hamiltonian, BlochSiegertModel, HamiltonianModel,
    JaynesCummingsModel, RabiModel,
};

use serde::{Deserialize, Serialize};

use crate::constants::HBAR;
use crate::{Error, Result};

/// Above this the Bloch-Siegert expansion is not trusted.
pub const LAMBDA_LIMIT: f64 = 0.2;

/// Whether analytic Bloch-Siegert results refuse `λ ≥ LAMBDA_LIMIT`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Guard {
    #[default]
    Enforce,
    Allow,
}

impl Guard {
    pub fn from_allow(allow: bool) -> Self {
        if allow {
            Guard::Allow
        } else {
            Guard::Enforce
        }
    }

    pub fn check(self, lambda: f64) -> Result<()> {
        if self == Guard::Enforce && lambda >= LAMBDA_LIMIT {
            Err(Error::NonPerturbative(lambda))
        } else {
            Ok(())
        }
    }
}

/// Physical constants of qubit, resonator and coupling. SI units throughout:
/// angular frequencies in rad/s, current in A, flux in Wb.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    pub omega_r: f64,
    /// Qubit tunnel splitting Δ.
    pub delta_gap: f64,
    /// Persistent current.
    pub i_p: f64,
    /// Φ − Φ₀/2, signed.
    pub flux_offset: f64,
    pub g: f64,
}

/// Qubit frequency and mixing angle at one flux bias.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitPoint {
    pub omega_q: f64,
    /// θ with tanθ = Δ/ε, in (0, π).
    pub theta: f64,
    pub epsilon: f64,
    pub sin_theta: f64,
    pub cos_theta: f64,
}

impl QubitPoint {
    pub fn is_symmetry_point(&self) -> bool {
        self.epsilon == 0.0
    }
}

pub fn qubit_from_flux(delta_gap: f64, i_p: f64, flux_offset: f64) -> QubitPoint {
    let epsilon = 2.0 * i_p * flux_offset / HBAR;
    let omega_q = delta_gap.hypot(epsilon);
    // Ratios rather than trig so that cosθ is exactly zero at ε = 0.
    QubitPoint {
        omega_q,
        theta: delta_gap.atan2(epsilon),
        epsilon,
        sin_theta: delta_gap / omega_q,
        cos_theta: epsilon / omega_q,
    }
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        let finite = [self.omega_r, self.delta_gap, self.i_p, self.flux_offset, self.g]
            .iter()
            .all(|x| x.is_finite());
        if !finite {
            return Err(Error::Domain("system parameters must be finite".into()));
        }
        if self.omega_r <= 0.0 {
            return Err(Error::Domain("omega_r must be positive".into()));
        }
        if self.delta_gap <= 0.0 {
            return Err(Error::Domain("delta_gap must be positive".into()));
        }
        if self.g < 0.0 {
            return Err(Error::Domain("g must be non-negative".into()));
        }
        Ok(())
    }

    pub fn with_g(self, g: f64) -> Self {
        Self { g, ..self }
    }

    pub fn with_flux_offset(self, flux_offset: f64) -> Self {
        Self {
            flux_offset,
            ..self
        }
    }

    pub fn qubit(&self) -> QubitPoint {
        qubit_from_flux(self.delta_gap, self.i_p, self.flux_offset)
    }

    pub fn epsilon(&self) -> f64 {
        self.qubit().epsilon
    }

    pub fn omega_q(&self) -> f64 {
        self.qubit().omega_q
    }

    pub fn theta(&self) -> f64 {
        self.qubit().theta
    }

    /// δ = ω_q − ω_r.
    pub fn detuning(&self) -> f64 {
        self.omega_q() - self.omega_r
    }

    /// Transverse coupling g·sinθ.
    pub fn transverse_coupling(&self) -> f64 {
        self.g * self.qubit().sin_theta
    }

    /// λ = g·sinθ / (ω_r + ω_q).
    pub fn lambda(&self) -> f64 {
        self.transverse_coupling() / (self.omega_r + self.omega_q())
    }

    /// Bloch-Siegert shift g²sin²θ / (ω_q + ω_r).
    pub fn omega_bs(&self) -> f64 {
        let gs = self.transverse_coupling();
        gs * gs / (self.omega_q() + self.omega_r)
    }
}
