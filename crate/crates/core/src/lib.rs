// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Flux-qubit / LC-resonator simulator in the ultrastrong-coupling regime of
//! the quantum Rabi model.
//!
//! The crate is layered bottom-up:
//!
//! * [`operators`]: truncated qubit ⊗ Fock space, ladder/Pauli/parity
//!   operators and the dense matrix carriers everything else uses.
//! * [`models`]: Rabi, Jaynes-Cummings and Bloch-Siegert Hamiltonians behind
//!   the [`models::HamiltonianModel`] trait, the analytic Bloch-Siegert
//!   doublets, exact diagonalization and dressed-state labelling.
//! * [`transitions`]: numeric and analytic transition matrix elements, the
//!   sign-changing/sign-preserving ratio curves and parity classification.
//! * [`dynamics`]: second-order time-convolutionless master equation with
//!   thermal baths, fixed-step RK4 evolution and periodic steady states.
//! * [`spectroscopy`]: flux × drive-frequency sweeps, readout observables,
//!   switching-probability transduction and grid-search calibration.
//!
//! All internal quantities are SI: angular frequencies in rad/s, times in
//! seconds, temperatures in kelvin, flux in weber.

pub mod constants;
pub mod dynamics;
mod error;
pub mod registry;
pub mod models;
pub mod operators;
pub mod spectroscopy;
pub mod transitions;

pub use error::{Error, Result};
