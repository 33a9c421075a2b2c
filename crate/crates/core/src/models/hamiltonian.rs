// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use super::{bs_hamiltonian_guarded, Guard, SystemParams};
use crate::operators::{annihilation, number, pauli, position, sigma_plus, Axis, HilbertSpace, Operator};
use crate::registry::Registry;
use crate::Result;

/// A Hamiltonian family selectable by name.
pub trait HamiltonianModel: Send + Sync {
    fn name(&self) -> &'static str;
    fn build(&self, params: &SystemParams, space: &HilbertSpace) -> Result<Operator>;
}

/// `ω_q/2 σz + ω_r a†a` in the bare qubit energy basis.
fn bare(params: &SystemParams, space: &HilbertSpace) -> Operator {
    let q = params.qubit();
    let sz = pauli(space, Axis::Z);
    &sz.scale(0.5 * q.omega_q) + &number(space).scale(params.omega_r)
}

/// Full Rabi Hamiltonian with the flux-dependent coupling
/// `g(cosθ σz − sinθ σx)(a + a†)`.
pub fn rabi_hamiltonian(params: &SystemParams, space: &HilbertSpace) -> Operator {
    let q = params.qubit();
    let coupling_axis =
        &pauli(space, Axis::Z).scale(q.cos_theta) - &pauli(space, Axis::X).scale(q.sin_theta);
    let interaction = (&coupling_axis * &position(space)).scale(params.g);
    &bare(params, space) + &interaction
}

/// Rotating-wave Hamiltonian: keeps only `−g sinθ (σ+a + σ−a†)`.
pub fn jc_hamiltonian(params: &SystemParams, space: &HilbertSpace) -> Operator {
    let sp_a = &sigma_plus(space) * &annihilation(space);
    let exchange = &sp_a + &sp_a.adjoint();
    &bare(params, space) - &exchange.scale(params.transverse_coupling())
}

pub struct RabiModel;

impl HamiltonianModel for RabiModel {
    fn name(&self) -> &'static str {
        "rabi"
    }
    fn build(&self, params: &SystemParams, space: &HilbertSpace) -> Result<Operator> {
        Ok(rabi_hamiltonian(params, space))
    }
}

pub struct JaynesCummingsModel;

impl HamiltonianModel for JaynesCummingsModel {
    fn name(&self) -> &'static str {
        "jc"
    }
    fn build(&self, params: &SystemParams, space: &HilbertSpace) -> Result<Operator> {
        Ok(jc_hamiltonian(params, space))
    }
}

#[derive(Default)]
pub struct BlochSiegertModel {
    pub guard: Guard,
}

impl HamiltonianModel for BlochSiegertModel {
    fn name(&self) -> &'static str {
        "bs"
    }
    fn build(&self, params: &SystemParams, space: &HilbertSpace) -> Result<Operator> {
        bs_hamiltonian_guarded(params, space, self.guard)
    }
}

/// Registry holding `rabi`, `jc` and `bs`.
pub fn model_registry(guard: Guard) -> Registry<dyn HamiltonianModel> {
    let mut r: Registry<dyn HamiltonianModel> = Registry::new("hamiltonian model");
    r.register("rabi", Arc::new(RabiModel))
        .register("jc", Arc::new(JaynesCummingsModel))
        .register("bs", Arc::new(BlochSiegertModel { guard }));
    r
}
