// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Experiment-facing observables. States are in the eigenbasis of the
//! undriven Hamiltonian, as produced by [`crate::dynamics`].

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::models::{DressedLabel, EigenSystem, Sign, SystemParams};
use crate::operators::{pauli, Axis, DensityMatrix, HilbertSpace, Operator};
use crate::registry::Registry;

/// Eigenbasis operators and label positions needed by the readouts at one
/// flux point.
#[derive(Debug, Clone)]
pub struct ObservableSet {
    /// `cosθ σz − sinθ σx`: σz of the persistent-current basis.
    flux_sigma_z: DMatrix<Complex64>,
    /// σz of the qubit energy basis.
    qubit_sigma_z: DMatrix<Complex64>,
    tracked: [Option<usize>; 5],
}

/// Labels whose populations are reported, in column order.
pub const TRACKED_LABELS: [DressedLabel; 5] = [
    DressedLabel::Ground,
    DressedLabel::Doublet { n: 1, sign: Sign::Minus },
    DressedLabel::Doublet { n: 1, sign: Sign::Plus },
    DressedLabel::Doublet { n: 2, sign: Sign::Minus },
    DressedLabel::Doublet { n: 2, sign: Sign::Plus },
];

impl ObservableSet {
    pub fn new(es: &EigenSystem, params: &SystemParams, space: &HilbertSpace) -> Self {
        let q = params.qubit();
        let flux = &pauli(space, Axis::Z).scale(q.cos_theta) - &pauli(space, Axis::X).scale(q.sin_theta);
        let tracked = TRACKED_LABELS.map(|l| es.index_of(l).ok());
        Self {
            flux_sigma_z: es.transform(&flux).into_matrix(),
            qubit_sigma_z: es.transform(&pauli(space, Axis::Z)).into_matrix(),
            tracked,
        }
    }

    /// Population of each of [`TRACKED_LABELS`]; NaN where unlabelled.
    pub fn tracked_populations(&self, rho: &DensityMatrix) -> [f64; 5] {
        self.tracked.map(|i| i.map_or(f64::NAN, |i| rho.population(i)))
    }
}

fn trace_product(rho: &DensityMatrix, op: &DMatrix<Complex64>) -> f64 {
    let m = rho.matrix();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            acc += m[(i, j)] * op[(j, i)];
        }
    }
    acc.re
}

/// `Tr(ρ σz)` with σz in the persistent-current basis; proportional to the
/// circulating current. An energy eigenstate of the bare qubit gives ±cosθ.
pub fn observable_sigma_z(rho: &DensityMatrix, obs: &ObservableSet) -> f64 {
    trace_product(rho, &obs.flux_sigma_z)
}

/// `Tr(ρ σz)` in the qubit energy basis.
pub fn qubit_polarization(rho: &DensityMatrix, obs: &ObservableSet) -> f64 {
    trace_product(rho, &obs.qubit_sigma_z)
}

/// `1 − P_g²` with `P_g` the ground-state population; the square is
/// deliberate, the unsquared population is reported separately.
pub fn excited_probability(rho: &DensityMatrix) -> f64 {
    let p = rho.population(0);
    1.0 - p * p
}

/// Scalar readout used for switching-probability transduction.
pub trait Readout: Send + Sync {
    fn name(&self) -> &'static str;
    fn evaluate(&self, rho: &DensityMatrix, obs: &ObservableSet) -> f64;
}

pub struct SigmaZ;

impl Readout for SigmaZ {
    fn name(&self) -> &'static str {
        "sigma_z"
    }
    fn evaluate(&self, rho: &DensityMatrix, obs: &ObservableSet) -> f64 {
        observable_sigma_z(rho, obs)
    }
}

pub struct Polarization;

impl Readout for Polarization {
    fn name(&self) -> &'static str {
        "polarization"
    }
    fn evaluate(&self, rho: &DensityMatrix, obs: &ObservableSet) -> f64 {
        qubit_polarization(rho, obs)
    }
}

pub struct ExcitedProbability;

impl Readout for ExcitedProbability {
    fn name(&self) -> &'static str {
        "excited_prob"
    }
    fn evaluate(&self, rho: &DensityMatrix, _obs: &ObservableSet) -> f64 {
        excited_probability(rho)
    }
}

/// Registry holding `sigma_z`, `polarization` and `excited_prob`.
pub fn readout_registry() -> Registry<dyn Readout> {
    let mut r: Registry<dyn Readout> = Registry::new("readout");
    r.register("sigma_z", Arc::new(SigmaZ))
        .register("polarization", Arc::new(Polarization))
        .register("excited_prob", Arc::new(ExcitedProbability));
    r
}

/// Wraps an operator already in the eigenbasis; exposed for callers that
/// want further custom observables.
pub fn eigenbasis_expectation(rho: &DensityMatrix, op: &Operator) -> f64 {
    trace_product(rho, op.matrix())
}
