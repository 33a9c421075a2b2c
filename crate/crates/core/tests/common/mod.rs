// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use rabisim::constants::{ghz, mhz};
use rabisim::dynamics::{build_dissipators, Bath, Dissipators};
use rabisim::models::{eigensystem, label_dressed, rabi_hamiltonian, EigenSystem, SystemParams};
use rabisim::operators::{fock_space, HilbertSpace};

/// Device constants: ω_r/2π = 8.13 GHz, Δ/2π = 4.2 GHz, I_p = 500 nA,
/// g/2π = 0.82 GHz, at the symmetry point.
pub fn device() -> SystemParams {
    SystemParams {
        omega_r: ghz(8.13),
        delta_gap: ghz(4.2),
        i_p: 500e-9,
        flux_offset: 0.0,
        g: ghz(0.82),
    }
}

/// Operating point of the matrix-element ratio study: δ/2π = −3.91 GHz,
/// g/ω_r = 0.1.
pub fn ratio_point() -> SystemParams {
    SystemParams {
        delta_gap: ghz(8.13 - 3.91),
        g: 0.1 * ghz(8.13),
        ..device()
    }
}

pub fn labelled(p: &SystemParams, n_fock: usize) -> (EigenSystem, HilbertSpace) {
    let s = fock_space(n_fock).unwrap();
    let es = eigensystem(&rabi_hamiltonian(p, &s)).unwrap();
    (label_dressed(&es, p, &s).unwrap(), s)
}

/// Fitted spectroscopy bath: Γ_r/2π = 1 MHz, Γ_1/2π = 15 MHz.
pub fn fitted_bath(temperature: f64) -> Bath {
    Bath::new(temperature, mhz(1.0), mhz(15.0), 0.0)
}

pub fn dissipators(p: &SystemParams, n_fock: usize, bath: &Bath) -> (EigenSystem, HilbertSpace, Dissipators) {
    let (es, s) = labelled(p, n_fock);
    let d = build_dissipators(&es, &s, bath).unwrap();
    (es, s, d)
}
