// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! CODATA 2018 exact constants and the lab-unit conversions used at the
//! configuration boundary.

use std::f64::consts::PI;

/// Planck constant, J·s.
pub const PLANCK: f64 = 6.626_070_15e-34;
/// Reduced Planck constant, J·s.
pub const HBAR: f64 = PLANCK / (2.0 * PI);
/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Magnetic flux quantum h/2e, Wb.
pub const FLUX_QUANTUM: f64 = 2.067_833_848e-15;

/// ω/2π in GHz to angular frequency in rad/s.
pub fn ghz(f: f64) -> f64 {
    2.0 * PI * f * 1e9
}

/// ω/2π in MHz to angular frequency in rad/s.
pub fn mhz(f: f64) -> f64 {
    2.0 * PI * f * 1e6
}

/// Angular frequency (rad/s) to ω/2π in GHz.
pub fn to_ghz(omega: f64) -> f64 {
    omega / (2.0 * PI * 1e9)
}

/// Angular frequency (rad/s) to ω/2π in MHz.
pub fn to_mhz(omega: f64) -> f64 {
    omega / (2.0 * PI * 1e6)
}

/// Flux in units of mΦ₀ to weber.
pub fn milli_flux_quanta(phi: f64) -> f64 {
    phi * 1e-3 * FLUX_QUANTUM
}

/// Flux in weber to mΦ₀.
pub fn to_milli_flux_quanta(phi: f64) -> f64 {
    phi / (1e-3 * FLUX_QUANTUM)
}
