// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use crate::registry::Registry;

/// Frequency dependence of a bath's coupling, as a dimensionless factor on
/// the channel rate.
pub trait SpectralDensity: Send + Sync {
    fn name(&self) -> &'static str;
    fn factor(&self, omega: f64) -> f64;
}

/// Frequency-independent rates.
#[derive(Debug, Clone, Copy)]
pub struct Flat;

impl SpectralDensity for Flat {
    fn name(&self) -> &'static str {
        "flat"
    }
    fn factor(&self, _omega: f64) -> f64 {
        1.0
    }
}

/// Linear in frequency, equal to the flat rate at `reference`.
#[derive(Debug, Clone, Copy)]
pub struct Ohmic {
    pub reference: f64,
}

impl SpectralDensity for Ohmic {
    fn name(&self) -> &'static str {
        "ohmic"
    }
    fn factor(&self, omega: f64) -> f64 {
        omega / self.reference
    }
}

/// Registry holding `flat` and `ohmic` (normalized at `ohmic_reference`).
pub fn spectral_registry(ohmic_reference: f64) -> Registry<dyn SpectralDensity> {
    let mut r: Registry<dyn SpectralDensity> = Registry::new("spectral density");
    r.register("flat", Arc::new(Flat))
        .register("ohmic", Arc::new(Ohmic { reference: ohmic_reference }));
    r
}
