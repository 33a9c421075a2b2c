// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::dynamics::SteadyDiagnostics;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid truncation: n_fock = {0}, at least 2 Fock states are required")]
    InvalidTruncation(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("operator is not Hermitian (relative asymmetry {0:e})")]
    NotHermitian(f64),

    #[error("perturbative parameter lambda = {0:.4} is not below 0.2")]
    NonPerturbative(f64),

    #[error("doublet n = {n} needs Fock level {needed}, but the space keeps {n_fock} levels")]
    Truncation { n: usize, needed: usize, n_fock: usize },

    #[error("ambiguous dressed-state label {0}")]
    AmbiguousLabel(String),

    #[error("dressed state {0} is not labelled in this eigensystem")]
    MissingLabel(String),

    #[error("state {index} has parity expectation {value}, expected +1 or -1")]
    ParityUndefined { index: usize, value: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("time step {dt:e} s exceeds the stability bound {bound:e} s")]
    StepTooLarge { dt: f64, bound: f64 },

    #[error("steady state not reached after {} windows (residual {:e})", .0.windows, .0.final_residual)]
    NotConverged(Box<SteadyDiagnostics>),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unknown {kind} `{name}` (available: {available})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
