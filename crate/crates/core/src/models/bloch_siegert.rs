// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Analytic dressed-state doublets of the Bloch-Siegert Hamiltonian, with
//! the Jaynes-Cummings doublets as the `λ = 0`, `ω_BS = 0` special case.
//!
//! The textbook formulas are written for a basis in which the doublet
//! coupling is `+g_n`. With the rest of the crate's conventions the coupling
//! comes out as `−g_n`; the two are related by relabelling
//! `|q, k⟩ → (−1)^k |q, k⟩`, which is applied to every analytic state built
//! here. Analytic energies carry a constant `+ω_r/2` relative to the Rabi and
//! JC Hamiltonians built in [`super::hamiltonian`]; see
//! [`DoubletFamily::frame_offset`].

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Guard, SystemParams};
use crate::operators::{HilbertSpace, Operator, Qubit, StateVector};
use crate::{Error, Result};

/// How the doublet mixing angle is formed from `g_n` and `δ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MixingConvention {
    /// `tanφ_n = 2g_n/δ_n`, the angle that diagonalizes each 2×2 box.
    #[default]
    BoxConsistent,
    /// `tanφ_n = 2g_n√n/δ_n`, an extra `√n` on top of the one inside `g_n`.
    Verbatim,
}

impl MixingConvention {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "box" | "box_consistent" => Ok(Self::BoxConsistent),
            "verbatim" => Ok(Self::Verbatim),
            other => Err(Error::UnknownStrategy {
                kind: "mixing convention",
                name: other.to_owned(),
                available: "box_consistent, verbatim".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubletParams {
    pub n: usize,
    /// δ + 2nω_BS.
    pub delta_n: f64,
    /// Photon-dependent coupling.
    pub g_n: f64,
    /// Mixing angle in [0, π].
    pub phi_n: f64,
}

impl DoubletParams {
    fn half_angle(&self) -> (f64, f64) {
        let half = 0.5 * self.phi_n;
        (half.cos(), half.sin())
    }
}

/// Doublet ladder of either the Bloch-Siegert or the Jaynes-Cummings model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubletFamily {
    omega_r: f64,
    detuning: f64,
    /// ω_q + ω_r.
    omega_sum: f64,
    /// g·sinθ.
    coupling: f64,
    omega_bs: f64,
    lambda: f64,
    mixing: MixingConvention,
}

impl DoubletFamily {
    pub fn bloch_siegert(params: &SystemParams, mixing: MixingConvention, guard: Guard) -> Result<Self> {
        params.validate()?;
        let lambda = params.lambda();
        guard.check(lambda)?;
        Ok(Self {
            omega_r: params.omega_r,
            detuning: params.detuning(),
            omega_sum: params.omega_q() + params.omega_r,
            coupling: params.transverse_coupling(),
            omega_bs: params.omega_bs(),
            lambda,
            mixing,
        })
    }

    /// Rotating-wave limit: no Bloch-Siegert shift and no admixture of the
    /// n ± 2 manifolds.
    pub fn jaynes_cummings(params: &SystemParams, mixing: MixingConvention) -> Result<Self> {
        params.validate()?;
        Ok(Self {
            omega_r: params.omega_r,
            detuning: params.detuning(),
            omega_sum: params.omega_q() + params.omega_r,
            coupling: params.transverse_coupling(),
            omega_bs: 0.0,
            lambda: 0.0,
            mixing,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn omega_bs(&self) -> f64 {
        self.omega_bs
    }

    /// Amount by which analytic energies exceed those of the Rabi/JC
    /// Hamiltonians for the same parameters.
    pub fn frame_offset(&self) -> f64 {
        0.5 * self.omega_r
    }

    pub fn doublet(&self, n: usize) -> Result<DoubletParams> {
        if n == 0 {
            return Err(Error::Domain("doublet index n must be at least 1".into()));
        }
        let nf = n as f64;
        let delta_n = self.detuning + 2.0 * nf * self.omega_bs;
        let g_n = self.coupling * nf.sqrt() * (1.0 - nf * self.omega_bs / self.omega_sum);
        let numerator = match self.mixing {
            MixingConvention::BoxConsistent => 2.0 * g_n,
            MixingConvention::Verbatim => 2.0 * g_n * nf.sqrt(),
        };
        Ok(DoubletParams {
            n,
            delta_n,
            g_n,
            phi_n: numerator.atan2(delta_n),
        })
    }

    /// `(E₊, E₋)` of doublet `n`.
    pub fn eigenvalues(&self, n: usize) -> Result<(f64, f64)> {
        let d = self.doublet(n)?;
        let centre = n as f64 * self.omega_r - self.omega_bs;
        let half_split = 0.5 * (d.delta_n * d.delta_n + 4.0 * d.g_n * d.g_n).sqrt();
        Ok((centre + half_split, centre - half_split))
    }

    pub fn ground_energy(&self) -> f64 {
        -0.5 * self.detuning - self.omega_bs
    }

    /// Box-diagonal Hamiltonian in the product basis. Box `n` spans
    /// `(|e,n−1⟩, |g,n⟩)`; the top state `|e, n_fock−1⟩` keeps only its
    /// diagonal entry because its partner is truncated away.
    pub fn hamiltonian(&self, space: &HilbertSpace) -> Operator {
        let dim = space.dim();
        let nf = space.n_fock();
        let mut h = DMatrix::<f64>::zeros(dim, dim);
        let half = 0.5 * self.detuning;
        for k in 0..nf {
            let kf = k as f64;
            let g_idx = space.index(Qubit::Ground, k);
            h[(g_idx, g_idx)] = -half + kf * (self.omega_r - self.omega_bs) - self.omega_bs;
            let e_idx = space.index(Qubit::Excited, k);
            let n = kf + 1.0;
            h[(e_idx, e_idx)] = half + n * (self.omega_r + self.omega_bs) - self.omega_bs;
        }
        for n in 1..nf {
            let g_n = self.coupling * (n as f64).sqrt() * (1.0 - n as f64 * self.omega_bs / self.omega_sum);
            let e = space.index(Qubit::Excited, n - 1);
            let g = space.index(Qubit::Ground, n);
            h[(e, g)] = -g_n;
            h[(g, e)] = -g_n;
        }
        Operator::from_real(&h).expect("square by construction")
    }

    /// Normalized `(|n,+⟩, |n,−⟩)` including the first-order admixture of
    /// the n ± 2 manifolds.
    pub fn dressed_states(&self, n: usize, space: &HilbertSpace) -> Result<(StateVector, StateVector)> {
        let d = self.doublet(n)?;
        if n + 1 >= space.n_fock() {
            return Err(Error::Truncation {
                n,
                needed: n + 1,
                n_fock: space.n_fock(),
            });
        }
        let (c, s) = d.half_angle();
        let lam = self.lambda;
        let nf = n as f64;

        // Upper component |e,n−1⟩ + λ√(n−1)|g,n−2⟩ and lower component
        // |g,n⟩ − λ√(n+1)|e,n+1⟩, as (qubit, fock, amplitude) triples.
        let mut upper = vec![(Qubit::Excited, n - 1, 1.0)];
        if n >= 2 {
            upper.push((Qubit::Ground, n - 2, lam * (nf - 1.0).sqrt()));
        }
        let lower = [
            (Qubit::Ground, n, 1.0),
            (Qubit::Excited, n + 1, -lam * (nf + 1.0).sqrt()),
        ];

        let build = |wu: f64, wl: f64| -> Result<StateVector> {
            let mut v = DVector::from_element(space.dim(), Complex64::new(0.0, 0.0));
            for &(q, k, amp) in &upper {
                v[space.index(q, k)] += Complex64::new(relabel(k) * wu * amp, 0.0);
            }
            for &(q, k, amp) in &lower {
                v[space.index(q, k)] += Complex64::new(relabel(k) * wl * amp, 0.0);
            }
            StateVector::new(v)
        };
        Ok((build(c, s)?, build(s, -c)?))
    }
}

fn relabel(fock: usize) -> f64 {
    if fock % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

pub fn bs_hamiltonian(params: &SystemParams, space: &HilbertSpace) -> Result<Operator> {
    bs_hamiltonian_guarded(params, space, Guard::Enforce)
}

pub(crate) fn bs_hamiltonian_guarded(
    params: &SystemParams,
    space: &HilbertSpace,
    guard: Guard,
) -> Result<Operator> {
    Ok(DoubletFamily::bloch_siegert(params, MixingConvention::default(), guard)?.hamiltonian(space))
}

/// `(E₊, E₋)` of doublet `n`, including the `+ω_r/2` frame offset.
pub fn bs_eigenvalues(params: &SystemParams, n: usize) -> Result<(f64, f64)> {
    DoubletFamily::bloch_siegert(params, MixingConvention::default(), Guard::Enforce)?.eigenvalues(n)
}

/// `−δ/2 − ω_BS`, including the `+ω_r/2` frame offset.
pub fn bs_ground_energy(params: &SystemParams) -> Result<f64> {
    Ok(DoubletFamily::bloch_siegert(params, MixingConvention::default(), Guard::Enforce)?.ground_energy())
}

pub fn bs_dressed_states(
    params: &SystemParams,
    n: usize,
    space: &HilbertSpace,
) -> Result<(StateVector, StateVector)> {
    DoubletFamily::bloch_siegert(params, MixingConvention::default(), Guard::Enforce)?.dressed_states(n, space)
}

pub fn jc_dressed_states(
    params: &SystemParams,
    n: usize,
    space: &HilbertSpace,
) -> Result<(StateVector, StateVector)> {
    DoubletFamily::jaynes_cummings(params, MixingConvention::default())?.dressed_states(n, space)
}
