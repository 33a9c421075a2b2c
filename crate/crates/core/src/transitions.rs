// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Transition matrix elements between dressed states, selection-rule ratio
//! curves and transition tables.
//!
//! Analytic elements connect doublet `n` to doublet `n + 1` and are defined
//! only up to an overall normalization; their moduli ratios, zeros and limits
//! are what carry meaning. Numeric elements are taken between labelled exact
//! eigenstates.

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::models::{
    eigensystem, label_dressed_with, rabi_hamiltonian, DoubletFamily, DressedLabel, EigenSystem, Guard,
    MixingConvention, Sign, SystemParams,
};
use crate::operators::{fock_space, pauli, position, Axis, HilbertSpace, Operator};
use crate::registry::Registry;
use crate::{Error, Result};

/// Which coupling the drive acts through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DriveAxis {
    /// `a + a†`.
    Resonator,
    /// `σx`.
    Qubit,
}

pub fn drive_operator(space: &HilbertSpace, axis: DriveAxis) -> Operator {
    match axis {
        DriveAxis::Resonator => position(space),
        DriveAxis::Qubit => pauli(space, Axis::X),
    }
}

/// `⟨i|O|j⟩` between eigenstates, in the eigensystem's phase convention.
pub fn numeric_matrix_element(es: &EigenSystem, op: &Operator, i: usize, j: usize) -> Result<Complex64> {
    let dim = es.len();
    for index in [i, j] {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
    }
    if op.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: op.dim(),
        });
    }
    let v = es.vectors();
    Ok(op.sandwich(&v.column(i).into_owned(), &v.column(j).into_owned()))
}

/// Elements `⟨n,s₁|O|n+1,s₂⟩` for the four sign combinations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DoubletElements {
    pub plus_plus: f64,
    pub plus_minus: f64,
    pub minus_plus: f64,
    pub minus_minus: f64,
}

impl DoubletElements {
    pub fn get(&self, from: Sign, to: Sign) -> f64 {
        match (from, to) {
            (Sign::Plus, Sign::Plus) => self.plus_plus,
            (Sign::Plus, Sign::Minus) => self.plus_minus,
            (Sign::Minus, Sign::Plus) => self.minus_plus,
            (Sign::Minus, Sign::Minus) => self.minus_minus,
        }
    }

    /// `|T(−,−)| / |T(−,+)|`: sign-preserving over sign-changing weight.
    pub fn selection_ratio(&self) -> f64 {
        self.minus_minus.abs() / self.minus_plus.abs()
    }
}

fn analytic_elements(family: &DoubletFamily, n: usize, axis: DriveAxis) -> Result<DoubletElements> {
    let (c1, s1) = half_angle(family, n)?;
    let (c2, s2) = half_angle(family, n + 1)?;
    let lam = family.lambda();
    let l2 = lam * lam;
    let nf = n as f64;
    let rn = nf.sqrt();
    let rn1 = (nf + 1.0).sqrt();
    Ok(match axis {
        DriveAxis::Resonator => {
            let lo = rn * (1.0 + l2 * (nf - 1.0));
            let hi = rn1 * (1.0 + l2 * (nf + 2.0));
            DoubletElements {
                plus_plus: c1 * c2 * lo + s1 * s2 * hi - lam * s1 * c2,
                // The (−,−) element carries 1 − λ²(n+2) where the others
                // carry 1 + λ²(n+2); kept as published.
                minus_minus: s1 * s2 * lo + c1 * c2 * rn1 * (1.0 - l2 * (nf + 2.0)) + lam * s2 * c1,
                plus_minus: c1 * s2 * lo - s1 * c2 * hi - lam * s2 * s1,
                minus_plus: s1 * c2 * lo - c1 * s2 * hi + lam * c2 * c1,
            }
        }
        DriveAxis::Qubit => DoubletElements {
            plus_plus: s1 * c2 + lam * (rn * c1 * c2 - rn1 * s1 * s2),
            minus_minus: -c1 * s2 + lam * (rn * s1 * s2 - rn1 * c1 * c2),
            plus_minus: s1 * s2 + lam * (rn * c1 * s2 + rn1 * s1 * c2),
            minus_plus: -c1 * c2 + lam * (rn * s1 * c2 + rn1 * c1 * s2),
        },
    })
}

fn half_angle(family: &DoubletFamily, n: usize) -> Result<(f64, f64)> {
    let half = 0.5 * family.doublet(n)?.phi_n;
    Ok((half.cos(), half.sin()))
}

/// Analytic resonator-drive element `⟨n,from|a+a†|n+1,to⟩`.
pub fn bs_element_resonator(params: &SystemParams, n: usize, from: Sign, to: Sign) -> Result<f64> {
    let family = DoubletFamily::bloch_siegert(params, MixingConvention::default(), Guard::Enforce)?;
    Ok(analytic_elements(&family, n, DriveAxis::Resonator)?.get(from, to))
}

/// Analytic qubit-drive element `⟨n,from|σx|n+1,to⟩`.
pub fn bs_element_qubit(params: &SystemParams, n: usize, from: Sign, to: Sign) -> Result<f64> {
    let family = DoubletFamily::bloch_siegert(params, MixingConvention::default(), Guard::Enforce)?;
    Ok(analytic_elements(&family, n, DriveAxis::Qubit)?.get(from, to))
}

/// Rotating-wave counterparts of [`bs_element_resonator`].
pub fn jc_element_resonator(params: &SystemParams, n: usize, from: Sign, to: Sign) -> Result<f64> {
    let family = DoubletFamily::jaynes_cummings(params, MixingConvention::default())?;
    Ok(analytic_elements(&family, n, DriveAxis::Resonator)?.get(from, to))
}

pub fn jc_element_qubit(params: &SystemParams, n: usize, from: Sign, to: Sign) -> Result<f64> {
    let family = DoubletFamily::jaynes_cummings(params, MixingConvention::default())?;
    Ok(analytic_elements(&family, n, DriveAxis::Qubit)?.get(from, to))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementOptions {
    /// Truncation for numeric models.
    pub n_fock: usize,
    pub mixing: MixingConvention,
    pub guard: Guard,
}

impl Default for ElementOptions {
    fn default() -> Self {
        Self {
            n_fock: 6,
            mixing: MixingConvention::default(),
            guard: Guard::Enforce,
        }
    }
}

/// A way of obtaining doublet-to-doublet matrix elements.
pub trait ElementModel: Send + Sync {
    fn name(&self) -> &'static str;
    fn doublet_elements(
        &self,
        params: &SystemParams,
        n: usize,
        axis: DriveAxis,
        opts: &ElementOptions,
    ) -> Result<DoubletElements>;
}

/// Moduli of elements between labelled exact Rabi eigenstates.
pub struct NumericRabi;

impl ElementModel for NumericRabi {
    fn name(&self) -> &'static str {
        "rabi"
    }
    fn doublet_elements(
        &self,
        params: &SystemParams,
        n: usize,
        axis: DriveAxis,
        opts: &ElementOptions,
    ) -> Result<DoubletElements> {
        let space = fock_space(opts.n_fock)?;
        let es = eigensystem(&rabi_hamiltonian(params, &space))?;
        let es = label_dressed_with(&es, params, &space, opts.guard)?;
        let op = drive_operator(&space, axis);
        let el = |from: Sign, to: Sign| -> Result<f64> {
            let i = es.index_of(DressedLabel::doublet(n, from))?;
            let j = es.index_of(DressedLabel::doublet(n + 1, to))?;
            Ok(numeric_matrix_element(&es, &op, i, j)?.norm())
        };
        Ok(DoubletElements {
            plus_plus: el(Sign::Plus, Sign::Plus)?,
            plus_minus: el(Sign::Plus, Sign::Minus)?,
            minus_plus: el(Sign::Minus, Sign::Plus)?,
            minus_minus: el(Sign::Minus, Sign::Minus)?,
        })
    }
}

pub struct AnalyticBlochSiegert;

impl ElementModel for AnalyticBlochSiegert {
    fn name(&self) -> &'static str {
        "bs"
    }
    fn doublet_elements(
        &self,
        params: &SystemParams,
        n: usize,
        axis: DriveAxis,
        opts: &ElementOptions,
    ) -> Result<DoubletElements> {
        let family = DoubletFamily::bloch_siegert(params, opts.mixing, opts.guard)?;
        analytic_elements(&family, n, axis)
    }
}

pub struct AnalyticJaynesCummings;

impl ElementModel for AnalyticJaynesCummings {
    fn name(&self) -> &'static str {
        "jc"
    }
    fn doublet_elements(
        &self,
        params: &SystemParams,
        n: usize,
        axis: DriveAxis,
        opts: &ElementOptions,
    ) -> Result<DoubletElements> {
        let family = DoubletFamily::jaynes_cummings(params, opts.mixing)?;
        analytic_elements(&family, n, axis)
    }
}

/// Registry holding `rabi` (numeric), `bs` and `jc` (analytic).
pub fn element_registry() -> Registry<dyn ElementModel> {
    let mut r: Registry<dyn ElementModel> = Registry::new("element model");
    r.register("rabi", Arc::new(NumericRabi))
        .register("bs", Arc::new(AnalyticBlochSiegert))
        .register("jc", Arc::new(AnalyticJaynesCummings));
    r
}

/// `(g/ω_r, |T(1−→2−)| / |T(1−→2+)|)` for each coupling ratio.
pub fn ratio_curve(
    template: &SystemParams,
    g_over_wr: &[f64],
    axis: DriveAxis,
    model: &dyn ElementModel,
    opts: &ElementOptions,
) -> Result<Vec<(f64, f64)>> {
    g_over_wr
        .iter()
        .map(|&x| {
            if !(x > 0.0) {
                return Err(Error::Domain(format!("g/omega_r must be positive, got {x}")));
            }
            let params = template.with_g(x * template.omega_r);
            let el = model.doublet_elements(&params, 1, axis, opts)?;
            Ok((x, el.selection_ratio()))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionRow {
    pub from: usize,
    pub to: usize,
    pub from_label: Option<DressedLabel>,
    pub to_label: Option<DressedLabel>,
    /// `E_to − E_from`, rad/s.
    pub frequency: f64,
    /// `|⟨from|a+a†|to⟩|`.
    pub resonator: f64,
    /// `|⟨from|σx|to⟩|`.
    pub sigma_x: f64,
    /// `|⟨from|σz|to⟩|`.
    pub sigma_z: f64,
    /// Whether transverse driving may connect the pair at the symmetry
    /// point, i.e. whether the two parities differ. `None` when either state
    /// has no label or measured parity.
    pub parity_allowed: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionTable {
    pub rows: Vec<TransitionRow>,
}

impl TransitionTable {
    pub fn find(&self, from: DressedLabel, to: DressedLabel) -> Option<&TransitionRow> {
        self.rows
            .iter()
            .find(|r| r.from_label == Some(from) && r.to_label == Some(to))
    }
}

/// All upward transitions among the lowest `max_level` eigenstates.
pub fn transition_table(es: &EigenSystem, space: &HilbertSpace, max_level: usize) -> Result<TransitionTable> {
    if es.len() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: es.len(),
        });
    }
    let top = max_level.min(es.len());
    let x = es.transform(&position(space));
    let sx = es.transform(&pauli(space, Axis::X));
    let sz = es.transform(&pauli(space, Axis::Z));
    let parity = |i: usize| es.label(i).map(DressedLabel::parity).or(es.parity(i));

    let mut rows = Vec::new();
    for i in 0..top {
        for j in (i + 1)..top {
            let frequency = es.energies()[j] - es.energies()[i];
            if frequency <= 0.0 {
                continue;
            }
            let parity_allowed = match (parity(i), parity(j)) {
                (Some(a), Some(b)) => Some(a != b),
                _ => None,
            };
            rows.push(TransitionRow {
                from: i,
                to: j,
                from_label: es.label(i),
                to_label: es.label(j),
                frequency,
                resonator: x.get(i, j).norm(),
                sigma_x: sx.get(i, j).norm(),
                sigma_z: sz.get(i, j).norm(),
                parity_allowed,
            });
        }
    }
    Ok(TransitionTable { rows })
}

/// `(n, ω_{n−}/n)` where `ω_{n−}` is the `(0,g) → (n,−)` transition.
pub fn multiphoton_scaling_check(es: &EigenSystem, n_max: usize) -> Result<Vec<(usize, f64)>> {
    let ground = es.energy_of(DressedLabel::Ground)?;
    (1..=n_max)
        .map(|n| {
            let e = es.energy_of(DressedLabel::doublet(n, Sign::Minus))?;
            Ok((n, (e - ground) / n as f64))
        })
        .collect()
}

/// `ω_r − g·sinθ/√2`, the expected multi-photon line spacing.
pub fn multiphoton_reference(params: &SystemParams) -> f64 {
    params.omega_r - params.transverse_coupling() / std::f64::consts::SQRT_2
}
