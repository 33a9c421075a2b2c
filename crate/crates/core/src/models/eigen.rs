// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{DoubletFamily, Guard, MixingConvention, SystemParams};
use crate::operators::{parity_operator, Expectation, HilbertSpace, Operator, StateVector};
use crate::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-10;
const PARITY_TOL: f64 = 1e-8;
const LABEL_TIE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DressedLabel {
    Ground,
    Doublet { n: usize, sign: Sign },
}

impl DressedLabel {
    pub fn doublet(n: usize, sign: Sign) -> Self {
        DressedLabel::Doublet { n, sign }
    }

    /// Eigenvalue of the parity operator for this dressed state.
    pub fn parity(self) -> i8 {
        match self {
            DressedLabel::Ground => 1,
            DressedLabel::Doublet { n, .. } => {
                if n % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

impl fmt::Display for DressedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DressedLabel::Ground => write!(f, "(0,g)"),
            DressedLabel::Doublet { n, sign } => write!(f, "({n},{})", sign.symbol()),
        }
    }
}

/// Ascending eigenvalues and orthonormal eigenvectors (columns) of a
/// Hermitian operator, optionally with dressed-state labels and parities.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    energies: Vec<f64>,
    vectors: DMatrix<Complex64>,
    labels: Vec<Option<DressedLabel>>,
    parities: Vec<Option<i8>>,
}

impl EigenSystem {
    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// Eigenvectors as columns, in the product basis.
    pub fn vectors(&self) -> &DMatrix<Complex64> {
        &self.vectors
    }

    pub fn state(&self, index: usize) -> StateVector {
        StateVector::new(self.vectors.column(index).into_owned()).expect("unit eigenvector")
    }

    pub fn labels(&self) -> &[Option<DressedLabel>] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> Option<DressedLabel> {
        self.labels.get(index).copied().flatten()
    }

    pub fn parities(&self) -> &[Option<i8>] {
        &self.parities
    }

    pub fn parity(&self, index: usize) -> Option<i8> {
        self.parities.get(index).copied().flatten()
    }

    pub fn index_of(&self, label: DressedLabel) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| *l == Some(label))
            .ok_or_else(|| Error::MissingLabel(label.to_string()))
    }

    pub fn energy_of(&self, label: DressedLabel) -> Result<f64> {
        Ok(self.energies[self.index_of(label)?])
    }

    /// `E_to − E_from` for two labelled states.
    pub fn transition(&self, from: DressedLabel, to: DressedLabel) -> Result<f64> {
        Ok(self.energy_of(to)? - self.energy_of(from)?)
    }

    /// Operator expressed in this eigenbasis.
    pub fn transform(&self, op: &Operator) -> Operator {
        op.in_basis(&self.vectors)
    }
}

/// Diagonalizes a Hermitian operator. Each eigenvector is rotated so that its
/// largest-magnitude amplitude is real and positive.
pub fn eigensystem(h: &Operator) -> Result<EigenSystem> {
    let defect = h.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let dim = h.dim();
    let sym = (h.matrix() + h.matrix().adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(sym);

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let mut vectors = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    let mut energies = Vec::with_capacity(dim);
    for (col, &src) in order.iter().enumerate() {
        energies.push(eig.eigenvalues[src]);
        let v = eig.eigenvectors.column(src);
        let pivot = v
            .iter()
            .enumerate()
            .fold((0, -1.0), |best, (i, z)| if z.norm() > best.1 + 1e-12 { (i, z.norm()) } else { best })
            .0;
        let phase = v[pivot].conj() / v[pivot].norm();
        for r in 0..dim {
            vectors[(r, col)] = v[r] * phase;
        }
    }
    Ok(EigenSystem {
        energies,
        vectors,
        labels: vec![None; dim],
        parities: vec![None; dim],
    })
}

/// Labels eigenstates by maximum overlap with the analytic Bloch-Siegert
/// doublets `(n, ±)` for `1 ≤ n ≤ n_fock − 2`, and the lowest state as the
/// ground state. At the symmetry point parities are also measured.
pub fn label_dressed(es: &EigenSystem, params: &SystemParams, space: &HilbertSpace) -> Result<EigenSystem> {
    label_dressed_with(es, params, space, Guard::Enforce)
}

pub fn label_dressed_with(
    es: &EigenSystem,
    params: &SystemParams,
    space: &HilbertSpace,
    guard: Guard,
) -> Result<EigenSystem> {
    if es.len() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: es.len(),
        });
    }
    let family = DoubletFamily::bloch_siegert(params, MixingConvention::BoxConsistent, guard)?;
    let mut labels: Vec<Option<DressedLabel>> = vec![None; es.len()];
    labels[0] = Some(DressedLabel::Ground);

    for n in 1..space.n_fock().saturating_sub(1) {
        let (plus, minus) = family.dressed_states(n, space)?;
        for (sign, analytic) in [(Sign::Plus, plus), (Sign::Minus, minus)] {
            let label = DressedLabel::doublet(n, sign);
            let mut best = (0usize, -1.0f64);
            let mut runner_up = -1.0f64;
            for i in 0..es.len() {
                let ov = es.vectors.column(i).dotc(analytic.amplitudes()).norm_sqr();
                if ov > best.1 {
                    runner_up = best.1;
                    best = (i, ov);
                } else if ov > runner_up {
                    runner_up = ov;
                }
            }
            if best.1 - runner_up < LABEL_TIE_TOL {
                return Err(Error::AmbiguousLabel(format!(
                    "{label}: overlaps {:.8} and {:.8} tie",
                    best.1, runner_up
                )));
            }
            if let Some(existing) = labels[best.0] {
                return Err(Error::AmbiguousLabel(format!(
                    "{label} and {existing} both claim eigenstate {}",
                    best.0
                )));
            }
            labels[best.0] = Some(label);
        }
    }

    let mut parities = vec![None; es.len()];
    if params.qubit().is_symmetry_point() {
        let p = parity_operator(space);
        for (i, slot) in parities.iter_mut().enumerate() {
            let value = es.state(i).expectation(&p)?.re;
            if (value - 1.0).abs() < PARITY_TOL {
                *slot = Some(1);
            } else if (value + 1.0).abs() < PARITY_TOL {
                *slot = Some(-1);
            } else {
                return Err(Error::ParityUndefined { index: i, value });
            }
        }
    }

    Ok(EigenSystem {
        energies: es.energies.clone(),
        vectors: es.vectors.clone(),
        labels,
        parities,
    })
}
