// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! Truncated qubit ⊗ Fock space and its elementary operators.
//!
//! Basis ordering is qubit-major: `index = qubit × n_fock + fock`, with
//! qubit 0 the ground state `g` and qubit 1 the excited state `e` of the
//! bare qubit at the chosen flux. `σz|e⟩ = +|e⟩`.

use std::ops::{Add, Mul, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Qubit {
    Ground,
    Excited,
}

impl Qubit {
    pub fn index(self) -> usize {
        match self {
            Qubit::Ground => 0,
            Qubit::Excited => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertSpace {
    n_fock: usize,
}

impl HilbertSpace {
    pub fn new(n_fock: usize) -> Result<Self> {
        if n_fock < 2 {
            return Err(Error::InvalidTruncation(n_fock));
        }
        Ok(Self { n_fock })
    }

    pub fn n_fock(&self) -> usize {
        self.n_fock
    }

    pub fn dim(&self) -> usize {
        2 * self.n_fock
    }

    /// Product-basis index of `|qubit, fock⟩`.
    pub fn index(&self, qubit: Qubit, fock: usize) -> usize {
        debug_assert!(fock < self.n_fock);
        qubit.index() * self.n_fock + fock
    }

    /// Inverse of [`HilbertSpace::index`].
    pub fn decompose(&self, index: usize) -> (Qubit, usize) {
        let qubit = if index < self.n_fock {
            Qubit::Ground
        } else {
            Qubit::Excited
        };
        (qubit, index % self.n_fock)
    }

    pub fn basis_state(&self, qubit: Qubit, fock: usize) -> Result<StateVector> {
        if fock >= self.n_fock {
            return Err(Error::IndexOutOfRange {
                index: fock,
                dim: self.n_fock,
            });
        }
        let mut v = DVector::from_element(self.dim(), ZERO);
        v[self.index(qubit, fock)] = ONE;
        Ok(StateVector(v))
    }

    pub fn identity(&self) -> Operator {
        Operator(DMatrix::identity(self.dim(), self.dim()))
    }

    /// Lift a 2×2 qubit matrix and an `n_fock`×`n_fock` oscillator matrix to
    /// their tensor product.
    fn kron(&self, qubit: &DMatrix<Complex64>, fock: &DMatrix<Complex64>) -> Operator {
        Operator(qubit.kronecker(fock))
    }
}

pub fn fock_space(n_fock: usize) -> Result<HilbertSpace> {
    HilbertSpace::new(n_fock)
}

/// Dense complex matrix acting on a [`HilbertSpace`].
#[derive(Debug, Clone, PartialEq)]
pub struct Operator(DMatrix<Complex64>);

impl Operator {
    pub fn from_matrix(m: DMatrix<Complex64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        Ok(Self(m))
    }

    pub fn from_real(m: &DMatrix<f64>) -> Result<Self> {
        Self::from_matrix(m.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::from_element(dim, dim, ZERO))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self(self.0.map(|z| z * factor))
    }

    pub fn commutator(&self, other: &Operator) -> Self {
        Self(&self.0 * &other.0 - &other.0 * &self.0)
    }

    /// `‖O − O†‖_F / ‖O‖_F`, zero for the zero operator.
    pub fn hermiticity_defect(&self) -> f64 {
        let norm = self.0.norm();
        if norm == 0.0 {
            return 0.0;
        }
        (&self.0 - self.0.adjoint()).norm() / norm
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.norm()
    }

    /// Matrix of this operator in the basis given by the columns of `basis`:
    /// `B† O B`.
    pub fn in_basis(&self, basis: &DMatrix<Complex64>) -> Self {
        Self(basis.adjoint() * &self.0 * basis)
    }

    pub fn apply(&self, state: &StateVector) -> Result<DVector<Complex64>> {
        check_dim(self.dim(), state.dim())?;
        Ok(&self.0 * &state.0)
    }

    /// `⟨bra|O|ket⟩` for raw amplitude vectors.
    pub fn sandwich(&self, bra: &DVector<Complex64>, ket: &DVector<Complex64>) -> Complex64 {
        bra.dotc(&(&self.0 * ket))
    }
}

impl Add for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        Operator(&self.0 + &rhs.0)
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        Operator(&self.0 - &rhs.0)
    }
}

impl Mul for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        Operator(&self.0 * &rhs.0)
    }
}

impl Mul<&Operator> for f64 {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        rhs.scale(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector(DVector<Complex64>);

impl StateVector {
    /// Normalizes the amplitudes; errors on the zero vector.
    pub fn new(amplitudes: DVector<Complex64>) -> Result<Self> {
        let norm = amplitudes.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::Domain("state vector has zero or non-finite norm".into()));
        }
        Ok(Self(amplitudes / Complex64::new(norm, 0.0)))
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(DVector::from_iterator(
            amplitudes.len(),
            amplitudes.iter().map(|&x| Complex64::new(x, 0.0)),
        ))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.dotc(&other.0))
    }

    pub fn projector(&self) -> DensityMatrix {
        DensityMatrix(&self.0 * self.0.adjoint())
    }
}

/// Hermitian, unit-trace state. Positivity is not enforced.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(DMatrix<Complex64>);

impl DensityMatrix {
    pub const HERMITIAN_TOL: f64 = 1e-10;
    pub const TRACE_TOL: f64 = 1e-9;

    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        let asym = max_abs(&(&m - m.adjoint()));
        if asym > Self::HERMITIAN_TOL {
            return Err(Error::NotHermitian(asym));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > Self::TRACE_TOL || tr.im.abs() > Self::TRACE_TOL {
            return Err(Error::Domain(format!("density matrix trace {tr} is not 1")));
        }
        Ok(Self(m))
    }

    /// Wraps without validation; used inside integrators where the
    /// invariants are tracked as diagnostics instead.
    pub fn from_matrix_unchecked(m: DMatrix<Complex64>) -> Self {
        Self(m)
    }

    pub fn from_populations(pops: &[f64]) -> Result<Self> {
        let n = pops.len();
        let m = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(pops[i], 0.0)
            } else {
                ZERO
            }
        });
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn population(&self, index: usize) -> f64 {
        self.0[(index, index)].re
    }

    pub fn populations(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.population(i)).collect()
    }

    /// Largest entry of `|ρ − ρ†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        max_abs(&(&self.0 - self.0.adjoint()))
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.0)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// `½‖ρ − σ‖₁`.
    pub fn trace_distance(&self, other: &DensityMatrix) -> Result<f64> {
        check_dim(self.dim(), other.dim())?;
        Ok(trace_norm_half(&(&self.0 - &other.0)))
    }

    /// Same state in the basis given by the columns of `basis`.
    pub fn in_basis(&self, basis: &DMatrix<Complex64>) -> Self {
        Self(basis.adjoint() * &self.0 * basis)
    }

    /// Inverse of [`DensityMatrix::in_basis`]: `B ρ B†`.
    pub fn from_basis(&self, basis: &DMatrix<Complex64>) -> Self {
        Self(basis * &self.0 * basis.adjoint())
    }
}

/// Largest entry modulus.
pub(crate) fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Half the trace norm of a Hermitian matrix.
pub(crate) fn trace_norm_half(m: &DMatrix<Complex64>) -> f64 {
    0.5 * hermitian_eigenvalues(m).iter().map(|x| x.abs()).sum::<f64>()
}

fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    let sym = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    sym.symmetric_eigenvalues().iter().copied().collect()
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub trait Expectation {
    fn expectation(&self, op: &Operator) -> Result<Complex64>;
}

impl Expectation for StateVector {
    fn expectation(&self, op: &Operator) -> Result<Complex64> {
        check_dim(op.dim(), self.dim())?;
        Ok(op.sandwich(&self.0, &self.0))
    }
}

impl Expectation for DensityMatrix {
    fn expectation(&self, op: &Operator) -> Result<Complex64> {
        check_dim(op.dim(), self.dim())?;
        // Tr(ρO) without forming the product.
        let mut acc = ZERO;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                acc += self.0[(i, j)] * op.0[(j, i)];
            }
        }
        Ok(acc)
    }
}

/// `⟨ψ|O|ψ⟩` or `Tr(ρO)`.
pub fn expectation<S: Expectation + ?Sized>(op: &Operator, state: &S) -> Result<Complex64> {
    state.expectation(op)
}

fn fock_ladder(n_fock: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(n_fock, n_fock, |i, j| {
        if j == i + 1 {
            Complex64::new((j as f64).sqrt(), 0.0)
        } else {
            ZERO
        }
    })
}

pub fn annihilation(space: &HilbertSpace) -> Operator {
    space.kron(&DMatrix::identity(2, 2), &fock_ladder(space.n_fock))
}

pub fn creation(space: &HilbertSpace) -> Operator {
    annihilation(space).adjoint()
}

pub fn number(space: &HilbertSpace) -> Operator {
    let diag = DMatrix::from_fn(space.n_fock, space.n_fock, |i, j| {
        if i == j {
            Complex64::new(i as f64, 0.0)
        } else {
            ZERO
        }
    });
    space.kron(&DMatrix::identity(2, 2), &diag)
}

/// `a + a†`.
pub fn position(space: &HilbertSpace) -> Operator {
    let a = annihilation(space);
    &a + &a.adjoint()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

pub fn pauli(space: &HilbertSpace, axis: Axis) -> Operator {
    let i = Complex64::i();
    // Rows/columns ordered (g, e).
    let q = match axis {
        Axis::X => DMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]),
        Axis::Y => DMatrix::from_row_slice(2, 2, &[ZERO, i, -i, ZERO]),
        Axis::Z => DMatrix::from_row_slice(2, 2, &[-ONE, ZERO, ZERO, ONE]),
    };
    space.kron(&q, &DMatrix::identity(space.n_fock, space.n_fock))
}

/// `σ+ = |e⟩⟨g|`.
pub fn sigma_plus(space: &HilbertSpace) -> Operator {
    let q = DMatrix::from_row_slice(2, 2, &[ZERO, ZERO, ONE, ZERO]);
    space.kron(&q, &DMatrix::identity(space.n_fock, space.n_fock))
}

/// `exp(iπ(½(σz + 1) + a†a))`, diagonal with entries `(−1)^(qubit + fock)`.
pub fn parity_operator(space: &HilbertSpace) -> Operator {
    let dim = space.dim();
    Operator(DMatrix::from_fn(dim, dim, |r, c| {
        if r != c {
            return ZERO;
        }
        let (q, n) = space.decompose(r);
        if (q.index() + n) % 2 == 0 {
            ONE
        } else {
            -ONE
        }
    }))
}
