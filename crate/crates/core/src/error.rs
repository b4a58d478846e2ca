use core::fmt;

use crate::bounds::Feasibility;

/// Errors raised by the numeric routines in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e}, tolerance {tolerance:e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("expected {expected_rows}x{expected_cols} data, found {found}")]
    Shape {
        expected_rows: usize,
        expected_cols: usize,
        found: usize,
    },

    #[error("matrix is {size}x{size} but dims ({m}, {n}) require {expected}x{expected}")]
    DimsMismatch {
        m: usize,
        n: usize,
        size: usize,
        expected: usize,
    },

    #[error("not a density matrix: {0}")]
    NotDensity(DensityViolation),

    #[error("order {ell} outside 1..={max}")]
    BadOrder { ell: usize, max: usize },

    #[error("entry {index} is negative ({value:e})")]
    NegativeEntry { index: usize, value: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("bad dimensions ({m}, {n}): {reason}")]
    BadDims {
        m: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("dims ({m}, {n}) outside the regime of this construction: {reason}")]
    Regime {
        m: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("construction infeasible: {0}")]
    InfeasibleConstruction(Feasibility),

    #[error("search evaluated no feasible candidate")]
    NoFeasibleCandidate,
}

/// Which density-matrix condition failed, with the measured trace and
/// minimum eigenvalue (NaN when there was no matrix to measure).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityViolation {
    pub reason: &'static str,
    pub trace: f64,
    pub min_eigenvalue: f64,
}

impl fmt::Display for DensityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (trace {}, min eigenvalue {})",
            self.reason, self.trace, self.min_eigenvalue
        )
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
