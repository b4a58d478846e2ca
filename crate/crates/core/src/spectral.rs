//! Hermitian eigenvalues and singular values by cyclic complex Jacobi
//! rotations.

use alloc::vec::Vec;
use core::ops::Deref;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ZERO};

/// Relative Hermiticity tolerance: `|h_ij - conj(h_ji)| <= HERMITIAN_TOL * max|h|`.
pub const HERMITIAN_TOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 64;
/// Off-diagonal Frobenius norm, relative to `||H||_F`, at which sweeps stop.
const OFF_DIAGONAL_TOL: f64 = 1e-15;
/// Column pairs with `|<b_p, b_q>| <= ORTHOGONALITY_TOL * |b_p| |b_q|` are left alone.
const ORTHOGONALITY_TOL: f64 = 1e-15;

/// Singular values sorted descending, all nonnegative.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularSpectrum(Vec<f64>);

impl SingularSpectrum {
    /// Sorts descending; negative or non-finite values are a logic error.
    pub fn new(mut values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|v| *v >= 0.0 && v.is_finite()));
        sort_descending(&mut values);
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Largest singular value (0 for an empty spectrum).
    pub fn largest(&self) -> f64 {
        self.0.first().copied().unwrap_or(0.0)
    }
}

impl Deref for SingularSpectrum {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

pub(crate) fn sort_descending(values: &mut [f64]) {
    values.sort_by(|a, b| b.total_cmp(a));
}

/// Checks `h` is square and Hermitian within [`HERMITIAN_TOL`].
pub fn check_hermitian(h: &ComplexMatrix) -> Result<()> {
    h.ensure_square()?;
    let tolerance = HERMITIAN_TOL * h.max_abs();
    let deviation = h.hermitian_deviation();
    if deviation > tolerance {
        return Err(Error::NotHermitian { deviation, tolerance });
    }
    Ok(())
}

/// Real eigenvalues of a Hermitian matrix, sorted descending.
///
/// Inputs that fail the Hermiticity check are rejected rather than
/// symmetrized.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    check_hermitian(h)?;
    let mut values = jacobi_eigenvalues(h.clone());
    sort_descending(&mut values);
    Ok(values)
}

/// Singular values of `a` by one-sided Jacobi: the columns of the taller
/// orientation (`a` or `a^†`) are rotated until mutually orthogonal, and the
/// singular values are their norms. Each rotation is the Hermitian Jacobi
/// rotation of the 2x2 Gram block, applied to the columns themselves, so
/// zero singular values come out at rounding level rather than as square
/// roots of rounding noise.
pub fn singular_values(a: &ComplexMatrix) -> SingularSpectrum {
    let tall = if a.rows() >= a.cols() { a.clone() } else { a.adjoint() };
    SingularSpectrum::new(one_sided_jacobi(tall))
}

/// Sum of singular values.
pub fn trace_norm(a: &ComplexMatrix) -> f64 {
    singular_values(a).sum()
}

/// Cyclic Jacobi on a Hermitian matrix. Each rotation first removes the
/// phase of `h_pq` with a diagonal unitary, then applies a real plane
/// rotation that zeroes the pair.
fn jacobi_eigenvalues(mut h: ComplexMatrix) -> Vec<f64> {
    let n = h.rows();
    for i in 0..n {
        h[(i, i)].im = 0.0;
    }
    let norm = h.frobenius_norm();
    if norm == 0.0 {
        return (0..n).map(|_| 0.0).collect();
    }
    let stop = OFF_DIAGONAL_TOL * norm;
    // Entries this small are dropped instead of rotated.
    let negligible = f64::EPSILON * f64::EPSILON * norm;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&h) <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut h, p, q, negligible);
            }
        }
    }
    (0..n).map(|i| h[(i, i)].re).collect()
}

/// Column norms after orthogonalizing the columns of `b` (rows >= cols).
fn one_sided_jacobi(mut b: ComplexMatrix) -> Vec<f64> {
    let (rows, cols) = (b.rows(), b.cols());
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, ZERO);
                for k in 0..rows {
                    let (bp, bq) = (b[(k, p)], b[(k, q)]);
                    alpha += bp.norm_sqr();
                    beta += bq.norm_sqr();
                    gamma += bp.conj() * bq;
                }
                let magnitude = gamma.norm();
                if magnitude == 0.0 || magnitude <= ORTHOGONALITY_TOL * libm::sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                let (c, s) = jacobi_cos_sin(alpha, beta, magnitude);
                let w_conj = (gamma / magnitude).conj();
                for k in 0..rows {
                    let (bp, bq) = (b[(k, p)], b[(k, q)]);
                    b[(k, p)] = bp * c - bq * (w_conj * s);
                    b[(k, q)] = bp * s + bq * (w_conj * c);
                }
            }
        }
        if !rotated {
            break;
        }
    }
    (0..cols)
        .map(|j| libm::sqrt((0..rows).map(|k| b[(k, j)].norm_sqr()).sum::<f64>()))
        .collect()
}

/// `(c, s)` of the real rotation zeroing `[[app, mag], [mag, aqq]]`, with
/// `t = s/c` the smaller root.
fn jacobi_cos_sin(app: f64, aqq: f64, magnitude: f64) -> (f64, f64) {
    let t = rotation_tangent(app, aqq, magnitude);
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    (c, t * c)
}

fn rotation_tangent(app: f64, aqq: f64, magnitude: f64) -> f64 {
    let theta = (aqq - app) / (2.0 * magnitude);
    if theta >= 0.0 {
        1.0 / (theta + libm::sqrt(theta * theta + 1.0))
    } else {
        -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
    }
}

fn off_diagonal_norm(h: &ComplexMatrix) -> f64 {
    let n = h.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            acc += 2.0 * h[(i, j)].norm_sqr();
        }
    }
    libm::sqrt(acc)
}

fn rotate(h: &mut ComplexMatrix, p: usize, q: usize, negligible: f64) {
    let b = h[(p, q)];
    let magnitude = b.norm();
    if magnitude <= negligible {
        h[(p, q)] = ZERO;
        h[(q, p)] = ZERO;
        return;
    }
    let phase = b / magnitude;
    let app = h[(p, p)].re;
    let aqq = h[(q, q)].re;

    let t = rotation_tangent(app, aqq, magnitude);
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;

    // U acts on coordinates (p, q) as [[c, s], [-s w*, c w*]] with w the phase of h_pq.
    let w_conj = phase.conj();
    let n = h.rows();
    for k in 0..n {
        let hkp = h[(k, p)];
        let hkq = h[(k, q)];
        h[(k, p)] = hkp * c - hkq * (w_conj * s);
        h[(k, q)] = hkp * s + hkq * (w_conj * c);
    }
    for k in 0..n {
        let hpk = h[(p, k)];
        let hqk = h[(q, k)];
        h[(p, k)] = hpk * c - hqk * (phase * s);
        h[(q, k)] = hpk * s + hqk * (phase * c);
    }
    h[(p, p)] = Complex64::new(app - t * magnitude, 0.0);
    h[(q, q)] = Complex64::new(aqq + t * magnitude, 0.0);
    h[(p, q)] = ZERO;
    h[(q, p)] = ZERO;
}
