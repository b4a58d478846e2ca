//! Bipartite index maps: row-major vec, realignment, partial transpose,
//! Kronecker product, and subsystem swap.
//!
//! A composite index `(r, i)` with `r` in `0..m` (coarse, first factor) and
//! `i` in `0..n` (fine, second factor) maps to `r * n + i`. A density matrix
//! is the `m x m` grid of `n x n` blocks `X_rs`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{DensityViolation, Error, Result};
use crate::matrix::ComplexMatrix;
use crate::spectral::{check_hermitian, hermitian_eigenvalues};

/// Absolute tolerance on `trace(rho) - 1`.
pub const TRACE_TOL: f64 = 1e-10;
/// Smallest eigenvalue accepted as positive semidefinite.
pub const PSD_TOL: f64 = 1e-9;

/// Subsystem dimensions `(m, n)` of a state on `C^m ⊗ C^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BipartiteDims {
    pub m: usize,
    pub n: usize,
}

impl BipartiteDims {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::BadDims {
                m,
                n,
                reason: "subsystem dimensions must be positive",
            });
        }
        Ok(Self { m, n })
    }

    #[inline]
    pub fn total(&self) -> usize {
        self.m * self.n
    }

    pub fn swapped(&self) -> Self {
        Self { m: self.n, n: self.m }
    }

    pub fn is_canonical(&self) -> bool {
        self.m <= self.n
    }

    /// Flat index of the composite `(coarse, fine)` pair.
    #[inline]
    pub fn index(&self, coarse: usize, fine: usize) -> usize {
        debug_assert!(coarse < self.m && fine < self.n);
        coarse * self.n + fine
    }
}

/// A validated `mn x mn` density matrix: Hermitian, unit trace, and PSD
/// within [`TRACE_TOL`] and [`PSD_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: BipartiteDims,
    mat: ComplexMatrix,
    min_eigenvalue: f64,
}

impl DensityMatrix {
    pub fn new(dims: BipartiteDims, mat: ComplexMatrix) -> Result<Self> {
        let size = mat.ensure_square()?;
        if size != dims.total() {
            return Err(Error::DimsMismatch {
                m: dims.m,
                n: dims.n,
                size,
                expected: dims.total(),
            });
        }
        check_hermitian(&mat)?;
        let trace = mat.trace().re;
        let min_eigenvalue = hermitian_eigenvalues(&mat)?.last().copied().unwrap_or(0.0);
        let violation = |reason| {
            Err(Error::NotDensity(DensityViolation {
                reason,
                trace,
                min_eigenvalue,
            }))
        };
        if (trace - 1.0).abs() > TRACE_TOL {
            return violation("trace differs from 1");
        }
        if min_eigenvalue < -PSD_TOL {
            return violation("matrix is not positive semidefinite");
        }
        Ok(Self {
            dims,
            mat,
            min_eigenvalue,
        })
    }

    /// `|psi><psi| / <psi|psi>`.
    pub fn pure(dims: BipartiteDims, psi: &[Complex64]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotDensity(DensityViolation {
                reason: "state vector has zero or non-finite norm",
                trace: norm,
                min_eigenvalue: f64::NAN,
            }));
        }
        Self::new(dims, ComplexMatrix::outer(psi, psi).scale(1.0 / norm))
    }

    pub fn maximally_mixed(dims: BipartiteDims) -> Self {
        let mat = ComplexMatrix::identity(dims.total()).scale(1.0 / dims.total() as f64);
        Self::new(dims, mat).expect("maximally mixed state is valid")
    }

    /// `(1 - weight) * self + weight * other`; the mixture is revalidated.
    pub fn mix(&self, other: &Self, weight: f64) -> Result<Self> {
        if self.dims != other.dims {
            return Err(Error::DimsMismatch {
                m: self.dims.m,
                n: self.dims.n,
                size: other.mat.rows(),
                expected: self.dims.total(),
            });
        }
        Self::new(self.dims, self.mat.lincomb(1.0 - weight, &other.mat, weight))
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// Minimum eigenvalue measured during validation.
    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    /// Returns the state with `m <= n`, swapping subsystems if needed. The
    /// flag records whether a swap happened.
    pub fn into_canonical(self) -> (Self, bool) {
        if self.dims.is_canonical() {
            (self, false)
        } else {
            (swap_subsystems(&self), true)
        }
    }
}

/// Row-major flattening `(x_11, x_12, ..., x_1n, x_21, ...)`.
pub fn vec_row(x: &ComplexMatrix) -> Result<Vec<Complex64>> {
    x.ensure_square()?;
    Ok(x.as_slice().to_vec())
}

/// The `m^2 x n^2` realignment: row `(r, s)` is `vec_row(X_rs)`, i.e.
/// `R[(r,s), (i,j)] = rho[(r,i), (s,j)]`.
pub fn realign(rho: &DensityMatrix) -> ComplexMatrix {
    realign_unchecked(rho.dims, &rho.mat)
}

/// [`realign`] for an arbitrary `mn x mn` matrix (the map is linear).
pub fn realign_matrix(dims: BipartiteDims, mat: &ComplexMatrix) -> Result<ComplexMatrix> {
    let size = mat.ensure_square()?;
    if size != dims.total() {
        return Err(Error::DimsMismatch {
            m: dims.m,
            n: dims.n,
            size,
            expected: dims.total(),
        });
    }
    Ok(realign_unchecked(dims, mat))
}

fn realign_unchecked(dims: BipartiteDims, mat: &ComplexMatrix) -> ComplexMatrix {
    let BipartiteDims { m, n } = dims;
    ComplexMatrix::from_fn(m * m, n * n, |row, col| {
        let (r, s) = (row / m, row % m);
        let (i, j) = (col / n, col % n);
        mat[(dims.index(r, i), dims.index(s, j))]
    })
}

/// Transposes every `n x n` block: `T[(r,i), (s,j)] = rho[(r,j), (s,i)]`.
pub fn partial_transpose(rho: &DensityMatrix) -> ComplexMatrix {
    let dims = rho.dims;
    let size = dims.total();
    ComplexMatrix::from_fn(size, size, |row, col| {
        let (r, i) = (row / dims.n, row % dims.n);
        let (s, j) = (col / dims.n, col % dims.n);
        rho.mat[(dims.index(r, j), dims.index(s, i))]
    })
}

/// Kronecker product; `a` indexes the coarse blocks.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (br, bc) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(a.rows() * br, a.cols() * bc, |row, col| {
        a[(row / br, col / bc)] * b[(row % br, col % bc)]
    })
}

/// Exchanges the two factors: `rho'[(i,r), (j,s)] = rho[(r,i), (s,j)]`.
pub fn swap_subsystems(rho: &DensityMatrix) -> DensityMatrix {
    let dims = rho.dims;
    let swapped = dims.swapped();
    let size = dims.total();
    let mat = ComplexMatrix::from_fn(size, size, |row, col| {
        let (i, r) = (row / swapped.n, row % swapped.n);
        let (j, s) = (col / swapped.n, col % swapped.n);
        rho.mat[(dims.index(r, i), dims.index(s, j))]
    });
    // A permutation similarity preserves every validated property.
    DensityMatrix {
        dims: swapped,
        mat,
        min_eigenvalue: rho.min_eigenvalue,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{ONE, ZERO};
    use alloc::vec;

    fn bell() -> DensityMatrix {
        DensityMatrix::pure(BipartiteDims::new(2, 2).unwrap(), &[ONE, ZERO, ZERO, ONE]).unwrap()
    }

    #[test]
    fn vec_row_examples() {
        let x = ComplexMatrix::from_real(2, 2, &[1.0, 2.0, 3.0, 4.0]).unwrap();
        let v: Vec<f64> = vec_row(&x).unwrap().iter().map(|z| z.re).collect();
        assert_eq!(v, vec![1.0, 2.0, 3.0, 4.0]);
        let i = Complex64::new(0.0, 1.0);
        let y = ComplexMatrix::from_row_major(2, 2, vec![ZERO, i, -i, ZERO]).unwrap();
        assert_eq!(vec_row(&y).unwrap(), vec![ZERO, i, -i, ZERO]);
        assert!(matches!(
            vec_row(&ComplexMatrix::zeros(1, 2)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn bell_realigns_to_half_identity() {
        let r = realign(&bell());
        assert!(r.max_abs_diff(&ComplexMatrix::identity(4).scale(0.5)) < 1e-15);
    }

    #[test]
    fn maximally_mixed_2x3_realignment_rows() {
        let rho = DensityMatrix::maximally_mixed(BipartiteDims::new(2, 3).unwrap());
        let r = realign(&rho);
        assert_eq!((r.rows(), r.cols()), (4, 9));
        let v: Vec<Complex64> = vec_row(&ComplexMatrix::identity(3))
            .unwrap()
            .iter()
            .map(|z| z / 6.0)
            .collect();
        for row in 0..4 {
            if row == 0 || row == 3 {
                assert_eq!(r.row(row), v.as_slice());
            } else {
                assert!(r.row(row).iter().all(|z| *z == ZERO));
            }
        }
    }

    #[test]
    fn tensor_block_placement() {
        assert_eq!(
            tensor(&ComplexMatrix::identity(2), &ComplexMatrix::identity(3)),
            ComplexMatrix::identity(6)
        );
        let e12 = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let t = tensor(&e12, &ComplexMatrix::identity(2));
        let expected = ComplexMatrix::from_real(
            4,
            4,
            &[
                0.0, 0.0, 1.0, 0.0, //
                0.0, 0.0, 0.0, 1.0, //
                0.0, 0.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, 0.0,
            ],
        )
        .unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn diagonal_state_unchanged_by_partial_transpose() {
        let dims = BipartiteDims::new(2, 2).unwrap();
        let rho = DensityMatrix::new(dims, ComplexMatrix::diagonal(&[0.1, 0.2, 0.3, 0.4])).unwrap();
        assert_eq!(&partial_transpose(&rho), rho.matrix());
    }

    #[test]
    fn validation_failures() {
        let dims = BipartiteDims::new(2, 2).unwrap();
        let low_trace = ComplexMatrix::identity(4).scale(0.9 / 4.0);
        match DensityMatrix::new(dims, low_trace) {
            Err(Error::NotDensity(v)) => assert!((v.trace - 0.9).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
        let indefinite = ComplexMatrix::diagonal(&[0.6, 0.6, 0.2, -0.4]);
        match DensityMatrix::new(dims, indefinite) {
            Err(Error::NotDensity(v)) => assert!((v.min_eigenvalue + 0.4).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            DensityMatrix::new(dims, ComplexMatrix::identity(6).scale(1.0 / 6.0)),
            Err(Error::DimsMismatch { expected: 4, size: 6, .. })
        ));
        assert!(BipartiteDims::new(0, 3).is_err());
    }

    #[test]
    fn canonical_orientation_swaps_when_needed() {
        let dims = BipartiteDims::new(3, 2).unwrap();
        let (rho, swapped) = DensityMatrix::maximally_mixed(dims).into_canonical();
        assert!(swapped);
        assert_eq!(rho.dims(), BipartiteDims::new(2, 3).unwrap());
    }
}
