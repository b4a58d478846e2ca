//! Explicit states whose realignment spectra attain the closed-form bounds.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::bipartite::{BipartiteDims, DensityMatrix};
use crate::bounds::{alpha_beta, construction_feasible, Feasibility};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Parameters of the spike-flat state
/// `s1 * rho1 + s2 * rho2 + s3 * rho3` built by [`extremal_spike`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstructionParams {
    pub m: usize,
    pub n: usize,
    pub q: usize,
    pub r: usize,
    pub alpha: f64,
    pub beta: f64,
    /// `β / √q`, weight on `Σ E_kl ⊗ F_kl`.
    pub s1: f64,
    /// `α² - β/(m√q)`, weight on `I_m ⊗ (I_mq ⊕ O_r)`.
    pub s2: f64,
    /// `α²`, weight on `I_m ⊗ (O_mq ⊕ I_r)`.
    pub s3: f64,
}

/// Adds `weight * Σ_{k,l} E_kl ⊗ ((E_kl ⊗ I_width) ⊕ O)` into `mat`.
fn add_block_transpositions(mat: &mut ComplexMatrix, dims: BipartiteDims, width: usize, weight: f64) {
    let w = Complex64::new(weight, 0.0);
    for k in 0..dims.m {
        for l in 0..dims.m {
            for t in 0..width {
                mat[(dims.index(k, k * width + t), dims.index(l, l * width + t))] += w;
            }
        }
    }
}

/// State with realignment singular values `(1/m², ..., 1/m²)`, for `n >= m³`:
/// `(1/m³) Σ E_kl ⊗ F_kl` with `F_kl = (E_kl ⊗ I_m²) ⊕ O_(n-m³)`.
pub fn extremal_flat(m: usize, n: usize) -> Result<DensityMatrix> {
    if m < 1 || n < m * m * m {
        return Err(Error::Regime {
            m,
            n,
            reason: "flat construction needs n >= m^3",
        });
    }
    let dims = BipartiteDims::new(m, n)?;
    let mut mat = ComplexMatrix::zeros(dims.total(), dims.total());
    add_block_transpositions(&mut mat, dims, m * m, 1.0 / (m * m * m) as f64);
    DensityMatrix::new(dims, mat)
}

/// State with realignment singular values `(α, β, ..., β)`.
///
/// With `n = mq + r`, `F_kl = (E_kl ⊗ I_q) ⊕ O_r` and
/// `rho = s1 Σ E_kl ⊗ F_kl + s2 I_m ⊗ (I_mq ⊕ O_r) + s3 I_m ⊗ (O_mq ⊕ I_r)`.
/// Fails with [`Error::InfeasibleConstruction`] when `s2 < 0`.
pub fn extremal_spike(m: usize, n: usize) -> Result<(DensityMatrix, ConstructionParams)> {
    let feasibility: Feasibility = construction_feasible(m, n)?;
    if !feasibility.feasible {
        return Err(Error::InfeasibleConstruction(feasibility));
    }
    let (alpha, beta) = alpha_beta(m, n)?;
    let Feasibility { q, r, s2, .. } = feasibility;
    let params = ConstructionParams {
        m,
        n,
        q,
        r,
        alpha,
        beta,
        s1: beta / libm::sqrt(q as f64),
        s2,
        s3: alpha * alpha,
    };

    let dims = BipartiteDims::new(m, n)?;
    let mut mat = ComplexMatrix::zeros(dims.total(), dims.total());
    add_block_transpositions(&mut mat, dims, q, params.s1);
    for a in 0..m {
        for i in 0..n {
            let weight = if i < m * q { params.s2 } else { params.s3 };
            mat[(dims.index(a, i), dims.index(a, i))] += Complex64::new(weight, 0.0);
        }
    }
    Ok((DensityMatrix::new(dims, mat)?, params))
}

/// `(I_n² + x xᵗ) / (n(n+1))` on `C^n ⊗ C^n`, where `x` has ones at the
/// positions `(k, k)`.
pub fn separable_witness(n: usize) -> Result<DensityMatrix> {
    if n < 2 {
        return Err(Error::BadDims {
            m: n,
            n,
            reason: "need n >= 2",
        });
    }
    let dims = BipartiteDims::new(n, n)?;
    let scale = 1.0 / (n * (n + 1)) as f64;
    let mut mat = ComplexMatrix::identity(n * n).scale(scale);
    add_block_transpositions(&mut mat, dims, 1, scale);
    DensityMatrix::new(dims, mat)
}

/// 0/1 vectors `x` (length m²) and `y` (length n²) whose bilinear form on
/// the realignment recovers `trace(rho)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessVectors {
    pub x: Vec<u8>,
    pub y: Vec<u8>,
}

impl WitnessVectors {
    /// `|xᵗ R y| / √(mn)`, a lower bound on the top singular value of `R`
    /// since `x/√m` and `y/√n` are unit vectors.
    pub fn top_singular_lower_bound(&self, realigned: &ComplexMatrix) -> f64 {
        assert_eq!((realigned.rows(), realigned.cols()), (self.x.len(), self.y.len()));
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &xi) in self.x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in self.y.iter().enumerate() {
                if yj != 0 {
                    acc += realigned[(i, j)];
                }
            }
        }
        let ones = (self.x.iter().filter(|&&v| v != 0).count() * self.y.iter().filter(|&&v| v != 0).count()) as f64;
        acc.norm() / libm::sqrt(ones)
    }
}

fn diagonal_indicator(dim: usize) -> Vec<u8> {
    let mut v = vec![0; dim * dim];
    // 1-based positions k(dim+1)+1, k = 0..dim
    for k in 0..dim {
        v[k * (dim + 1)] = 1;
    }
    v
}

pub fn lemma21_witness(m: usize, n: usize) -> Result<WitnessVectors> {
    BipartiteDims::new(m, n)?;
    Ok(WitnessVectors {
        x: diagonal_indicator(m),
        y: diagonal_indicator(n),
    })
}
