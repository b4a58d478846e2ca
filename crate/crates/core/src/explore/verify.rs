use alloc::vec::Vec;

use super::sample::{candidate_rng, sample_density};
use crate::bipartite::{realign, BipartiteDims};
use crate::bounds::alpha_beta;
use crate::construct::lemma21_witness;
use crate::error::{Error, Result};
use crate::spectral::singular_values;
use crate::symmetric::{esf_all, majorizes, spike_esf, SpikeFlat};

const TOP_SINGULAR_TOL: f64 = 1e-10;
const ESF_TOL: f64 = 1e-9;

/// Violation counts from [`verify_properties`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyReport {
    pub samples: usize,
    /// Samples with `s₁ < 1/√(mn) - 1e-10`.
    pub top_singular_violations: usize,
    /// Samples where the witness bilinear form exceeded `s₁` or missed `1/√(mn)`.
    pub witness_violations: usize,
    /// Samples with realignment trace norm at most 1 (the chain applies only to these).
    pub constrained_samples: usize,
    pub uniform_chain_violations: usize,
    pub spectrum_chain_violations: usize,
    /// Constrained samples with `f_l(s) > f_l(α, β, ..., β) + 1e-9` for some `l >= 2`.
    pub esf_violations: usize,
    /// Smallest `s₁ - 1/√(mn)` seen.
    pub min_top_margin: f64,
}

impl VerifyReport {
    pub fn total_violations(&self) -> usize {
        self.top_singular_violations
            + self.witness_violations
            + self.uniform_chain_violations
            + self.spectrum_chain_violations
            + self.esf_violations
    }
}

/// Samples Hilbert-Schmidt states and checks, for each one, the top singular
/// value lower bound `s₁ >= 1/√(mn)`, and for those with realignment trace
/// norm at most 1 the chain `uniform ≺ (α, β, ..., β) ≺ s/Σs` and
/// `f_l(s) <= f_l(α, β, ..., β)`. Needs `2 <= m <= n <= m³`.
pub fn verify_properties(dims: BipartiteDims, samples: usize, seed: u64) -> Result<VerifyReport> {
    let BipartiteDims { m, n } = dims;
    if n > m * m * m {
        return Err(Error::BadDims {
            m,
            n,
            reason: "majorization chain needs n <= m^3",
        });
    }
    let (alpha, beta) = alpha_beta(m, n)?;
    let witness = lemma21_witness(m, n)?;
    let floor = 1.0 / libm::sqrt((m * n) as f64);
    let count = m * m;
    let spike = SpikeFlat {
        spike: alpha,
        flat: beta,
        count,
    };
    let spike_vec = spike.expand();
    let uniform: Vec<f64> = (0..count).map(|_| 1.0 / count as f64).collect();
    let caps: Vec<f64> = (2..=count)
        .map(|ell| spike_esf(&spike, ell))
        .collect::<Result<_>>()?;

    let mut report = VerifyReport {
        samples,
        min_top_margin: f64::INFINITY,
        ..VerifyReport::default()
    };
    for index in 0..samples as u64 {
        let rho = sample_density(dims, &mut candidate_rng(seed, index));
        let realigned = realign(&rho);
        let s = singular_values(&realigned);
        let top = s.largest();
        report.min_top_margin = report.min_top_margin.min(top - floor);
        if top < floor - TOP_SINGULAR_TOL {
            report.top_singular_violations += 1;
        }
        let certified = witness.top_singular_lower_bound(&realigned);
        if certified > top + TOP_SINGULAR_TOL || (certified - floor).abs() > TOP_SINGULAR_TOL {
            report.witness_violations += 1;
        }

        let total = s.sum();
        if total > 1.0 {
            continue;
        }
        report.constrained_samples += 1;
        let normalized: Vec<f64> = s.iter().map(|v| v / total).collect();
        if !majorizes(&spike_vec, &uniform)? {
            report.uniform_chain_violations += 1;
        }
        if !majorizes(&normalized, &spike_vec)? {
            report.spectrum_chain_violations += 1;
        }
        let values = esf_all(&s, count)?;
        if values[2..].iter().zip(&caps).any(|(v, cap)| *v > cap + ESF_TOL) {
            report.esf_violations += 1;
        }
    }
    Ok(report)
}
