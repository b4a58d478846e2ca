//! Necessary conditions for separability: the realignment (CCNR) test and
//! the positive partial transpose (PPT) test.

use crate::bipartite::{partial_transpose, realign, DensityMatrix};
use crate::error::Result;
use crate::spectral::{hermitian_eigenvalues, trace_norm};

/// Slack applied to both tests before a violation counts.
pub const CRITERION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    Ccnr,
    Ppt,
}

/// Passing a test never proves separability; only a violation is conclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    PassesNecessaryCondition,
    CertifiedEntangled,
}

impl Verdict {
    pub fn is_entangled(self) -> bool {
        self == Verdict::CertifiedEntangled
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub criterion: Criterion,
    /// Realignment trace norm (CCNR) or minimum eigenvalue of the partial
    /// transpose (PPT).
    pub statistic: f64,
    pub verdict: Verdict,
    /// Trace norm of the partial transpose; PPT reports only.
    pub partial_transpose_trace_norm: Option<f64>,
    /// PPT is also sufficient for separability when `m + n <= 5`.
    pub ppt_is_sufficient: bool,
}

pub fn ppt_is_sufficient(rho: &DensityMatrix) -> bool {
    let dims = rho.dims();
    dims.m + dims.n <= 5
}

pub fn ccnr_test(rho: &DensityMatrix) -> CriterionReport {
    let statistic = trace_norm(&realign(rho));
    let verdict = if statistic > 1.0 + CRITERION_TOL {
        Verdict::CertifiedEntangled
    } else {
        Verdict::PassesNecessaryCondition
    };
    CriterionReport {
        criterion: Criterion::Ccnr,
        statistic,
        verdict,
        partial_transpose_trace_norm: None,
        ppt_is_sufficient: ppt_is_sufficient(rho),
    }
}

pub fn ppt_test(rho: &DensityMatrix) -> Result<CriterionReport> {
    let pt = partial_transpose(rho);
    let eigenvalues = hermitian_eigenvalues(&pt)?;
    let statistic = eigenvalues.last().copied().unwrap_or(0.0);
    let verdict = if statistic < -CRITERION_TOL {
        Verdict::CertifiedEntangled
    } else {
        Verdict::PassesNecessaryCondition
    };
    Ok(CriterionReport {
        criterion: Criterion::Ppt,
        statistic,
        verdict,
        partial_transpose_trace_norm: Some(trace_norm(&pt)),
        ppt_is_sufficient: ppt_is_sufficient(rho),
    })
}
