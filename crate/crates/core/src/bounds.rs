//! Closed-form maxima of `f_l` over realignment spectra.
//!
//! For states on `C^m ⊗ C^n` (`m <= n`) whose realignment has trace norm at
//! most 1, the maximum of `f_l` over the singular values is
//!
//! * `f_l(α, β, ..., β)` with `α = 1/√(mn)`, `β = (1-α)/(m²-1)` when
//!   `n <= m³ - m/2`,
//! * `C(m², l) m^(-2l)` when `n >= m³`,
//! * not known in between.
//!
//! For `m = n` the same value is the maximum over separable states.

use core::fmt;

use crate::error::{Error, Result};
use crate::symmetric::{binomial, spike_esf, SpikeFlat};

/// `s₂` values above `-FEASIBILITY_TOL` count as nonnegative.
pub const FEASIBILITY_TOL: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `m <= n <= m³ - m/2`: extremal spectrum `(α, β, ..., β)`.
    SpikeFlat,
    /// `n >= m³`: extremal spectrum `(1/m², ..., 1/m²)`.
    Flat,
    /// `m³ - m/2 < n < m³`: no closed form is known.
    UnknownGap,
}

impl Regime {
    /// Compares `2n` with `2m³ - m` in integers, since `m³ - m/2` is
    /// half-integral for odd `m`.
    pub fn classify(m: usize, n: usize) -> Self {
        let cube = (m * m * m) as u128;
        let (m, n) = (m as u128, n as u128);
        if 2 * n <= 2 * cube - m {
            Regime::SpikeFlat
        } else if n >= cube {
            Regime::Flat
        } else {
            Regime::UnknownGap
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::SpikeFlat => "SpikeFlat",
            Regime::Flat => "Flat",
            Regime::UnknownGap => "UnknownGap",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    /// `None` exactly when the regime is [`Regime::UnknownGap`] (and `l > 1`).
    pub value: Option<f64>,
    pub regime: Regime,
    /// Largest entry of the extremal spectrum.
    pub alpha: f64,
    /// Repeated entry of the extremal spectrum.
    pub beta: f64,
    /// Set for `l = 1`, where the value 1 comes from the trace-norm
    /// constraint rather than from the closed form.
    pub ell_one_convention: bool,
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::BadDims {
            m,
            n,
            reason: "need m >= 2",
        });
    }
    if m > n {
        return Err(Error::BadDims {
            m,
            n,
            reason: "need m <= n (swap subsystems first)",
        });
    }
    Ok(())
}

fn check_order(m: usize, ell: usize) -> Result<()> {
    if ell == 0 || ell > m * m {
        return Err(Error::BadOrder { ell, max: m * m });
    }
    Ok(())
}

/// `α = 1/√(mn)`, `β = (1 - α)/(m² - 1)`.
pub fn alpha_beta(m: usize, n: usize) -> Result<(f64, f64)> {
    check_dims(m, n)?;
    let alpha = 1.0 / libm::sqrt((m * n) as f64);
    let beta = (1.0 - alpha) / (m * m - 1) as f64;
    Ok((alpha, beta))
}

/// `C(m², l) / m^(2l)`, the value of `f_l` on the uniform vector.
pub fn universal_cap(m: usize, ell: usize) -> Result<f64> {
    if m < 2 {
        return Err(Error::BadDims {
            m,
            n: m,
            reason: "need m >= 2",
        });
    }
    check_order(m, ell)?;
    let mm = (m * m) as f64;
    Ok(binomial(m * m, ell) / libm::pow(mm, ell as f64))
}

/// Maximum of `f_l` over realignment spectra with trace norm at most 1.
pub fn b_tilde(m: usize, n: usize, ell: usize) -> Result<BoundResult> {
    check_dims(m, n)?;
    check_order(m, ell)?;
    let regime = Regime::classify(m, n);
    let (alpha, beta) = match regime {
        Regime::Flat => {
            let u = 1.0 / (m * m) as f64;
            (u, u)
        }
        _ => alpha_beta(m, n)?,
    };
    let value = if ell == 1 {
        Some(1.0)
    } else {
        match regime {
            Regime::SpikeFlat => Some(spike_esf(
                &SpikeFlat {
                    spike: alpha,
                    flat: beta,
                    count: m * m,
                },
                ell,
            )?),
            Regime::Flat => Some(universal_cap(m, ell)?),
            Regime::UnknownGap => None,
        }
    };
    Ok(BoundResult {
        value,
        regime,
        alpha,
        beta,
        ell_one_convention: ell == 1,
    })
}

/// Maximum of `f_l` over realignment spectra of separable states on
/// `C^n ⊗ C^n`: `f_l(1/n, β, ..., β)` with `β = (n-1)/(n(n²-1)) = 1/(n(n+1))`.
pub fn b_sep(n: usize, ell: usize) -> Result<f64> {
    check_dims(n, n)?;
    check_order(n, ell)?;
    let nf = n as f64;
    spike_esf(
        &SpikeFlat {
            spike: 1.0 / nf,
            flat: (nf - 1.0) / (nf * (nf * nf - 1.0)),
            count: n * n,
        },
        ell,
    )
}

/// Whether the spike-flat extremal state exists for `(m, n)`, with the
/// quantities that decide it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Feasibility {
    pub m: usize,
    pub n: usize,
    /// `n = m q + r`, `0 <= r < m`.
    pub q: usize,
    pub r: usize,
    /// Weight on `I_m ⊗ (I_mq ⊕ O_r)`: `α² - β/(m√q)`.
    pub s2: f64,
    /// `√((mq+r)²/q) - √((mq+r)/(mq))`; feasibility needs it `<= m² - 1`.
    pub f_qr: f64,
    pub threshold: f64,
    pub feasible: bool,
}

impl fmt::Display for Feasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(m, n) = ({}, {}), q = {}, r = {}, s2 = {:e}, f(q, r) = {} vs m^2 - 1 = {}",
            self.m, self.n, self.q, self.r, self.s2, self.f_qr, self.threshold
        )
    }
}

pub fn construction_feasible(m: usize, n: usize) -> Result<Feasibility> {
    check_dims(m, n)?;
    let (alpha, beta) = alpha_beta(m, n)?;
    let (q, r) = (n / m, n % m);
    let (mf, qf) = (m as f64, q as f64);
    let s2 = alpha * alpha - beta / (mf * libm::sqrt(qf));
    let nf = n as f64;
    let f_qr = libm::sqrt(nf * nf / qf) - libm::sqrt(nf / (mf * qf));
    Ok(Feasibility {
        m,
        n,
        q,
        r,
        s2,
        f_qr,
        threshold: mf * mf - 1.0,
        feasible: s2 >= -FEASIBILITY_TOL,
    })
}
