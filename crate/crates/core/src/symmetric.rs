//! Elementary symmetric functions, majorization, and the closed form of
//! `f_l` on a "spike + flat tail" vector.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::spectral::sort_descending;

/// Absolute slack used when comparing prefix sums.
pub const MAJORIZATION_TOL: f64 = 1e-12;

/// Vector `(spike, flat, ..., flat)` of length `count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpikeFlat {
    pub spike: f64,
    pub flat: f64,
    pub count: usize,
}

impl SpikeFlat {
    pub fn expand(&self) -> Vec<f64> {
        let mut v = vec![self.flat; self.count];
        if let Some(first) = v.first_mut() {
            *first = self.spike;
        }
        v
    }

    pub fn sum(&self) -> f64 {
        self.spike + (self.count.saturating_sub(1)) as f64 * self.flat
    }
}

fn check_entries(s: &[f64]) -> Result<()> {
    match s.iter().position(|&x| x.is_nan() || x < 0.0) {
        Some(index) => Err(Error::NegativeEntry {
            index,
            value: s[index],
        }),
        None => Ok(()),
    }
}

fn check_order(ell: usize, len: usize) -> Result<()> {
    if ell == 0 || ell > len {
        return Err(Error::BadOrder { ell, max: len });
    }
    Ok(())
}

/// All elementary symmetric functions `e_0 ..= e_max_order` of `s`.
///
/// Uses `e_l <- e_l + s_k e_{l-1}`; every term is nonnegative so nothing
/// cancels.
pub fn esf_all(s: &[f64], max_order: usize) -> Result<Vec<f64>> {
    check_entries(s)?;
    let top = max_order.min(s.len());
    let mut e = vec![0.0; top + 1];
    e[0] = 1.0;
    for (k, &x) in s.iter().enumerate() {
        for l in (1..=top.min(k + 1)).rev() {
            e[l] += x * e[l - 1];
        }
    }
    e.resize(max_order + 1, 0.0);
    Ok(e)
}

/// `f_l(s)`: sum over all `l`-subsets of the product of their entries.
pub fn esf(s: &[f64], ell: usize) -> Result<f64> {
    check_order(ell, s.len())?;
    Ok(esf_all(s, ell)?[ell])
}

/// `x ≺ y`: `y` majorizes `x`. Both are sorted internally.
pub fn majorizes(y: &[f64], x: &[f64]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: y.len(),
            right: x.len(),
        });
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    sort_descending(&mut xs);
    sort_descending(&mut ys);
    let (mut px, mut py) = (0.0, 0.0);
    for (a, b) in xs.iter().zip(&ys) {
        px += a;
        py += b;
        if px > py + MAJORIZATION_TOL {
            return Ok(false);
        }
    }
    Ok((px - py).abs() <= MAJORIZATION_TOL)
}

/// Exact binomial coefficient as `f64` (exact for the sizes used here).
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as f64
}

/// `f_l(spike, flat, ..., flat) = C(N-1, l) flat^l + spike C(N-1, l-1) flat^(l-1)`.
pub fn spike_esf(v: &SpikeFlat, ell: usize) -> Result<f64> {
    check_order(ell, v.count)?;
    check_entries(&[v.spike, v.flat])?;
    let rest = v.count - 1;
    let flat_pow = libm::pow(v.flat, (ell - 1) as f64);
    Ok(binomial(rest, ell) * flat_pow * v.flat + v.spike * binomial(rest, ell - 1) * flat_pow)
}
