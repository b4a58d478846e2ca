#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use realign_core::explore::{candidate_rng, sample_density};
use realign_core::{hermitian_eigenvalues, BipartiteDims, Complex64, ComplexMatrix, DensityMatrix};

pub fn dims(m: usize, n: usize) -> BipartiteDims {
    BipartiteDims::new(m, n).unwrap()
}

pub fn bell() -> DensityMatrix {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    DensityMatrix::pure(dims(2, 2), &[one, zero, zero, one]).unwrap()
}

pub fn random_state(m: usize, n: usize, seed: u64, index: u64) -> DensityMatrix {
    sample_density(dims(m, n), &mut candidate_rng(seed, index))
}

/// Pure product state from two arbitrary (unnormalized) vectors.
pub fn product_state(a: &[Complex64], b: &[Complex64]) -> DensityMatrix {
    let psi: Vec<Complex64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect();
    DensityMatrix::pure(dims(a.len(), b.len()), &psi).unwrap()
}

/// Singular values through the eigenvalues of the smaller Gram matrix,
/// independent of the one-sided Jacobi path.
pub fn gram_singular_values(a: &ComplexMatrix) -> Vec<f64> {
    let gram = if a.rows() <= a.cols() {
        a * &a.adjoint()
    } else {
        &a.adjoint() * a
    };
    hermitian_eigenvalues(&gram)
        .unwrap()
        .into_iter()
        .map(|v| v.max(0.0).sqrt())
        .collect()
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn binom_rat(n: usize, k: usize) -> BigRational {
    if k > n {
        return rat(0, 1);
    }
    let mut acc = rat(1, 1);
    for i in 0..k {
        acc = acc * rat((n - i) as i64, (i + 1) as i64);
    }
    acc
}

pub fn pow_rat(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(rat(1, 1), |acc, _| acc * x)
}

/// Exact `f_l(spike, flat, ..., flat)` with `count` entries.
pub fn spike_esf_exact(spike: &BigRational, flat: &BigRational, count: usize, ell: usize) -> BigRational {
    binom_rat(count - 1, ell) * pow_rat(flat, ell) + spike * binom_rat(count - 1, ell - 1) * pow_rat(flat, ell - 1)
}

pub fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap()
}

/// Brute-force `f_l` over all subsets.
pub fn esf_by_subsets(s: &[f64], ell: usize) -> f64 {
    let n = s.len();
    let mut total = 0.0;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == ell {
            total += (0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).product::<f64>();
        }
    }
    total
}
