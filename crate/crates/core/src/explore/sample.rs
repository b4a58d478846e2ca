use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::bipartite::{BipartiteDims, DensityMatrix};
use crate::matrix::ComplexMatrix;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer applied to `master + (index + 1) * 0x9E3779B97F4A7C15`.
pub fn candidate_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn candidate_rng(master: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(candidate_seed(master, index))
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im)
}

fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..dim).map(|_| complex_normal(rng)).collect();
        let norm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if norm > 0.0 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Hilbert-Schmidt random state `G G^† / trace(G G^†)` with `G` a square
/// Ginibre matrix.
pub fn sample_density<R: Rng + ?Sized>(dims: BipartiteDims, rng: &mut R) -> DensityMatrix {
    let size = dims.total();
    let g = ComplexMatrix::from_fn(size, size, |_, _| complex_normal(rng));
    let gram = g.gram_rows();
    let trace = gram.trace().re;
    DensityMatrix::new(dims, gram.scale(1.0 / trace)).expect("Gram matrix is a valid state")
}

/// Mixture of `terms` Haar-random pure product states with Dirichlet(1, ..., 1)
/// weights.
pub fn sample_separable<R: Rng + ?Sized>(dims: BipartiteDims, terms: usize, rng: &mut R) -> DensityMatrix {
    assert!(terms >= 1, "need at least one product term");
    let raw: Vec<f64> = (0..terms).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = raw.iter().sum();
    let size = dims.total();
    let mut mat = ComplexMatrix::zeros(size, size);
    for weight in raw {
        let a = random_unit_vector(rng, dims.m);
        let b = random_unit_vector(rng, dims.n);
        let psi: Vec<Complex64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect();
        let p = weight / total;
        for i in 0..size {
            for j in 0..size {
                mat[(i, j)] += psi[i] * psi[j].conj() * p;
            }
        }
    }
    let trace = mat.trace().re;
    DensityMatrix::new(dims, mat.scale(1.0 / trace)).expect("mixture of product states is a valid state")
}
