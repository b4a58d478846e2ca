//! Realignment (CCNR) and PPT separability tests for bipartite states,
//! closed-form maxima of elementary symmetric functions of realignment
//! singular values, the states that attain them, and a seeded random search
//! that checks them numerically.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod bipartite;
pub mod bounds;
pub mod construct;
pub mod criteria;
mod error;
pub mod explore;
pub mod matrix;
pub mod spectral;
pub mod symmetric;

pub use bipartite::{partial_transpose, realign, realign_matrix, swap_subsystems, tensor, vec_row, BipartiteDims, DensityMatrix};
pub use bounds::{alpha_beta, b_sep, b_tilde, construction_feasible, universal_cap, BoundResult, Feasibility, Regime};
pub use construct::{extremal_flat, extremal_spike, lemma21_witness, separable_witness, ConstructionParams, WitnessVectors};
pub use criteria::{ccnr_test, ppt_test, Criterion, CriterionReport, Verdict};
pub use error::{DensityViolation, Error, Result};
pub use matrix::ComplexMatrix;
pub use num_complex::Complex64;
pub use spectral::{hermitian_eigenvalues, singular_values, trace_norm, SingularSpectrum};
pub use symmetric::{esf, majorizes, spike_esf, SpikeFlat};

/// Crate version, echoed in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
