//! Random states and seeded numerical search over realignment spectra.
//!
//! Every random draw is keyed by a candidate index: the generator for index
//! `i` is `ChaCha8Rng::seed_from_u64(candidate_seed(master, i))`. Results
//! therefore do not depend on how candidates are spread over workers.

mod sample;
mod search;
mod verify;

pub use sample::{candidate_rng, candidate_seed, sample_density, sample_separable};
pub use search::{
    maximize_esf, maximize_esf_with, BatchRunner, Outcome, SearchConfig, SearchMode, SearchResult,
    Sequential, BATCH_SIZE, REFINE_WEIGHTS, TRACE_NORM_SLACK,
};
pub use verify::{verify_properties, VerifyReport};
