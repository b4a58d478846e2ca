use alloc::vec::Vec;
use core::ops::Range;

use rand::Rng;

use super::sample::{candidate_rng, sample_density, sample_separable};
use crate::bipartite::{realign, BipartiteDims, DensityMatrix};
use crate::bounds::{b_sep, b_tilde, Regime};
use crate::construct::{extremal_flat, extremal_spike, separable_witness};
use crate::error::{Error, Result};
use crate::spectral::singular_values;
use crate::symmetric::esf;

/// Candidates per round. The incumbent used for refinement is fixed for the
/// whole round, which keeps results independent of worker count.
pub const BATCH_SIZE: u64 = 64;
/// Mixing weights `ε` for refinements `(1-ε) ρ_best + ε σ`, cycled.
pub const REFINE_WEIGHTS: [f64; 3] = [0.2, 0.05, 0.01];
/// Candidates with realignment trace norm above `1 + TRACE_NORM_SLACK` are
/// rejected in [`SearchMode::AllStatesConstrained`].
pub const TRACE_NORM_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// All states with realignment trace norm at most 1.
    AllStatesConstrained,
    /// Mixtures of product states.
    SeparableStates,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub dims: BipartiteDims,
    pub ell: usize,
    pub budget: u64,
    pub seed: u64,
    pub mode: SearchMode,
    /// Evaluate the matching extremal construction first, when one exists.
    pub seed_with_constructions: bool,
}

impl SearchConfig {
    pub fn new(m: usize, n: usize, ell: usize, mode: SearchMode, budget: u64, seed: u64) -> Result<Self> {
        Ok(Self {
            dims: BipartiteDims::new(m, n)?,
            ell,
            budget,
            seed,
            mode,
            seed_with_constructions: true,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_value: f64,
    pub best_state: DensityMatrix,
    /// Candidate index of the best state (0 is the construction seed when used).
    pub best_index: u64,
    pub evaluations: u64,
    pub rejected: u64,
    /// Exact maximum for this mode, when known.
    pub closed_form: Option<f64>,
    /// `closed_form - best_value`.
    pub gap: Option<f64>,
    /// Maximum over all states with trace norm at most 1; caps both modes.
    pub upper_bound: Option<f64>,
    pub regime: Regime,
    pub seeded: bool,
}

/// Result of one candidate evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Rejected,
    Scored { value: f64, state: DensityMatrix },
}

/// Evaluates a range of candidate indices, returning outcomes in index order.
pub trait BatchRunner {
    fn run(&self, indices: Range<u64>, job: &(dyn Fn(u64) -> Outcome + Sync)) -> Vec<Outcome>;
}

/// Evaluates candidates one after another on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl BatchRunner for Sequential {
    fn run(&self, indices: Range<u64>, job: &(dyn Fn(u64) -> Outcome + Sync)) -> Vec<Outcome> {
        indices.map(job).collect()
    }
}

pub fn maximize_esf(cfg: &SearchConfig) -> Result<SearchResult> {
    maximize_esf_with(cfg, &Sequential)
}

struct Best {
    value: f64,
    state: DensityMatrix,
    index: u64,
}

pub fn maximize_esf_with<R: BatchRunner + ?Sized>(cfg: &SearchConfig, runner: &R) -> Result<SearchResult> {
    // The realignment spectrum is invariant under swapping subsystems.
    let dims = if cfg.dims.is_canonical() { cfg.dims } else { cfg.dims.swapped() };
    let bound = b_tilde(dims.m, dims.n, cfg.ell)?;
    let closed_form = match cfg.mode {
        SearchMode::AllStatesConstrained => bound.value,
        SearchMode::SeparableStates if dims.m == dims.n => Some(b_sep(dims.n, cfg.ell)?),
        SearchMode::SeparableStates => None,
    };

    let mut best: Option<Best> = None;
    let mut evaluations = 0;
    let mut rejected = 0;
    let mut next = 0;
    let mut seeded = false;

    if cfg.seed_with_constructions && cfg.budget > 0 {
        if let Some(state) = construction_seed(dims, cfg.mode, bound.regime) {
            seeded = true;
            evaluations += 1;
            match evaluate(state, cfg) {
                Outcome::Scored { value, state } => best = Some(Best { value, state, index: 0 }),
                Outcome::Rejected => rejected += 1,
            }
            next = 1;
        }
    }

    while next < cfg.budget {
        let end = (next + BATCH_SIZE).min(cfg.budget);
        let incumbent = best.as_ref().map(|b| &b.state);
        let job = |index: u64| candidate(index, dims, incumbent, cfg);
        let outcomes = runner.run(next..end, &job);
        debug_assert_eq!(outcomes.len() as u64, end - next);
        for (index, outcome) in (next..end).zip(outcomes) {
            evaluations += 1;
            match outcome {
                Outcome::Rejected => rejected += 1,
                // strict comparison: the lowest index wins ties
                Outcome::Scored { value, state } => {
                    if best.as_ref().is_none_or(|b| value > b.value) {
                        best = Some(Best { value, state, index });
                    }
                }
            }
        }
        next = end;
    }

    let best = best.ok_or(Error::NoFeasibleCandidate)?;
    Ok(SearchResult {
        best_value: best.value,
        best_state: best.state,
        best_index: best.index,
        evaluations,
        rejected,
        closed_form,
        gap: closed_form.map(|c| c - best.value),
        upper_bound: bound.value,
        regime: bound.regime,
        seeded,
    })
}

fn construction_seed(dims: BipartiteDims, mode: SearchMode, regime: Regime) -> Option<DensityMatrix> {
    match (mode, regime) {
        (SearchMode::AllStatesConstrained, Regime::SpikeFlat) => {
            extremal_spike(dims.m, dims.n).ok().map(|(state, _)| state)
        }
        (SearchMode::AllStatesConstrained, Regime::Flat) => extremal_flat(dims.m, dims.n).ok(),
        (SearchMode::SeparableStates, _) if dims.m == dims.n => separable_witness(dims.n).ok(),
        _ => None,
    }
}

fn fresh_sample<G: Rng + ?Sized>(dims: BipartiteDims, mode: SearchMode, rng: &mut G) -> DensityMatrix {
    match mode {
        SearchMode::AllStatesConstrained => sample_density(dims, rng),
        SearchMode::SeparableStates => {
            let max_terms = dims.total() * dims.total();
            let terms = rng.random_range(1..=max_terms);
            sample_separable(dims, terms, rng)
        }
    }
}

/// Even indices (and every index before an incumbent exists) are fresh
/// samples; odd indices mix the incumbent with a fresh sample.
fn candidate(index: u64, dims: BipartiteDims, incumbent: Option<&DensityMatrix>, cfg: &SearchConfig) -> Outcome {
    let mut rng = candidate_rng(cfg.seed, index);
    let sigma = fresh_sample(dims, cfg.mode, &mut rng);
    let state = match incumbent {
        Some(best) if index % 2 == 1 => {
            let weight = REFINE_WEIGHTS[((index / 2) % REFINE_WEIGHTS.len() as u64) as usize];
            match best.mix(&sigma, weight) {
                Ok(state) => state,
                Err(_) => return Outcome::Rejected,
            }
        }
        _ => sigma,
    };
    evaluate(state, cfg)
}

fn evaluate(state: DensityMatrix, cfg: &SearchConfig) -> Outcome {
    let spectrum = singular_values(&realign(&state));
    if cfg.mode == SearchMode::AllStatesConstrained && spectrum.sum() > 1.0 + TRACE_NORM_SLACK {
        return Outcome::Rejected;
    }
    match esf(&spectrum, cfg.ell) {
        Ok(value) => Outcome::Scored { value, state },
        Err(_) => Outcome::Rejected,
    }
}
