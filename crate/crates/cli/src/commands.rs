use std::path::Path;

use realign_core::bounds::Regime;
use realign_core::explore::{maximize_esf_with, verify_properties, SearchConfig, SearchMode};
use realign_core::{
    b_sep, b_tilde, ccnr_test, construction_feasible, extremal_flat, extremal_spike, ppt_test, realign,
    separable_witness, singular_values, trace_norm, BipartiteDims, Criterion, CriterionReport, DensityMatrix,
};
use serde_json::{json, Value};

use crate::cli::{Command, CriterionArg, KindArg, ModeArg};
use crate::error::CliError;
use crate::matrix_file::{parse_matrix_file, write_json, write_matrix_file, PlainMatrix};
use crate::report::{num, nums, Report};
use crate::runner::Threaded;

/// Exit code for a certified entangled state.
pub const EXIT_ENTANGLED: u8 = 1;
/// Exit code for usage, parse and validation errors.
pub const EXIT_USAGE: u8 = 2;
/// Exit code when `verify` finds a violation.
pub const EXIT_VIOLATION: u8 = 3;

const VERIFY_DIMS: [(usize, usize); 4] = [(2, 2), (2, 3), (3, 3), (2, 4)];

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Realign { input, output } => cmd_realign(input, output.as_deref()),
        Command::Test { criterion, input } => cmd_test(*criterion, input),
        Command::Bound { m, n, ell, sep } => cmd_bound(*m, *n, *ell, *sep),
        Command::Construct { kind, m, n, output } => cmd_construct(*kind, *m, *n, output.as_deref()),
        Command::Estimate {
            mode,
            m,
            n,
            ell,
            budget,
            seed,
            workers,
            no_construction_seed,
            output,
        } => {
            let mode = match mode {
                ModeArg::All => SearchMode::AllStatesConstrained,
                ModeArg::Sep => SearchMode::SeparableStates,
            };
            let mut cfg = SearchConfig::new(*m, *n, *ell, mode, *budget, *seed)?;
            cfg.seed_with_constructions = !no_construction_seed;
            cmd_estimate(&cfg, *workers, output.as_deref())
        }
        Command::Verify { samples, seed, m, n } => {
            let dims = match (m, n) {
                (Some(m), Some(n)) => vec![(*m, *n)],
                _ => VERIFY_DIMS.to_vec(),
            };
            cmd_verify(&dims, *samples, *seed)
        }
    }
}

fn dims_json(dims: BipartiteDims) -> Value {
    json!([dims.m, dims.n])
}

fn state_input(path: &Path, rho: &DensityMatrix, swapped: bool) -> Value {
    json!({
        "path": path.display().to_string(),
        "dims": dims_json(rho.dims()),
        "swapped": swapped,
        "trace": num(rho.matrix().trace().re),
        "min_eigenvalue": num(rho.min_eigenvalue()),
    })
}

fn cmd_realign(input: &Path, output: Option<&Path>) -> Result<Report, CliError> {
    let loaded = parse_matrix_file(input)?;
    let r = realign(&loaded.state);
    let s = singular_values(&r);
    if let Some(path) = output {
        write_json(path, &PlainMatrix::from_matrix(&r))?;
    }
    let mut report = Report::new("realign", state_input(input, &loaded.state, loaded.swapped));
    report
        .set("shape", json!([r.rows(), r.cols()]))
        .set("realigned", matrix_json(&r))
        .set("singular_values", nums(&s))
        .set("trace_norm", num(s.sum()))
        .set("output", output.map(|p| p.display().to_string()));
    Ok(report)
}

fn matrix_json(mat: &realign_core::ComplexMatrix) -> Value {
    let part = |f: fn(&realign_core::Complex64) -> f64| {
        Value::Array((0..mat.rows()).map(|i| Value::Array(mat.row(i).iter().map(|z| num(f(z))).collect())).collect())
    };
    json!({"re": part(|z| z.re), "im": part(|z| z.im)})
}

fn criterion_json(r: &CriterionReport) -> Value {
    let (name, statistic) = match r.criterion {
        Criterion::Ccnr => ("ccnr", "realignment_trace_norm"),
        Criterion::Ppt => ("ppt", "partial_transpose_min_eigenvalue"),
    };
    let mut v = json!({
        "criterion": name,
        "statistic_name": statistic,
        "statistic": num(r.statistic),
        "entangled": r.verdict.is_entangled(),
        "verdict": if r.verdict.is_entangled() { "certified_entangled" } else { "passes_necessary_condition" },
    });
    if let Some(tn) = r.partial_transpose_trace_norm {
        v["partial_transpose_trace_norm"] = num(tn);
        v["ppt_is_sufficient"] = r.ppt_is_sufficient.into();
    }
    v
}

fn cmd_test(criterion: CriterionArg, input: &Path) -> Result<Report, CliError> {
    let loaded = parse_matrix_file(input)?;
    let rho = &loaded.state;
    let mut results = Vec::new();
    if matches!(criterion, CriterionArg::Ccnr | CriterionArg::Both) {
        results.push(ccnr_test(rho));
    }
    if matches!(criterion, CriterionArg::Ppt | CriterionArg::Both) {
        results.push(ppt_test(rho)?);
    }
    let entangled = results.iter().any(|r| r.verdict.is_entangled());
    let mut report = Report::new("test", state_input(input, rho, loaded.swapped));
    report
        .set("results", Value::Array(results.iter().map(criterion_json).collect()))
        .set("entangled", entangled);
    if entangled {
        report.exit_code = EXIT_ENTANGLED;
    }
    Ok(report)
}

fn cmd_bound(m: usize, n: usize, ell: usize, sep: bool) -> Result<Report, CliError> {
    let mut report = Report::new("bound", json!({"m": m, "n": n, "ell": ell, "sep": sep}));
    if sep {
        if m != n {
            return Err(CliError::Usage(format!(
                "--sep needs m = n (got m = {m}, n = {n}); no closed form is known otherwise"
            )));
        }
        let value = b_sep(n, ell)?;
        report
            .set("bound", "separable")
            .set("value", num(value))
            .set("alpha", num(1.0 / n as f64))
            .set("beta", num((n - 1) as f64 / (n * (n * n - 1)) as f64));
        return Ok(report);
    }
    let r = b_tilde(m, n, ell)?;
    report
        .set("bound", "all_states")
        .set("regime", r.regime.name())
        .set("value", num(r.value))
        .set("alpha", num(r.alpha))
        .set("beta", num(r.beta))
        .set("ell_one_convention", r.ell_one_convention);
    if r.regime == Regime::UnknownGap {
        report.set(
            "note",
            "no closed form is known for these dimensions; only search lower bounds are available",
        );
    }
    Ok(report)
}

fn cmd_construct(kind: KindArg, m: usize, n: usize, output: Option<&Path>) -> Result<Report, CliError> {
    let mut report = Report::new(
        "construct",
        json!({"kind": format!("{kind:?}").to_lowercase(), "m": m, "n": n}),
    );
    let rho = match kind {
        KindArg::Flat => extremal_flat(m, n)?,
        KindArg::Spike => {
            let feas = construction_feasible(m, n)?;
            report.set(
                "feasibility",
                json!({
                    "q": feas.q, "r": feas.r, "s2": num(feas.s2),
                    "f_qr": num(feas.f_qr), "threshold": num(feas.threshold), "feasible": feas.feasible,
                }),
            );
            let (rho, p) = extremal_spike(m, n)?;
            report.set(
                "params",
                json!({
                    "alpha": num(p.alpha), "beta": num(p.beta),
                    "s1": num(p.s1), "s2": num(p.s2), "s3": num(p.s3),
                }),
            );
            rho
        }
        KindArg::Witness => {
            if m != n {
                return Err(CliError::Usage(format!("the separable witness needs m = n (got {m}, {n})")));
            }
            separable_witness(n)?
        }
    };
    let s = singular_values(&realign(&rho));
    if let Some(path) = output {
        write_matrix_file(path, &rho)?;
    }
    report
        .set("dims", dims_json(rho.dims()))
        .set("trace", num(rho.matrix().trace().re))
        .set("min_eigenvalue", num(rho.min_eigenvalue()))
        .set("singular_values", nums(&s))
        .set("trace_norm", num(s.sum()))
        .set("output", output.map(|p| p.display().to_string()));
    Ok(report)
}

pub fn cmd_estimate(cfg: &SearchConfig, workers: usize, output: Option<&Path>) -> Result<Report, CliError> {
    let mode = match cfg.mode {
        SearchMode::AllStatesConstrained => "all",
        SearchMode::SeparableStates => "sep",
    };
    let mut report = Report::new(
        "estimate",
        json!({
            "mode": mode, "m": cfg.dims.m, "n": cfg.dims.n, "ell": cfg.ell,
            "budget": cfg.budget, "seed": cfg.seed, "workers": workers,
            "construction_seed": cfg.seed_with_constructions,
        }),
    );
    let res = maximize_esf_with(cfg, &Threaded::new(workers))?;
    if let Some(path) = output {
        write_matrix_file(path, &res.best_state)?;
    }
    let s = singular_values(&realign(&res.best_state));
    report
        .set("best_value", num(res.best_value))
        .set("best_index", res.best_index)
        .set("evaluations", res.evaluations)
        .set("rejected", res.rejected)
        .set("seeded", res.seeded)
        .set("regime", res.regime.name())
        .set("closed_form", num(res.closed_form))
        .set("gap", num(res.gap))
        .set("upper_bound", num(res.upper_bound))
        .set("best_dims", dims_json(res.best_state.dims()))
        .set("best_singular_values", nums(&s))
        .set("best_trace_norm", num(trace_norm(&realign(&res.best_state))))
        .set("output", output.map(|p| p.display().to_string()));
    Ok(report)
}

fn cmd_verify(dims: &[(usize, usize)], samples: usize, seed: u64) -> Result<Report, CliError> {
    let mut report = Report::new("verify", json!({"samples": samples, "seed": seed, "dims": dims}));
    let mut total = 0;
    let mut rows = Vec::new();
    for &(m, n) in dims {
        let r = verify_properties(BipartiteDims::new(m, n)?, samples, seed)?;
        total += r.total_violations();
        rows.push(json!({
            "dims": [m, n],
            "samples": r.samples,
            "constrained_samples": r.constrained_samples,
            "top_singular_violations": r.top_singular_violations,
            "witness_violations": r.witness_violations,
            "uniform_chain_violations": r.uniform_chain_violations,
            "spectrum_chain_violations": r.spectrum_chain_violations,
            "esf_violations": r.esf_violations,
            "min_top_margin": num(r.min_top_margin),
        }));
    }
    report.set("results", Value::Array(rows)).set("violations", total);
    if total > 0 {
        report.exit_code = EXIT_VIOLATION;
    }
    Ok(report)
}
