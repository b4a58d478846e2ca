use std::path::{Path, PathBuf};
use std::process::Command as Process;

use clap::Parser;
use realign_cli::{execute, parse_matrix_file, parse_matrix_str, write_matrix_file, Cli, CliError, MatrixFile, Threaded};
use realign_core::explore::{candidate_rng, maximize_esf, maximize_esf_with, sample_density, SearchConfig, SearchMode};
use realign_core::{BipartiteDims, Complex64, ComplexMatrix, DensityMatrix, Error};
use serde_json::Value;

fn bell() -> DensityMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let psi = [h, 0.0, 0.0, h].map(|v| Complex64::new(v, 0.0));
    DensityMatrix::pure(BipartiteDims::new(2, 2).unwrap(), &psi).unwrap()
}

fn run(args: &[&str]) -> Result<realign_cli::Report, CliError> {
    let cli = Cli::try_parse_from(std::iter::once("realign").chain(args.iter().copied())).unwrap();
    execute(&cli.command)
}

fn binary(args: &[&str]) -> (i32, Value, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_realign")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let body = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), body, String::from_utf8(out.stderr).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn round_trip_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        for index in 0..20 {
            let rho = sample_density(BipartiteDims::new(m, n).unwrap(), &mut candidate_rng(42, index));
            let path = dir.path().join(format!("{m}x{n}-{index}.json"));
            write_matrix_file(&path, &rho).unwrap();
            let back = parse_matrix_file(&path).unwrap();
            assert!(!back.swapped);
            assert_eq!(back.state.matrix(), rho.matrix(), "entries differ after round trip");
        }
    }
}

#[test]
fn swapped_input_is_canonicalized() {
    let rho = sample_density(BipartiteDims::new(3, 2).unwrap(), &mut candidate_rng(1, 0));
    let text = serde_json::to_string(&MatrixFile::from_state(&rho)).unwrap();
    let loaded = parse_matrix_str(&text, Path::new("x.json")).unwrap();
    assert!(loaded.swapped);
    assert_eq!(loaded.state.dims(), BipartiteDims::new(2, 3).unwrap());
}

#[test]
fn malformed_files_are_parse_errors() {
    let p = Path::new("bad.json");
    for text in [
        "{",
        r#"{"dims": [2, 2], "re": [[1]], "im": [[0]]}"#,
        r#"{"dims": [1, 1], "re": [[1]], "im": [[0]], "extra": 1}"#,
        r#"{"dims": [1, 1], "re": [[1]]}"#,
    ] {
        assert!(matches!(parse_matrix_str(text, p), Err(CliError::Parse { .. })), "{text}");
    }
}

#[test]
fn wrong_trace_is_a_validation_error_with_diagnostics() {
    let text = r#"{"dims": [1, 2], "re": [[0.5, 0], [0, 0.4]], "im": [[0, 0], [0, 0]]}"#;
    match parse_matrix_str(text, Path::new("t.json")) {
        Err(CliError::Validation {
            source: Error::NotDensity(v),
            ..
        }) => {
            assert!((v.trace - 0.9).abs() < 1e-15);
            assert!((v.min_eigenvalue - 0.4).abs() < 1e-15);
        }
        other => panic!("expected validation error, got {other:?}"),
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    std::fs::write(&path, text).unwrap();
    let (code, _, stderr) = binary(&["test", "--in", path_str(&path)]);
    assert_eq!(code, 2);
    assert!(stderr.contains("0.9"), "{stderr}");
}

#[test]
fn bell_state_is_certified_entangled() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bell.json");
    write_matrix_file(&path, &bell()).unwrap();

    let (code, body, _) = binary(&["test", "--criterion", "ccnr", "--in", path_str(&path)]);
    assert_eq!(code, 1);
    assert_eq!(body["version"], realign_core::VERSION);
    assert_eq!(body["command"], "test");
    assert_eq!(body["results"][0]["statistic"], 2.0);
    assert_eq!(body["results"][0]["verdict"], "certified_entangled");

    let report = run(&["test", "--criterion", "ppt", "--in", path_str(&path)]).unwrap();
    assert_eq!(report.exit_code, 1);
    assert_eq!(report.body["results"][0]["statistic"], -0.5);

    let report = run(&["realign", "--in", path_str(&path)]).unwrap();
    assert_eq!(report.exit_code, 0);
    assert_eq!(report.body["trace_norm"], 2.0);
    assert_eq!(report.body["singular_values"], serde_json::json!([0.5, 0.5, 0.5, 0.5]));
}

#[test]
fn maximally_mixed_state_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.json");
    write_matrix_file(&path, &DensityMatrix::maximally_mixed(BipartiteDims::new(2, 3).unwrap())).unwrap();
    let report = run(&["test", "--in", path_str(&path)]).unwrap();
    assert_eq!(report.exit_code, 0);
    assert_eq!(report.body["entangled"], false);
    assert_eq!(report.body["results"].as_array().unwrap().len(), 2);
}

#[test]
fn bound_examples() {
    let r = run(&["bound", "--m", "2", "--n", "2", "--ell", "2"]).unwrap();
    assert_eq!(r.body["value"], 0.333333333333);
    assert_eq!(r.body["regime"], "SpikeFlat");

    let r = run(&["bound", "--m", "2", "--n", "8", "--ell", "2"]).unwrap();
    assert_eq!((r.body["regime"].as_str(), r.body["value"].as_f64()), (Some("Flat"), Some(0.375)));

    let (code, body, _) = binary(&["bound", "--m", "3", "--n", "26", "--ell", "2"]);
    assert_eq!(code, 0);
    assert_eq!(body["regime"], "UnknownGap");
    assert_eq!(body["value"], Value::Null);

    let r = run(&["bound", "--m", "3", "--n", "3", "--ell", "2", "--sep"]).unwrap();
    assert_eq!(r.body["value"], 0.416666666667);
    assert!(matches!(run(&["bound", "--m", "2", "--n", "3", "--ell", "2", "--sep"]), Err(CliError::Usage(_))));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = binary(&["estimate", "--mode", "all", "--m", "2", "--n", "2", "--ell", "2", "--budget", "10"]);
    assert_eq!(code, 2, "missing --seed");
    let (code, _, _) = binary(&["bound", "--m", "2"]);
    assert_eq!(code, 2);
    let (code, _, _) = binary(&["construct", "--kind", "spike", "--m", "3", "--n", "26"]);
    assert_eq!(code, 2, "infeasible construction");
}

#[test]
fn construct_writes_a_valid_state() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spike.json");
    let r = run(&["construct", "--kind", "spike", "--m", "2", "--n", "3", "--out", path_str(&path)]).unwrap();
    assert_eq!(r.body["trace_norm"], 1.0);
    assert_eq!(r.body["feasibility"]["feasible"], true);
    let back = parse_matrix_file(&path).unwrap();
    assert_eq!(back.state.dims(), BipartiteDims::new(2, 3).unwrap());

    let (code, body, _) = binary(&["--format", "table", "construct", "--kind", "witness", "--m", "2", "--n", "2"]);
    assert_eq!((code, body), (0, Value::Null));
    let out = Process::new(env!("CARGO_BIN_EXE_realign"))
        .args(["construct", "--kind", "flat", "--m", "2", "--n", "8", "--format", "table"])
        .output()
        .unwrap();
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.lines().any(|l| l.starts_with("trace_norm") && l.ends_with("1.0")), "{table}");
}

#[test]
fn estimate_reports_seeded_closed_form() {
    let r = run(&["estimate", "--mode", "sep", "--m", "2", "--n", "2", "--ell", "2", "--budget", "100", "--seed", "3"])
        .unwrap();
    assert_eq!(r.body["best_value"], 0.333333333333);
    assert!(r.body["gap"].as_f64().unwrap().abs() < 1e-9);
    assert_eq!(r.body["input"]["seed"], 3);
}

#[test]
fn threaded_runner_matches_sequential() {
    for mode in [SearchMode::AllStatesConstrained, SearchMode::SeparableStates] {
        let mut cfg = SearchConfig::new(2, 3, 3, mode, 700, 11).unwrap();
        cfg.seed_with_constructions = false;
        let expected = maximize_esf(&cfg).unwrap();
        for workers in [1, 2, 4, 7] {
            assert_eq!(maximize_esf_with(&cfg, &Threaded::new(workers)).unwrap(), expected);
        }
    }
    let a = run(&["estimate", "--mode", "all", "--m", "2", "--n", "3", "--ell", "2", "--budget", "300", "--seed", "5"]);
    let b = run(&[
        "estimate", "--mode", "all", "--m", "2", "--n", "3", "--ell", "2", "--budget", "300", "--seed", "5", "--workers",
        "4",
    ]);
    let (mut a, mut b) = (a.unwrap().body, b.unwrap().body);
    a["input"]["workers"] = Value::Null;
    b["input"]["workers"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn verify_runs_default_dims() {
    let r = run(&["verify", "--samples", "30", "--seed", "2"]).unwrap();
    assert_eq!(r.exit_code, 0);
    assert_eq!(r.body["violations"], 0);
    assert_eq!(r.body["results"].as_array().unwrap().len(), 4);
    let r = run(&["verify", "--samples", "5", "--seed", "2", "--m", "2", "--n", "2"]).unwrap();
    assert_eq!(r.body["results"].as_array().unwrap().len(), 1);
}

#[test]
fn matrix_file_rejects_non_hermitian() {
    let mat = ComplexMatrix::from_fn(2, 2, |i, j| Complex64::new(if i == j { 0.5 } else { 0.0 }, (i as f64) * 0.1));
    let file = MatrixFile {
        dims: [1, 2],
        re: (0..2).map(|i| mat.row(i).iter().map(|z| z.re).collect()).collect(),
        im: (0..2).map(|i| mat.row(i).iter().map(|z| z.im).collect()).collect(),
    };
    let text = serde_json::to_string(&file).unwrap();
    assert!(matches!(parse_matrix_str(&text, &PathBuf::from("h.json")), Err(CliError::Validation { .. })));
}
