use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::report::OutputFormat;

#[derive(Debug, Parser)]
#[command(name = "realign", version, about = "Realignment and PPT separability tools")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Ccnr,
    Ppt,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Flat,
    Spike,
    Witness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// All states with realignment trace norm at most 1.
    All,
    /// Separable states.
    Sep,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Realign a state and report the singular values of the result.
    Realign {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Write the realigned matrix here.
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Run the CCNR and/or PPT test; exits 1 when entanglement is certified.
    Test {
        #[arg(long, value_enum, default_value_t = CriterionArg::Both)]
        criterion: CriterionArg,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Closed-form bound on the order-`ell` symmetric function.
    Bound {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        /// Bound over separable states (requires m = n).
        #[arg(long)]
        sep: bool,
    },
    /// Build an extremal state.
    Construct {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Seeded random search for large symmetric-function values.
    Estimate {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Start from random samples only.
        #[arg(long)]
        no_construction_seed: bool,
        /// Write the best state here.
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check the structural inequalities on random states; exits 3 on a violation.
    Verify {
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
    },
}
