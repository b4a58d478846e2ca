//! File formats, reports and the command-line driver for `realign-core`.

pub mod cli;
pub mod commands;
pub mod error;
pub mod matrix_file;
pub mod report;
pub mod runner;

pub use cli::{Cli, Command};
pub use commands::{execute, EXIT_ENTANGLED, EXIT_USAGE, EXIT_VIOLATION};
pub use error::CliError;
pub use matrix_file::{parse_matrix_file, parse_matrix_str, write_matrix_file, LoadedState, MatrixFile, PlainMatrix};
pub use report::{OutputFormat, Report};
pub use runner::Threaded;
