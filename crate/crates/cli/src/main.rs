use std::process::ExitCode;

use clap::Parser;
use realign_cli::{execute, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(report) => {
            println!("{}", report.render(cli.format));
            ExitCode::from(report.exit_code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
