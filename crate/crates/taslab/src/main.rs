use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = taslab::cli::Cli::parse();
    ExitCode::from(taslab::cli::run(cli))
}
