//! `granite`: profile, benchmark, and generate sparse networks.
//!
//! Exit codes: 0 on success, 1 when output was produced but some sections
//! or benchmark runs failed, 2 on fatal errors (bad arguments, unreadable
//! input, no output at all).

mod args;
mod commands;
mod spec;

use args::{Cli, Command};
use clap::Parser;
use commands::Outcome;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Profile(a) => commands::run_profile(a),
        Command::Bench(a) => commands::run_bench(a),
        Command::Generate(a) => commands::run_generate(a),
    };
    match result {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Partial) => ExitCode::from(1),
        Err(e) => {
            eprintln!("granite: {e}");
            ExitCode::from(2)
        }
    }
}
