//! `sirk` — construct symplectic implicit Runge-Kutta tableaux, integrate
//! the harmonic-oscillator benchmark systems, and measure first-integral
//! preservation against the exact flows.

mod commands;
mod config;
mod method;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::config::{ConvergeArgs, ExperimentArgs, TableauArgs, ValidateArgs};

#[derive(Parser)]
#[command(
    name = "sirk",
    version,
    about = "Symplectic implicit Runge-Kutta toolkit: tableaux, oscillator \
             integration, first-integral drift"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a Butcher tableau and print it with its residual diagnostics.
    Tableau(TableauArgs),
    /// Integrate one oscillator case and export the trajectory as CSV.
    Integrate(ExperimentArgs),
    /// Integrate and measure first-integral errors (CSV series + JSON summary).
    Invariants(ExperimentArgs),
    /// Empirical convergence-order study against the exact flow.
    Converge(ConvergeArgs),
    /// Check every first integral for constancy along the exact flow.
    Validate(ValidateArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Tableau(args) => commands::tableau::run(args),
        Command::Integrate(args) => commands::integrate::run(args),
        Command::Invariants(args) => commands::invariants::run(args),
        Command::Converge(args) => commands::converge::run(args),
        Command::Validate(args) => commands::validate::run(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
