//! Command-line front end for the shuffle toolkit: spectrum dumps, exact
//! distance-to-uniform curves, closed-form bound tables, Monte Carlo
//! sampling, and a self-check matrix.

mod commands;
mod output;

use clap::{Parser, Subcommand};

use commands::bounds::BoundsArgs;
use commands::curve::CurveArgs;
use commands::simulate::SimulateArgs;
use commands::spectrum::SpectrumArgs;
use commands::verify::VerifyArgs;

/// A command failure carrying its process exit code: 1 for failed checks
/// or I/O, 2 for usage errors, 3 for refused resource requests.
pub(crate) struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    pub(crate) fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub(crate) fn resource(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    pub(crate) fn check(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<tt2_core::Error> for Failure {
    fn from(e: tt2_core::Error) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

/// Runs `f` on a dedicated rayon pool when a thread count is requested.
/// Outputs never depend on the count; only wall time does.
pub(crate) fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("building the worker pool")
            .install(f),
    }
}

#[derive(Parser)]
#[command(
    name = "tt2",
    version,
    about = "Mixing diagnostics for the transpose top-2 shuffle on the alternating group A_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the shuffle operator's full eigenvalue table from tableau data
    Spectrum(SpectrumArgs),
    /// Trace the exact distance to uniform, step by step, with its bounds
    TvCurve(CurveArgs),
    /// Tabulate the closed-form bounds and fixed-point moments
    Bounds(BoundsArgs),
    /// Sample trajectories and report fixed-point statistics
    Simulate(SimulateArgs),
    /// Run the built-in consistency checks; exit 0 only if all pass
    Verify(VerifyArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectrum(args) => commands::spectrum::run(args),
        Command::TvCurve(args) => commands::curve::run(args),
        Command::Bounds(args) => commands::bounds::run(args),
        Command::Simulate(args) => commands::simulate::run(args),
        Command::Verify(args) => commands::verify::run(args),
    };
    if let Err(failure) = result {
        eprintln!("error: {}", failure.message);
        std::process::exit(failure.code);
    }
}
