//! `simulate`: Monte Carlo fixed-point statistics from sampled walks.

use std::io::Write;

use clap::Args;
use serde::Serialize;
use tt2_core::estimate_fixed_point_stats;

use crate::output::{self, Format, OutputArgs};
use crate::{with_threads, Failure};

#[derive(Args)]
pub(crate) struct SimulateArgs {
    /// Degree n of the alternating group A_n (n >= 3)
    #[arg(long)]
    pub(crate) n: usize,
    /// Steps per sampled trajectory
    #[arg(long)]
    pub(crate) k: u32,
    /// Independent trajectories
    #[arg(long, default_value_t = 100_000)]
    pub(crate) trials: u64,
    /// Base seed; per-trial streams derive from (seed, trial index)
    #[arg(long, default_value_t = 0)]
    pub(crate) seed: u64,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub(crate) threads: Option<usize>,
    #[command(flatten)]
    pub(crate) out: OutputArgs,
}

#[derive(Serialize)]
struct Doc {
    n: usize,
    k: u32,
    trials: u64,
    seed: u64,
    mean_fixed_points: f64,
    var_fixed_points: f64,
    ci_half_width: f64,
}

pub(crate) fn run(args: &SimulateArgs) -> Result<(), Failure> {
    let stats = with_threads(args.threads, || {
        estimate_fixed_point_stats(args.n, args.k, args.trials, args.seed)
    })?;
    let doc = Doc {
        n: stats.n,
        k: stats.k,
        trials: stats.trials,
        seed: stats.seed,
        mean_fixed_points: stats.mean,
        var_fixed_points: stats.variance,
        ci_half_width: stats.ci_half_width,
    };
    let mut w = args.out.sink()?;
    match args.out.format {
        Format::Csv => {
            writeln!(
                w,
                "n,k,trials,seed,mean_fixed_points,var_fixed_points,ci_half_width"
            )?;
            writeln!(
                w,
                "{},{},{},{},{},{},{}",
                doc.n,
                doc.k,
                doc.trials,
                doc.seed,
                output::float_field(doc.mean_fixed_points),
                output::float_field(doc.var_fixed_points),
                output::float_field(doc.ci_half_width)
            )?;
            w.flush()?;
        }
        Format::Json => output::write_json(w, &doc)?,
    }
    Ok(())
}
