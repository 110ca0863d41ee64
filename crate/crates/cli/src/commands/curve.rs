//! `tv-curve`: exact distance to uniform with bounds, step by step.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;
use tt2_core::walk::{self, ActionTable, DistVector};
use tt2_core::{bounds, MeasureSpec, Spectrum};

use crate::output::{self, Format, OutputArgs};
use crate::{with_threads, Failure};

const FLOAT_CAP: usize = 10;
const EXACT_CAP: usize = 6;

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub(crate) enum Mode {
    /// Double-precision probability vectors
    Float64,
    /// Exact integer numerators over (2n-3)^k
    Exact,
}

impl Mode {
    fn label(self) -> &'static str {
        match self {
            Mode::Float64 => "float64",
            Mode::Exact => "exact",
        }
    }
}

#[derive(Args)]
pub(crate) struct CurveArgs {
    /// Degree n of the alternating group A_n (n >= 4)
    #[arg(long)]
    pub(crate) n: usize,
    /// Last step of the curve; rows cover k = 0..=k-max
    #[arg(long, default_value_t = 40)]
    pub(crate) k_max: u32,
    /// Arithmetic mode
    #[arg(long, value_enum, default_value_t = Mode::Float64)]
    pub(crate) mode: Mode,
    /// Directory for action-table caches
    #[arg(long, env = "TT2_CACHE_DIR")]
    pub(crate) cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub(crate) threads: Option<usize>,
    /// Refuse to start if the estimated working set exceeds this
    #[arg(long, default_value_t = 1024)]
    pub(crate) mem_budget_mb: u64,
    /// Convolve without an action table: slower, much smaller
    #[arg(long)]
    pub(crate) low_memory: bool,
    /// Lift the per-mode degree caps
    #[arg(long)]
    pub(crate) force: bool,
    #[command(flatten)]
    pub(crate) out: OutputArgs,
}

#[derive(Serialize)]
struct Row {
    k: u32,
    tv: f64,
    ub_spectral: f64,
    ub_envelope: f64,
    lb_fixedpoint: Option<f64>,
}

#[derive(Serialize)]
struct Doc<'a> {
    n: usize,
    mode: &'static str,
    rows: &'a [Row],
}

enum Engine {
    Table(ActionTable),
    Direct(MeasureSpec),
}

/// Working-set estimate before anything is allocated: the action table
/// plus two distribution vectors. Exact numerators gain about
/// log2(2n-3) bits per step; 48 bytes cover header and allocator slack.
fn working_set_bytes(args: &CurveArgs) -> Result<u128, Failure> {
    let entries = walk::dist_vector_bytes(args.n)? / 8;
    let per_vector = match args.mode {
        Mode::Float64 => walk::dist_vector_bytes(args.n)?,
        Mode::Exact => {
            let bits = (2 * args.n as u128 - 3).next_power_of_two().trailing_zeros() as u128;
            entries * (48 + args.k_max as u128 * bits / 8)
        }
    };
    let table = if args.low_memory {
        0
    } else {
        walk::action_table_bytes(args.n)?
    };
    Ok(table + 2 * per_vector)
}

pub(crate) fn run(args: &CurveArgs) -> Result<(), Failure> {
    if args.n < 4 {
        return Err(Failure::usage("tv-curve requires --n of at least 4"));
    }
    let cap = match args.mode {
        Mode::Float64 => FLOAT_CAP,
        Mode::Exact => EXACT_CAP,
    };
    if args.n > cap && !args.force {
        return Err(Failure::usage(format!(
            "tv-curve in {} mode is capped at n <= {cap}; pass --force to lift the cap",
            args.mode.label()
        )));
    }
    let need = working_set_bytes(args)?;
    let budget = args.mem_budget_mb as u128 * 1024 * 1024;
    if need > budget {
        return Err(Failure::resource(format!(
            "estimated working set {} MiB exceeds the {} MiB budget; \
             raise --mem-budget-mb or pass --low-memory",
            need / (1024 * 1024),
            args.mem_budget_mb
        )));
    }
    with_threads(args.threads, || run_inner(args))
}

fn run_inner(args: &CurveArgs) -> Result<(), Failure> {
    let n = args.n;
    let spectrum = Spectrum::compute(n)?;
    let engine = if args.low_memory {
        Engine::Direct(MeasureSpec::build(n)?)
    } else {
        Engine::Table(ActionTable::load_or_build(n, args.cache_dir.as_deref())?)
    };
    let mut dist = match args.mode {
        Mode::Float64 => DistVector::delta_identity_float(n)?,
        Mode::Exact => DistVector::delta_identity_exact(n)?,
    };
    let mut rows = Vec::with_capacity(args.k_max as usize + 1);
    for k in 0..=args.k_max {
        let tv = dist.tv_to_uniform()?;
        eprintln!("tv-curve n={n} k={k}: tv={tv:.6}");
        rows.push(Row {
            k,
            tv,
            ub_spectral: bounds::upper_bound_spectral_from(&spectrum, k),
            ub_envelope: bounds::upper_bound_envelope(n, k)?,
            lb_fixedpoint: if n >= 5 {
                Some(bounds::lower_bound_fixed_points(n, k)?)
            } else {
                None
            },
        });
        if k < args.k_max {
            dist = match &engine {
                Engine::Table(t) => dist.convolve_step(t)?,
                Engine::Direct(m) => dist.convolve_step_direct(m)?,
            };
        }
    }
    let mut w = args.out.sink()?;
    match args.out.format {
        Format::Csv => {
            writeln!(w, "k,tv,ub_spectral,ub_envelope,lb_fixedpoint")?;
            for r in &rows {
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    r.k,
                    output::float_field(r.tv),
                    output::float_field(r.ub_spectral),
                    output::float_field(r.ub_envelope),
                    output::opt_float_field(r.lb_fixedpoint)
                )?;
            }
            w.flush()?;
        }
        Format::Json => output::write_json(
            w,
            &Doc {
                n,
                mode: args.mode.label(),
                rows: &rows,
            },
        )?,
    }
    Ok(())
}
