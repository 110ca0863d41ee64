//! `bounds`: closed-form bound and moment table over a step range.

use std::io::Write;

use clap::Args;
use serde::Serialize;
use tt2_core::{bounds, BoundPoint, Spectrum};

use crate::output::{self, Format, OutputArgs};
use crate::Failure;

/// Past this the tableau enumeration behind the spectral bound is too
/// large to build casually; the column goes empty instead.
const SPECTRAL_CAP: usize = 14;

#[derive(Args)]
pub(crate) struct BoundsArgs {
    /// Degree n of the alternating group A_n (n >= 5)
    #[arg(long)]
    pub(crate) n: usize,
    /// Last step of the table; rows cover k = 0..=k-max
    #[arg(long, default_value_t = 60)]
    pub(crate) k_max: u32,
    #[command(flatten)]
    pub(crate) out: OutputArgs,
}

#[derive(Serialize)]
struct Row {
    k: u32,
    ub_spectral: Option<f64>,
    ub_envelope: f64,
    lb_fixedpoint: f64,
    e_k: f64,
    v_k: f64,
}

#[derive(Serialize)]
struct Doc<'a> {
    n: usize,
    cutoff: f64,
    rows: &'a [Row],
}

pub(crate) fn run(args: &BoundsArgs) -> Result<(), Failure> {
    if args.n < 5 {
        return Err(Failure::usage(
            "bounds requires --n of at least 5, the variance formula's domain",
        ));
    }
    let spectrum = if args.n <= SPECTRAL_CAP {
        Some(Spectrum::compute(args.n)?)
    } else {
        None
    };
    let mut rows = Vec::with_capacity(args.k_max as usize + 1);
    for k in 0..=args.k_max {
        let point = BoundPoint::compute(args.n, k, spectrum.as_ref())?;
        rows.push(Row {
            k: point.k,
            ub_spectral: point.ub_spectral,
            ub_envelope: point.ub_envelope,
            lb_fixedpoint: point.lb_fixedpoint,
            e_k: point.e_k,
            v_k: point.v_k,
        });
    }
    let mut w = args.out.sink()?;
    match args.out.format {
        Format::Csv => {
            writeln!(w, "k,ub_spectral,ub_envelope,lb_fixedpoint,e_k,v_k")?;
            for r in &rows {
                writeln!(
                    w,
                    "{},{},{},{},{},{}",
                    r.k,
                    output::opt_float_field(r.ub_spectral),
                    output::float_field(r.ub_envelope),
                    output::float_field(r.lb_fixedpoint),
                    output::float_field(r.e_k),
                    output::float_field(r.v_k)
                )?;
            }
            w.flush()?;
        }
        Format::Json => output::write_json(
            w,
            &Doc {
                n: args.n,
                cutoff: bounds::cutoff_time(args.n),
                rows: &rows,
            },
        )?,
    }
    Ok(())
}
