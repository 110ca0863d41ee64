//! `spectrum`: the operator's full eigenvalue table.

use std::io::Write;

use clap::Args;
use serde::Serialize;
use tt2_core::tableaux::Partition;
use tt2_core::Spectrum;

use crate::output::{self, Format, OutputArgs};
use crate::Failure;

/// Tableau enumeration grows like the involution numbers; past this the
/// table stops fitting casual memory budgets.
const DEGREE_CAP: usize = 14;

#[derive(Args)]
pub(crate) struct SpectrumArgs {
    /// Degree n of the alternating group A_n (n >= 3)
    #[arg(long)]
    pub(crate) n: usize,
    /// Lift the degree cap
    #[arg(long)]
    pub(crate) force: bool,
    #[command(flatten)]
    pub(crate) out: OutputArgs,
}

#[derive(Serialize)]
struct Row {
    num: i64,
    den: u64,
    mult: u64,
    shape: String,
    case: &'static str,
}

#[derive(Serialize)]
struct Doc {
    n: usize,
    den: u64,
    total_multiplicity: u64,
    entries: Vec<Row>,
}

/// Plus-joined parts ("3+1") so the CSV needs no quoting.
fn shape_label(shape: &Partition) -> String {
    shape
        .parts()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

pub(crate) fn run(args: &SpectrumArgs) -> Result<(), Failure> {
    if args.n > DEGREE_CAP && !args.force {
        return Err(Failure::usage(format!(
            "spectrum is capped at n <= {DEGREE_CAP}; pass --force to lift the cap"
        )));
    }
    let spectrum = Spectrum::compute(args.n)?;
    let total = u64::try_from(spectrum.total_multiplicity())
        .map_err(|_| Failure::check("total multiplicity exceeds u64"))?;
    let rows: Vec<Row> = spectrum
        .entries()
        .iter()
        .map(|e| Row {
            num: e.num,
            den: spectrum.den(),
            mult: e.mult,
            shape: shape_label(&e.shape),
            case: e.case.label(),
        })
        .collect();
    let mut w = args.out.sink()?;
    match args.out.format {
        Format::Csv => {
            writeln!(w, "num,den,mult,shape,case")?;
            for r in &rows {
                writeln!(w, "{},{},{},{},{}", r.num, r.den, r.mult, r.shape, r.case)?;
            }
            w.flush()?;
        }
        Format::Json => output::write_json(
            w,
            &Doc {
                n: args.n,
                den: spectrum.den(),
                total_multiplicity: total,
                entries: rows,
            },
        )?,
    }
    eprintln!(
        "spectrum n={}: {} entries, total multiplicity {}",
        args.n,
        spectrum.entries().len(),
        total
    );
    Ok(())
}
