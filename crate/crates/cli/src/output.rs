//! Shared output plumbing: format selection, sinks, and float rendering.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub(crate) struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub(crate) format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub(crate) output: Option<PathBuf>,
}

impl OutputArgs {
    pub(crate) fn sink(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.output {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        })
    }
}

/// 17 significant digits: enough to reproduce any f64 bit pattern.
pub(crate) fn float_field(x: f64) -> String {
    format!("{x:.16e}")
}

/// Absent values become empty CSV fields.
pub(crate) fn opt_float_field(x: Option<f64>) -> String {
    x.map(float_field).unwrap_or_default()
}

pub(crate) fn write_json<T: serde::Serialize>(mut w: impl Write, doc: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, doc)?;
    writeln!(w)?;
    w.flush()
}
