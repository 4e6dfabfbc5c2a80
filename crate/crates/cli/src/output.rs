//! Report encoding and destination handling.

use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::Value;

use crate::config::Format;

/// Rows for CSV output.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }
}

/// What a subcommand produced.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub json: Value,
    /// Present only for sequence- or record-shaped results.
    pub table: Option<Table>,
    /// A verified property failed.
    pub violation: bool,
}

impl Outcome {
    pub fn report(json: Value) -> Self {
        Self {
            json,
            table: None,
            violation: false,
        }
    }
}

pub fn render(outcome: &Outcome, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut bytes = serde_json::to_vec_pretty(&outcome.json)?;
            bytes.push(b'\n');
            Ok(bytes)
        }
        Format::Csv => {
            let Some(table) = &outcome.table else {
                bail!("CSV output is available for sequences and record lists only; use --format json");
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.header)?;
            for row in &table.rows {
                w.write_record(row)?;
            }
            Ok(w.into_inner().context("flushing CSV")?)
        }
    }
}

pub fn emit(outcome: &Outcome, format: Format, dest: Option<&Path>) -> Result<()> {
    let bytes = render(outcome, format)?;
    match dest {
        Some(path) => {
            std::fs::write(path, &bytes).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(&bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}
