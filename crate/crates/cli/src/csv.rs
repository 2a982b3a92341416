//! CSV ingestion and emission for the signal pipeline.
//!
//! Input: one record per line, either `value` or `index,value`, with an
//! optional single header line detected by a non-numeric first field.
//! Output: `position,am,nma,range,sd,new_sd` with reals fixed to six
//! decimals and LF line endings, so repeated runs are byte-identical.

use std::fmt;
use std::io::{self, BufRead, Write};

use ssgs_core::decimal::Decimal;
use ssgs_core::signal::{SignalSeries, WindowReport};

/// Ingestion failures.
#[derive(Debug)]
pub enum CsvError {
    Io(io::Error),
    /// No data records at all.
    Empty,
    /// A record that does not fit the format, with its line number.
    Malformed { line: usize, message: String },
}

impl fmt::Display for CsvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CsvError::Io(e) => write!(f, "{e}"),
            CsvError::Empty => write!(f, "input contains no data records"),
            CsvError::Malformed { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl std::error::Error for CsvError {}

impl From<io::Error> for CsvError {
    fn from(e: io::Error) -> Self {
        CsvError::Io(e)
    }
}

/// Read a series of decimal samples.
pub fn ingest_csv<R: BufRead>(reader: R) -> Result<SignalSeries, CsvError> {
    let mut samples = Vec::new();
    let mut origin = 0i64;
    let mut seen_record = false;
    for (index, line) in reader.lines().enumerate() {
        let number = index + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() > 2 {
            return Err(CsvError::Malformed {
                line: number,
                message: format!("too many fields ({})", fields.len()),
            });
        }
        let first = fields[0].trim();
        if !seen_record && Decimal::parse(first).is_err() {
            // header line
            seen_record = true;
            continue;
        }
        seen_record = true;
        let value_field = fields.last().unwrap().trim();
        let value = Decimal::parse(value_field).map_err(|e| CsvError::Malformed {
            line: number,
            message: format!("bad value {value_field:?}: {e}"),
        })?;
        if fields.len() == 2 {
            let idx: i64 = first.parse().map_err(|_| CsvError::Malformed {
                line: number,
                message: format!("bad index {first:?}"),
            })?;
            if samples.is_empty() {
                origin = idx;
            }
        }
        samples.push(value);
    }
    if samples.is_empty() {
        return Err(CsvError::Empty);
    }
    Ok(SignalSeries { samples, origin })
}

/// Write window reports; deterministic byte output.
pub fn emit_csv<W: Write>(reports: &[WindowReport], mut sink: W) -> io::Result<()> {
    sink.write_all(b"position,am,nma,range,sd,new_sd\n")?;
    for r in reports {
        writeln!(
            sink,
            "{},{:.6},{:.6},{},{:.6},{:.6}",
            r.position, r.am, r.nma, r.range, r.sd, r.new_sd
        )?;
    }
    Ok(())
}
