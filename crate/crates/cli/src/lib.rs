//! IO companion to `ssgs-core`: CSV formats, pipeline normalization, and
//! verification rendering shared between the `ssgs` binary and its tests.

pub mod csv;

use std::fmt::Write as _;

use ssgs_core::decimal::Decimal;
use ssgs_core::signal::{scale_to_positive_integers, SignalError};
use ssgs_core::verify::SuiteReport;

fn as_positive_integers(samples: &[Decimal]) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(samples.len());
    for d in samples {
        let scale = 10i128.checked_pow(d.frac_digits())?;
        let mantissa = d.mantissa();
        if mantissa % scale != 0 {
            return None;
        }
        let value = mantissa / scale;
        if value < 1 {
            return None;
        }
        out.push(u64::try_from(value).ok()?);
    }
    Some(out)
}

/// Turn an ingested series into the integer series the window pipeline
/// runs on.
///
/// A series that is already positive integers is taken as given, so its
/// window statistics are those of the values on file. Anything else
/// (fractional values, zeros, negatives) is normalized by the recorded
/// decimal shift plus the offset that puts the minimum on 1.
pub fn normalize_series(samples: &[Decimal]) -> Result<Vec<u64>, SignalError> {
    if samples.is_empty() {
        return Err(SignalError::EmptySeries);
    }
    if let Some(raw) = as_positive_integers(samples) {
        return Ok(raw);
    }
    scale_to_positive_integers(samples).map(|(integers, _)| integers)
}

/// Render verification suite reports as the CLI prints them and compute
/// the exit code: 0 when every suite passed, 1 otherwise.
pub fn render_verify(seed: u64, cases: u64, reports: &[SuiteReport]) -> (String, u8) {
    let mut out = String::new();
    writeln!(out, "seed {seed} cases {cases}").unwrap();
    let mut all_passed = true;
    for report in reports {
        if report.passed() {
            writeln!(out, "{}: pass ({} cases)", report.name, report.cases).unwrap();
        } else {
            all_passed = false;
            writeln!(
                out,
                "{}: FAIL ({})",
                report.name,
                report.failure.as_deref().unwrap_or("unknown failure")
            )
            .unwrap();
        }
    }
    (out, if all_passed { 0 } else { 1 })
}
