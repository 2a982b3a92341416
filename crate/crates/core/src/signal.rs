//! Series scaling and the sliding-window moving-average pipeline.
//!
//! Raw samples are finite decimals. Before windowing they are mapped to
//! positive integers: a uniform decimal shift by the largest written
//! fractional digit count, then an additive offset that puts the minimum
//! exactly on 1. Both steps are order-preserving and exactly invertible;
//! nothing else touches the data.

use alloc::vec::Vec;
use core::fmt;

use crate::decimal::Decimal;
use crate::stats::{self, StatsError};

/// A parsed input series plus the index carried by its first sample.
#[derive(Clone, Debug, PartialEq)]
pub struct SignalSeries {
    pub samples: Vec<Decimal>,
    pub origin: i64,
}

/// The recorded integer-scaling step: `x -> x * 10^decimal_shift + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScalingTransform {
    /// Power of ten applied to every sample.
    pub decimal_shift: u32,
    /// Offset that lands the minimum on 1.
    pub offset: i128,
}

impl ScalingTransform {
    /// Map one scaled integer back to the original decimal value.
    pub fn invert(&self, value: u64) -> Decimal {
        Decimal::from_parts(i128::from(value) - self.offset, self.decimal_shift)
    }
}

/// Signal pipeline failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignalError {
    /// No samples to process.
    EmptySeries,
    /// Window length outside `1..=len`.
    WindowOutOfRange { window: usize, len: usize },
    /// A scaled sample does not fit the integer range.
    ValueOutOfRange,
    /// A per-window statistics failure.
    Stats(StatsError),
}

impl fmt::Display for SignalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignalError::EmptySeries => write!(f, "series is empty"),
            SignalError::WindowOutOfRange { window, len } => {
                write!(f, "window length {window} outside 1..={len}")
            }
            SignalError::ValueOutOfRange => write!(f, "scaled value out of range"),
            SignalError::Stats(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SignalError {}

impl From<StatsError> for SignalError {
    fn from(e: StatsError) -> Self {
        SignalError::Stats(e)
    }
}

/// Scale a series to positive integers with minimum exactly 1.
pub fn scale_to_positive_integers(
    samples: &[Decimal],
) -> Result<(Vec<u64>, ScalingTransform), SignalError> {
    if samples.is_empty() {
        return Err(SignalError::EmptySeries);
    }
    let shift = samples.iter().map(Decimal::frac_digits).max().unwrap();
    let scaled: Vec<i128> = samples
        .iter()
        .map(|d| d.to_scaled(shift).ok_or(SignalError::ValueOutOfRange))
        .collect::<Result<_, _>>()?;
    let offset = 1 - *scaled.iter().min().unwrap();
    let integers = scaled
        .iter()
        .map(|&s| u64::try_from(s + offset).map_err(|_| SignalError::ValueOutOfRange))
        .collect::<Result<_, _>>()?;
    Ok((
        integers,
        ScalingTransform {
            decimal_shift: shift,
            offset,
        },
    ))
}

/// One record of the moving-average pipeline.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WindowReport {
    /// Start index of the window within the series.
    pub position: usize,
    /// Window length.
    pub length: usize,
    /// Exact sum of the window values.
    pub total: u128,
    /// Window arithmetic mean (the moving average).
    pub am: f64,
    /// Window New Mean (the new moving average); never exceeds `am`.
    pub nma: f64,
    /// Max minus min of the window.
    pub range: u64,
    /// Population standard deviation of the window.
    pub sd: f64,
    /// Dispersion about the window New Mean.
    pub new_sd: f64,
}

/// One report per stride-1 window of length `window`.
pub fn moving_windows(series: &[u64], window: usize) -> Result<Vec<WindowReport>, SignalError> {
    if window == 0 || window > series.len() {
        return Err(SignalError::WindowOutOfRange {
            window,
            len: series.len(),
        });
    }
    let mut reports = Vec::with_capacity(series.len() - window + 1);
    for position in 0..=(series.len() - window) {
        let slice = &series[position..position + window];
        let summary = stats::summarize(slice)?;
        let min = *slice.iter().min().unwrap();
        let max = *slice.iter().max().unwrap();
        reports.push(WindowReport {
            position,
            length: window,
            total: summary.total,
            am: summary.am,
            nma: summary.new_mean,
            range: max - min,
            sd: summary.sd,
            new_sd: summary.new_sd,
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decimals(texts: &[&str]) -> Vec<Decimal> {
        texts.iter().map(|t| Decimal::parse(t).unwrap()).collect()
    }

    #[test]
    fn scaling_lands_the_minimum_on_one() {
        let (ints, t) = scale_to_positive_integers(&decimals(&["101", "99", "110"])).unwrap();
        assert_eq!(ints, vec![3, 1, 12]);
        assert_eq!(t.decimal_shift, 0);
        assert_eq!(t.offset, -98);

        let (ints, t) = scale_to_positive_integers(&decimals(&["1", "5", "9"])).unwrap();
        assert_eq!(ints, vec![1, 5, 9]);
        assert_eq!(t.offset, 0);

        let (ints, t) = scale_to_positive_integers(&decimals(&["0.5", "1.5"])).unwrap();
        assert_eq!(ints, vec![1, 11]);
        assert_eq!(t.decimal_shift, 1);
        assert_eq!(t.offset, -4);
    }

    #[test]
    fn scaling_handles_negatives() {
        let (ints, t) = scale_to_positive_integers(&decimals(&["-2.5", "0", "1.25"])).unwrap();
        assert_eq!(ints, vec![1, 251, 376]);
        assert_eq!(t.decimal_shift, 2);
        assert_eq!(t.offset, 251);
    }

    #[test]
    fn inverse_recovers_the_samples() {
        let samples = decimals(&["-2.5", "0", "1.25", "0.50"]);
        let (ints, t) = scale_to_positive_integers(&samples).unwrap();
        for (v, original) in ints.iter().zip(&samples) {
            assert_eq!(&t.invert(*v), original);
        }
    }

    #[test]
    fn empty_series_is_rejected() {
        assert_eq!(
            scale_to_positive_integers(&[]),
            Err(SignalError::EmptySeries)
        );
    }

    #[test]
    fn window_report_golden_values() {
        let reports = moving_windows(&[128, 128, 145, 145, 171], 5).unwrap();
        assert_eq!(reports.len(), 1);
        let r = &reports[0];
        assert_eq!(r.position, 0);
        assert_eq!(r.length, 5);
        assert_eq!(r.total, 717);
        assert_eq!(r.range, 43);
        assert!((r.am - 143.4).abs() < 1e-9);
        assert!((r.nma - 141.88).abs() < 1e-9);
    }

    #[test]
    fn window_with_wider_spread_has_larger_gap() {
        // same length, bigger range: the New Mean drops further below AM
        let tight = &moving_windows(&[128, 128, 145, 145, 171], 5).unwrap()[0];
        let spread = &moving_windows(&[156, 107, 127, 195, 182], 5).unwrap()[0];
        assert_eq!(spread.total, 767);
        assert!((spread.am - 153.4).abs() < 1e-9);
        assert!((spread.nma - 150.2).abs() < 1e-9);
        assert_eq!(spread.range, 88);
        assert!(spread.am - spread.nma > tight.am - tight.nma);
    }

    #[test]
    fn constant_window_collapses() {
        let reports = moving_windows(&[7, 7, 7], 3).unwrap();
        let r = &reports[0];
        assert_eq!(r.am, r.nma);
        assert_eq!(r.am, 7.0);
        assert_eq!(r.range, 0);
        assert_eq!(r.sd, 0.0);
    }

    #[test]
    fn stride_is_one() {
        let reports = moving_windows(&[1, 2, 3, 4, 5, 6], 4).unwrap();
        assert_eq!(reports.len(), 3);
        assert_eq!(
            reports.iter().map(|r| r.position).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn window_bounds_are_checked() {
        assert_eq!(
            moving_windows(&[1, 2, 3], 0),
            Err(SignalError::WindowOutOfRange { window: 0, len: 3 })
        );
        assert_eq!(
            moving_windows(&[1, 2, 3], 4),
            Err(SignalError::WindowOutOfRange { window: 4, len: 3 })
        );
    }
}
