//! New Mean, lambda, and dispersion statistics for sets of nonnegative
//! integers.
//!
//! Each value is decomposed into at most eight square roots and laid out
//! as one row of a coefficient matrix. The New Mean is the sum of squared
//! column means, equivalently the scalar slot of the product of the mean
//! multivector by the mean conjugate multivector. The gap to the
//! arithmetic mean is `lambda`, the total per-column coefficient
//! variance: zero exactly when every column is constant, growing as the
//! set gets more scattered.
//!
//! Accumulation is exact: column sums and column square sums are kept as
//! integers and divided only at the end, so the identity
//! `AM - New Mean = lambda` holds at the numerator level, not just within
//! floating-point error.

use alloc::vec::Vec;
use core::fmt;

use crate::clifford::Multivector;
use crate::ssgs;

/// Number of coefficient slots per row (the Cl(0,3) basis size).
pub const SLOTS: usize = 8;

/// Square-root coefficient rows for a set of values, one row per value,
/// zero-padded to eight slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMatrix {
    rows: Vec<[u64; SLOTS]>,
    values: Vec<u64>,
}

/// Statistics failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatsError {
    /// The input set is empty.
    EmptySet,
    /// A value needs more than eight squares, so it has no Cl(0,3) row.
    RepresentationOverflow {
        /// The offending value.
        value: u64,
        /// How many roots its decomposition has.
        terms: usize,
    },
}

impl fmt::Display for StatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatsError::EmptySet => write!(f, "statistics need at least one value"),
            StatsError::RepresentationOverflow { value, terms } => write!(
                f,
                "{value} needs {terms} squares, more than the {SLOTS} available slots"
            ),
        }
    }
}

impl core::error::Error for StatsError {}

/// Decompose every value and pad the root lists to eight slots.
pub fn coefficient_matrix(values: &[u64]) -> Result<CoefficientMatrix, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptySet);
    }
    let mut rows = Vec::with_capacity(values.len());
    for &value in values {
        let decomposition = ssgs::decompose(value);
        let roots = decomposition.roots();
        if roots.len() > SLOTS {
            return Err(StatsError::RepresentationOverflow {
                value,
                terms: roots.len(),
            });
        }
        let mut row = [0u64; SLOTS];
        row[..roots.len()].copy_from_slice(roots);
        rows.push(row);
    }
    Ok(CoefficientMatrix {
        rows,
        values: values.to_vec(),
    })
}

impl CoefficientMatrix {
    /// Number of rows; never zero.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rows(&self) -> &[[u64; SLOTS]] {
        &self.rows
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    fn column_sums(&self) -> [u128; SLOTS] {
        let mut sums = [0u128; SLOTS];
        for row in &self.rows {
            for (sum, &c) in sums.iter_mut().zip(row) {
                *sum += u128::from(c);
            }
        }
        sums
    }

    fn column_square_sums(&self) -> [u128; SLOTS] {
        let mut sums = [0u128; SLOTS];
        for row in &self.rows {
            for (sum, &c) in sums.iter_mut().zip(row) {
                *sum += u128::from(c) * u128::from(c);
            }
        }
        sums
    }

    // numerator of the New Mean over n^2
    fn new_mean_numerator(&self) -> u128 {
        self.column_sums().iter().map(|&s| s * s).sum()
    }
}

/// New Mean by the coefficient route: the sum of squared column means.
pub fn new_mean_direct(matrix: &CoefficientMatrix) -> f64 {
    let n = matrix.len() as u128;
    matrix.new_mean_numerator() as f64 / (n * n) as f64
}

/// Population variance of each coefficient column.
pub fn column_variances(matrix: &CoefficientMatrix) -> [f64; SLOTS] {
    let n = matrix.len() as u128;
    let sums = matrix.column_sums();
    let squares = matrix.column_square_sums();
    let mut variances = [0.0; SLOTS];
    for k in 0..SLOTS {
        // n * sum(c^2) - sum(c)^2 is nonnegative by Cauchy-Schwarz
        variances[k] = (n * squares[k] - sums[k] * sums[k]) as f64 / (n * n) as f64;
    }
    variances
}

/// Total per-column variance; identically the gap `AM - New Mean`.
pub fn lambda(matrix: &CoefficientMatrix) -> f64 {
    let n = matrix.len() as u128;
    let total: u128 = matrix.column_square_sums().iter().sum();
    (n * total - matrix.new_mean_numerator()) as f64 / (n * n) as f64
}

/// New Mean through the algebra: average the multivectors and their
/// conjugates coefficient-wise, multiply, and read the scalar slot.
///
/// Agrees with [`new_mean_direct`] to floating-point accuracy; the two
/// routes share no arithmetic beyond the decompositions.
pub fn new_mean_clifford(values: &[u64]) -> Result<f64, StatsError> {
    let matrix = coefficient_matrix(values)?;
    let mut sum = Multivector::zero();
    let mut conjugate_sum = Multivector::zero();
    for row in matrix.rows() {
        let p = Multivector::from_decomposition(*row);
        sum = sum + p;
        conjugate_sum = conjugate_sum + p.conjugate();
    }
    let n = matrix.len() as f64;
    let mean = sum.scale(1.0 / n);
    let conjugate_mean = conjugate_sum.scale(1.0 / n);
    Ok((mean * conjugate_mean).scalar_part().re)
}

/// The full per-set record.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SetSummary {
    /// Number of values.
    pub count: usize,
    /// Exact sum of the values; `total / count` is the arithmetic mean as
    /// a rational.
    pub total: u128,
    /// Arithmetic mean.
    pub am: f64,
    /// New Mean; never exceeds `am`.
    pub new_mean: f64,
    /// `am - new_mean`, the total coefficient variance.
    pub lambda: f64,
    /// Population standard deviation about `am`.
    pub sd: f64,
    /// Dispersion about the New Mean: `sqrt(sd^2 + lambda^2)`.
    pub new_sd: f64,
}

/// Compute every per-set statistic in one pass.
pub fn summarize(values: &[u64]) -> Result<SetSummary, StatsError> {
    let matrix = coefficient_matrix(values)?;
    let n = matrix.len() as u128;
    let total: u128 = values.iter().map(|&v| u128::from(v)).sum();
    let square_total: u128 = values
        .iter()
        .map(|&v| u128::from(v) * u128::from(v))
        .sum();

    // every row sums back to its value, so the column square sums add up
    // to the plain total
    debug_assert_eq!(matrix.column_square_sums().iter().sum::<u128>(), total);

    let am_numerator = n * total;
    let nm_numerator = matrix.new_mean_numerator();
    let lambda_numerator = am_numerator - nm_numerator;
    let variance_numerator = n * square_total - total * total;

    let denominator = (n * n) as f64;
    let am = am_numerator as f64 / denominator;
    let new_mean = nm_numerator as f64 / denominator;
    let lambda = lambda_numerator as f64 / denominator;
    let variance = variance_numerator as f64 / denominator;
    Ok(SetSummary {
        count: matrix.len(),
        total,
        am,
        new_mean,
        lambda,
        sd: libm::sqrt(variance),
        new_sd: libm::sqrt(variance + lambda * lambda),
    })
}
