//! Square-decomposition statistics over the Cl(0,3) geometric algebra.
//!
//! The pieces, bottom up:
//!
//! - [`ssgs`]: every nonnegative integer decomposes into a unique
//!   nonincreasing list of square roots by greedily extracting the largest
//!   perfect square from the running residue. Finite decimals join the
//!   scheme through an exact power-of-ten scaling.
//! - [`clifford`]: the eight-dimensional Cl(0,3) algebra whose conjugate
//!   product turns a decomposition row back into its value through the
//!   scalar slot.
//! - [`stats`]: the New Mean of a set (sum of squared column means of the
//!   decomposition matrix, or equivalently the mean-multivector conjugate
//!   product), the gap `lambda` to the arithmetic mean, and the dispersion
//!   measures around both means.
//! - [`signal`]: scaling of decimal series to positive integers and the
//!   sliding-window moving average / New Moving Average pipeline.
//! - [`verify`]: seeded self-checking property suites.
//!
//! Everything is pure value code over `alloc`; the CLI and file formats
//! live in the companion binary crate.
//!
//! ```
//! use ssgs_core::{decompose, summarize};
//!
//! assert_eq!(decompose(91).roots(), &[9, 3, 1]);
//!
//! let s = summarize(&[101, 118, 99, 131, 140, 141, 109, 121, 122, 110]).unwrap();
//! assert!((s.new_mean - 116.04).abs() < 1e-9);
//! assert!((s.lambda - 3.16).abs() < 1e-9);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod clifford;
pub mod decimal;
pub mod signal;
pub mod ssgs;
pub mod stats;
pub mod verify;

pub use clifford::{basis_product, BasisProduct, Multivector};
pub use decimal::Decimal;
pub use signal::{
    moving_windows, scale_to_positive_integers, ScalingTransform, SignalError, SignalSeries,
    WindowReport,
};
pub use ssgs::{
    decompose, decompose_decimal, isqrt_floor, minimal_term_count_value, ScaledDecomposition,
    SquareDecomposition,
};
pub use stats::{
    coefficient_matrix, column_variances, lambda, new_mean_clifford, new_mean_direct, summarize,
    CoefficientMatrix, SetSummary, StatsError,
};
