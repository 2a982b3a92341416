//! Greedy sum-of-squares decomposition of nonnegative integers and finite
//! positive decimals.
//!
//! Every nonnegative integer `x` is written as `x1^2 + x2^2 + ... + xt^2`
//! by repeatedly extracting the largest perfect square not exceeding the
//! running residue: the significant square first, then one generation
//! square per step until the residue hits zero. The greedy rule leaves no
//! choice at any step, so equal inputs always produce identical root lists.
//!
//! Decimals extend the scheme by scaling: with `d` written fractional
//! digits (made even by appending at most one zero), the numerator
//! `value * 10^d` is decomposed as an integer and every root is read back
//! divided by `10^(d/2)`.

use alloc::vec::Vec;
use core::fmt;

use crate::decimal::{Decimal, ParseDecimalError};

/// Floor integer square root: the `r` with `r^2 <= x < (r+1)^2`.
///
/// Pure integer Newton iteration. Floating-point square roots misround
/// near 2^63, so none are used anywhere.
pub fn isqrt_floor(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    // start strictly above the true root; the iteration then decreases
    // monotonically and the first non-decrease is the answer
    let mut r = 1u64 << (x.ilog2() / 2 + 1);
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            return r;
        }
        r = next;
    }
}

/// The greedy square decomposition of one nonnegative integer.
///
/// The root list is nonincreasing, `sum(roots[j]^2)` reproduces the value,
/// and each root is the floor square root of the residue before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareDecomposition {
    value: u64,
    roots: Vec<u64>,
}

impl SquareDecomposition {
    /// The decomposed value.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Roots in extraction order (largest first). Empty exactly for zero.
    pub fn roots(&self) -> &[u64] {
        &self.roots
    }

    /// Number of square terms.
    pub fn term_count(&self) -> usize {
        self.roots.len()
    }

    /// Sum of squared roots, recomputed from the roots alone.
    pub fn reconstruct(&self) -> u64 {
        self.roots.iter().map(|&r| r * r).sum()
    }
}

impl fmt::Display for SquareDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return write!(f, "0");
        }
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{r}^2")?;
        }
        Ok(())
    }
}

/// Decompose `x` by the greedy rule. Deterministic; terminates because the
/// residue strictly decreases.
pub fn decompose(x: u64) -> SquareDecomposition {
    let mut roots = Vec::new();
    let mut residue = x;
    while residue > 0 {
        let r = isqrt_floor(residue);
        roots.push(r);
        residue -= r * r;
    }
    SquareDecomposition { value: x, roots }
}

/// The requested term count cannot be represented in 64 bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TermCountOverflow {
    /// The term count that overflowed.
    pub terms: u32,
}

impl fmt::Display for TermCountOverflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "smallest {}-term value exceeds the 64-bit range",
            self.terms
        )
    }
}

impl core::error::Error for TermCountOverflow {}

/// Smallest nonnegative integer whose decomposition has exactly `terms`
/// roots.
///
/// Follows the recurrence `s_1 = 1`, `s_m = ceil(s_{m-1} / 2)^2 + s_{m-1}`:
/// after extracting a root `r` the residue is at most `2r`, so the smallest
/// value forcing one more term puts the previous minimum just inside that
/// capacity. Grows doubly exponentially; overflows u64 at ten terms.
///
/// Panics if `terms` is zero.
pub fn minimal_term_count_value(terms: u32) -> Result<u64, TermCountOverflow> {
    assert!(terms >= 1, "term count must be at least 1");
    let mut s: u64 = 1;
    for _ in 1..terms {
        let r = s / 2 + s % 2;
        s = r
            .checked_mul(r)
            .and_then(|sq| sq.checked_add(s))
            .ok_or(TermCountOverflow { terms })?;
    }
    Ok(s)
}

/// A decomposition of a decimal value: integer roots over a power-of-ten
/// scale, representing `sum((roots[j] / 10^scale_k)^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledDecomposition {
    integer_part: SquareDecomposition,
    scale_k: u32,
}

impl ScaledDecomposition {
    /// Decomposition of the scaled numerator `value * 10^(2 * scale_k)`.
    pub fn integer_part(&self) -> &SquareDecomposition {
        &self.integer_part
    }

    /// The `k` of the `10^(2k)` scaling.
    pub fn scale_k(&self) -> u32 {
        self.scale_k
    }
}

fn write_scaled_root(f: &mut fmt::Formatter<'_>, root: u64, k: u32) -> fmt::Result {
    if k == 0 {
        return write!(f, "{root}");
    }
    let scale = 10u64.pow(k);
    let int = root / scale;
    let mut frac = root % scale;
    if frac == 0 {
        return write!(f, "{int}");
    }
    let mut width = k as usize;
    while frac.is_multiple_of(10) {
        frac /= 10;
        width -= 1;
    }
    write!(f, "{int}.{frac:0width$}")
}

impl fmt::Display for ScaledDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.integer_part.roots().is_empty() {
            return write!(f, "0");
        }
        for (i, &r) in self.integer_part.roots().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write_scaled_root(f, r, self.scale_k)?;
            write!(f, "^2")?;
        }
        Ok(())
    }
}

/// Why decimal text could not be decomposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecimalError {
    /// The text is not a well-formed decimal.
    Parse(ParseDecimalError),
    /// Negative values have no square decomposition.
    Negative,
    /// The scaled numerator exceeds the 64-bit range.
    TooLarge,
}

impl fmt::Display for DecimalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecimalError::Parse(e) => write!(f, "{e}"),
            DecimalError::Negative => write!(f, "negative values cannot be decomposed"),
            DecimalError::TooLarge => write!(f, "scaled numerator exceeds the 64-bit range"),
        }
    }
}

impl core::error::Error for DecimalError {}

impl From<ParseDecimalError> for DecimalError {
    fn from(e: ParseDecimalError) -> Self {
        DecimalError::Parse(e)
    }
}

/// Decompose nonnegative decimal text.
///
/// The fractional digit count `d` is taken as written. If `d` is odd,
/// exactly one zero is appended to make it even; written digits are never
/// dropped, and no more than one zero is ever added (extra zero pairs
/// change the expansion). With `d` even, the numerator `value * 10^d` is
/// decomposed and `scale_k = d / 2`.
pub fn decompose_decimal(text: &str) -> Result<ScaledDecomposition, DecimalError> {
    let dec = Decimal::parse(text)?;
    if dec.is_negative() {
        return Err(DecimalError::Negative);
    }
    let mut mantissa = dec.mantissa();
    let mut digits = dec.frac_digits();
    if digits % 2 == 1 {
        mantissa *= 10; // append exactly one zero
        digits += 1;
    }
    let numerator = u64::try_from(mantissa).map_err(|_| DecimalError::TooLarge)?;
    Ok(ScaledDecomposition {
        integer_part: decompose(numerator),
        scale_k: digits / 2,
    })
}
