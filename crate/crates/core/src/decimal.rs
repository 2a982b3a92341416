//! Exact finite-decimal values parsed from text.
//!
//! A [`Decimal`] keeps the mantissa and the count of fractional digits as
//! written, so `12.30` stays distinguishable from `12.3`. That distinction
//! drives the scaled square decomposition, where the number of written
//! fractional digits decides the scaling power.

use core::fmt;
use core::str::FromStr;

/// Upper bound on fractional digits accepted by [`Decimal::parse`].
pub const MAX_FRAC_DIGITS: u32 = 18;

/// A finite decimal stored exactly as `mantissa / 10^frac_digits`.
#[derive(Clone, Copy, Debug)]
pub struct Decimal {
    mantissa: i128,
    frac_digits: u32,
}

/// Why a piece of text failed to parse as a [`Decimal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseDecimalError {
    /// Empty input.
    Empty,
    /// A character other than digits, one point, or a leading minus sign.
    InvalidCharacter(char),
    /// No digits at all (e.g. `"."` or `"-"`).
    NoDigits,
    /// More than one decimal point.
    MultiplePoints,
    /// More than [`MAX_FRAC_DIGITS`] fractional digits.
    TooManyFracDigits,
    /// Mantissa does not fit the supported integer range.
    ValueTooLarge,
}

impl fmt::Display for ParseDecimalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseDecimalError::Empty => write!(f, "empty decimal text"),
            ParseDecimalError::InvalidCharacter(c) => {
                write!(f, "invalid character {c:?} in decimal text")
            }
            ParseDecimalError::NoDigits => write!(f, "decimal text contains no digits"),
            ParseDecimalError::MultiplePoints => write!(f, "more than one decimal point"),
            ParseDecimalError::TooManyFracDigits => {
                write!(f, "more than {MAX_FRAC_DIGITS} fractional digits")
            }
            ParseDecimalError::ValueTooLarge => write!(f, "decimal value out of range"),
        }
    }
}

impl core::error::Error for ParseDecimalError {}

impl Decimal {
    /// Parse decimal text: optional minus sign, digits, at most one point.
    ///
    /// Trailing zeros are kept, so `"12.30"` yields mantissa 1230 with two
    /// fractional digits.
    pub fn parse(text: &str) -> Result<Self, ParseDecimalError> {
        if text.is_empty() {
            return Err(ParseDecimalError::Empty);
        }
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let mut mantissa: i128 = 0;
        let mut frac_digits: Option<u32> = None;
        let mut seen_digit = false;
        for ch in body.chars() {
            match ch {
                '0'..='9' => {
                    seen_digit = true;
                    mantissa = mantissa * 10 + i128::from(ch as u8 - b'0');
                    if mantissa > i128::from(i64::MAX) {
                        return Err(ParseDecimalError::ValueTooLarge);
                    }
                    if let Some(d) = frac_digits.as_mut() {
                        *d += 1;
                        if *d > MAX_FRAC_DIGITS {
                            return Err(ParseDecimalError::TooManyFracDigits);
                        }
                    }
                }
                '.' => {
                    if frac_digits.is_some() {
                        return Err(ParseDecimalError::MultiplePoints);
                    }
                    frac_digits = Some(0);
                }
                other => return Err(ParseDecimalError::InvalidCharacter(other)),
            }
        }
        if !seen_digit {
            return Err(ParseDecimalError::NoDigits);
        }
        Ok(Decimal {
            mantissa: if negative { -mantissa } else { mantissa },
            frac_digits: frac_digits.unwrap_or(0),
        })
    }

    /// Build directly from a mantissa and a fractional digit count.
    pub fn from_parts(mantissa: i128, frac_digits: u32) -> Self {
        Decimal { mantissa, frac_digits }
    }

    pub fn mantissa(&self) -> i128 {
        self.mantissa
    }

    /// Fractional digits as written.
    pub fn frac_digits(&self) -> u32 {
        self.frac_digits
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa < 0
    }

    /// Mantissa rescaled to `digits` fractional digits.
    ///
    /// `None` if that would drop written digits or overflow.
    pub fn to_scaled(&self, digits: u32) -> Option<i128> {
        let shift = digits.checked_sub(self.frac_digits)?;
        let factor = 10i128.checked_pow(shift)?;
        self.mantissa.checked_mul(factor)
    }
}

impl FromStr for Decimal {
    type Err = ParseDecimalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Decimal::parse(s)
    }
}

impl PartialEq for Decimal {
    fn eq(&self, other: &Self) -> bool {
        let digits = self.frac_digits.max(other.frac_digits);
        match (self.to_scaled(digits), other.to_scaled(digits)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let magnitude = self.mantissa.unsigned_abs();
        let sign = if self.mantissa < 0 { "-" } else { "" };
        if self.frac_digits == 0 {
            return write!(f, "{sign}{magnitude}");
        }
        let scale = 10u128.pow(self.frac_digits);
        let int = magnitude / scale;
        let frac = magnitude % scale;
        let width = self.frac_digits as usize;
        write!(f, "{sign}{int}.{frac:0width$}")
    }
}
