//! Exact rational scalars.
//!
//! Every point, slope and bound in the crate is a [`Rat`]. Text form is
//! `p/q` in lowest terms with a positive denominator, or a bare integer.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Builds `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError {
    pub input: String,
    pub reason: &'static str,
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}: {}", self.input, self.reason)
    }
}

impl std::error::Error for ParseRatError {}

/// Parses the canonical text form. Unreduced fractions, non-positive
/// denominators and explicit `+` signs are rejected so that every number
/// has exactly one spelling.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let err = |reason| ParseRatError {
        input: s.to_string(),
        reason,
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_int(num).ok_or_else(|| err("numerator is not an integer"))?;
    let Some(den) = den else {
        return Ok(Rat::from_integer(numer));
    };
    if den.starts_with('-') {
        return Err(err("denominator must be positive"));
    }
    let denom = parse_int(den).ok_or_else(|| err("denominator is not an integer"))?;
    if !denom.is_positive() {
        return Err(err("denominator must be positive"));
    }
    if denom.is_one() {
        return Err(err("integer written with denominator 1"));
    }
    if !numer.gcd(&denom).is_one() {
        return Err(err("fraction is not in lowest terms"));
    }
    Ok(Rat::new_raw(numer, denom))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s.starts_with('-') && digits == "0" {
        return None;
    }
    BigInt::from_str(s).ok()
}

/// Rounded decimal rendering. For display only; never fed back into the core.
pub fn to_decimal(x: &Rat, places: usize) -> String {
    match x.to_f64() {
        Some(v) => format!("{v:.places$}"),
        None => "nan".to_string(),
    }
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn min_rat<'a>(a: &'a Rat, b: &'a Rat) -> &'a Rat {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn max_rat<'a>(a: &'a Rat, b: &'a Rat) -> &'a Rat {
    if a >= b {
        a
    } else {
        b
    }
}

/// Median of three, i.e. `v` clamped into `[lo, hi]` when `lo <= hi`.
pub fn median(lo: &Rat, v: &Rat, hi: &Rat) -> Rat {
    if v < lo {
        lo.clone()
    } else if v > hi {
        hi.clone()
    } else {
        v.clone()
    }
}

pub fn is_zero(x: &Rat) -> bool {
    x.is_zero()
}
