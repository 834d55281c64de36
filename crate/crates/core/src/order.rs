//! The Sharkovsky ordering of the positive integers:
//!
//! ```text
//! 3 ≺ 5 ≺ 7 ≺ … ≺ 2·3 ≺ 2·5 ≺ … ≺ 2²·3 ≺ … ≺ 2³ ≺ 2² ≺ 2 ≺ 1
//! ```
//!
//! `m ≺ n` means a period-`m` point forces a period-`n` point.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// `n = 2^two_exponent · odd_part` with `odd_part` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SharkovskyKey {
    pub n: u64,
    pub odd_part: u64,
    pub two_exponent: u32,
}

impl SharkovskyKey {
    pub fn is_power_of_two(&self) -> bool {
        self.odd_part == 1
    }

    /// Position in the ordering: `Less` means `self ≺ other`.
    pub fn cmp_sharkovsky(&self, other: &Self) -> Ordering {
        match (self.is_power_of_two(), other.is_power_of_two()) {
            (false, false) => self
                .two_exponent
                .cmp(&other.two_exponent)
                .then(self.odd_part.cmp(&other.odd_part)),
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
            (true, true) => other.two_exponent.cmp(&self.two_exponent),
        }
    }

    pub fn precedes(&self, other: &Self) -> bool {
        self.cmp_sharkovsky(other) == Ordering::Less
    }
}

pub fn decompose(n: u64) -> Result<SharkovskyKey> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let two_exponent = n.trailing_zeros();
    Ok(SharkovskyKey {
        n,
        odd_part: n >> two_exponent,
        two_exponent,
    })
}

/// Strict `m ≺ n`.
pub fn precedes(m: u64, n: u64) -> Result<bool> {
    Ok(decompose(m)?.precedes(&decompose(n)?))
}

/// Reflexive `m ⪯ n`.
pub fn precedes_or_eq(m: u64, n: u64) -> Result<bool> {
    Ok(m == n || precedes(m, n)?)
}

/// Compares two positive integers in the Sharkovsky ordering.
pub fn compare(m: u64, n: u64) -> Result<Ordering> {
    Ok(decompose(m)?.cmp_sharkovsky(&decompose(n)?))
}

/// All `n ≤ horizon` forced by `m` (including `m` itself when in range),
/// listed in forcing order.
pub fn tail(m: u64, horizon: u64) -> Result<Vec<u64>> {
    let key = decompose(m)?;
    if horizon == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut keys: Vec<SharkovskyKey> = (1..=horizon)
        .map(|n| decompose(n).expect("n >= 1"))
        .filter(|k| k.n == m || key.precedes(k))
        .collect();
    keys.sort_by(|a, b| a.cmp_sharkovsky(b));
    Ok(keys.into_iter().map(|k| k.n).collect())
}
