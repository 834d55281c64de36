//! Period forcing as an executable check on computed period sets.
//!
//! A continuous interval map whose period set is not closed under passing
//! to Sharkovsky successors does not exist, so any violation reported here
//! points at an enumeration bug. Violations are returned, not raised.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::orbits::Enumerator;
use crate::order;
use crate::plmap::PlMap;

/// Anything that can produce the set of least periods of a map up to a
/// horizon. [`Enumerator`] is the real implementation.
pub trait PeriodSource {
    fn period_set(&self, f: &PlMap, horizon: u32) -> Result<BTreeSet<u32>>;
}

impl PeriodSource for Enumerator {
    fn period_set(&self, f: &PlMap, horizon: u32) -> Result<BTreeSet<u32>> {
        Enumerator::period_set(self, f, horizon)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingReport {
    pub periods_found: BTreeSet<u32>,
    pub horizon: u32,
    /// `(m, n)` with `m` present, `m ≺ n ≤ horizon` and `n` absent.
    pub violations: Vec<(u32, u32)>,
    pub skipped: Option<String>,
}

impl ForcingReport {
    pub fn passed(&self) -> bool {
        self.skipped.is_none() && self.violations.is_empty()
    }

    /// One line for CI logs.
    pub fn summary_line(&self) -> String {
        let status = match (&self.skipped, self.violations.is_empty()) {
            (Some(_), _) => "skip",
            (None, true) => "pass",
            (None, false) => "fail",
        };
        format!(
            "forcing {status} horizon={} periods={} violations={}",
            self.horizon,
            self.periods_found.len(),
            self.violations.len()
        )
    }
}

impl fmt::Display for ForcingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "horizon = {}", self.horizon)?;
        writeln!(f, "periods = {}", join(&self.periods_found))?;
        if let Some(reason) = &self.skipped {
            writeln!(f, "skipped = {reason}")?;
        }
        for (m, n) in &self.violations {
            writeln!(f, "violation = period {m} present, forced period {n} absent")?;
        }
        write!(f, "{}", self.summary_line())
    }
}

fn join<'a>(xs: impl IntoIterator<Item = &'a u32>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Pairs `(m, n)` with `m ∈ periods`, `m ≺ n ≤ horizon`, `n ∉ periods`.
pub fn forcing_violations(periods: &BTreeSet<u32>, horizon: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for &m in periods {
        for n in 1..=horizon {
            if !periods.contains(&n) && order::precedes(m as u64, n as u64).unwrap_or(false) {
                out.push((m, n));
            }
        }
    }
    out
}

pub fn verify_forcing_closure(en: &Enumerator, f: &PlMap, horizon: u32) -> ForcingReport {
    verify_forcing_closure_with(en, f, horizon)
}

pub fn verify_forcing_closure_with<S: PeriodSource>(source: &S, f: &PlMap, horizon: u32) -> ForcingReport {
    match source.period_set(f, horizon) {
        Ok(periods) => ForcingReport {
            violations: forcing_violations(&periods, horizon),
            periods_found: periods,
            horizon,
            skipped: None,
        },
        Err(e) => ForcingReport {
            periods_found: BTreeSet::new(),
            horizon,
            violations: Vec::new(),
            skipped: Some(e.to_string()),
        },
    }
}

/// Re-derives a reported violation by direct orbit enumeration at both
/// periods: true when `m` really has an orbit and `n` really has none.
pub fn confirm_violation(en: &Enumerator, f: &PlMap, m: u32, n: u32) -> Result<bool> {
    Ok(!en.orbits_of_period(f, m)?.is_empty() && en.orbits_of_period(f, n)?.is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub n: u32,
    pub horizon: u32,
    /// number of orbits of least period `n`
    pub orbit_count: usize,
    pub periods_found: BTreeSet<u32>,
    /// the tail of `n` up to the horizon
    pub expected: BTreeSet<u32>,
    /// forced periods that were not found
    pub missing: Vec<u32>,
    /// periods found that `n` does not force
    pub unexpected: Vec<u32>,
    pub skipped: Option<String>,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        self.skipped.is_none() && self.orbit_count == 1 && self.missing.is_empty() && self.unexpected.is_empty()
    }

    pub fn summary_line(&self) -> String {
        let status = if self.skipped.is_some() {
            "skip"
        } else if self.passed() {
            "pass"
        } else {
            "fail"
        };
        format!(
            "counterexample {status} n={} horizon={} orbits={} missing={} unexpected={}",
            self.n,
            self.horizon,
            self.orbit_count,
            self.missing.len(),
            self.unexpected.len()
        )
    }
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "horizon = {}", self.horizon)?;
        writeln!(f, "orbits_of_period_n = {}", self.orbit_count)?;
        writeln!(f, "periods = {}", join(&self.periods_found))?;
        writeln!(f, "expected = {}", join(&self.expected))?;
        if let Some(reason) = &self.skipped {
            writeln!(f, "skipped = {reason}")?;
        }
        if !self.missing.is_empty() {
            writeln!(f, "missing = {}", join(&self.missing))?;
        }
        if !self.unexpected.is_empty() {
            writeln!(f, "unexpected = {}", join(&self.unexpected))?;
        }
        write!(f, "{}", self.summary_line())
    }
}

/// Checks that `f` has exactly one orbit of least period `n` and that its
/// period set up to `horizon` is exactly the tail of `n`.
pub fn verify_counterexample(en: &Enumerator, f: &PlMap, n: u32, horizon: u32) -> CounterexampleReport {
    let expected: BTreeSet<u32> = order::tail(n as u64, horizon as u64)
        .unwrap_or_default()
        .into_iter()
        .map(|p| p as u32)
        .collect();
    let outcome = en
        .orbits_of_period(f, n)
        .and_then(|orbits| Ok((orbits.len(), en.period_set(f, horizon)?)));
    match outcome {
        Ok((orbit_count, periods)) => CounterexampleReport {
            n,
            horizon,
            orbit_count,
            missing: expected.difference(&periods).copied().collect(),
            unexpected: periods.difference(&expected).copied().collect(),
            periods_found: periods,
            expected,
            skipped: None,
        },
        Err(e) => CounterexampleReport {
            n,
            horizon,
            orbit_count: 0,
            periods_found: BTreeSet::new(),
            expected,
            missing: Vec::new(),
            unexpected: Vec::new(),
            skipped: Some(e.to_string()),
        },
    }
}
