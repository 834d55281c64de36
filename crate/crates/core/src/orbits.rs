//! Exact enumeration of periodic points and orbits.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::laps;
use crate::plmap::PlMap;
use crate::rat::Rat;

pub const DEFAULT_HORIZON: u32 = 20;

/// The isolated solutions of `f^n(x) = x`, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub n: u32,
    pub points: Vec<Rat>,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A periodic orbit, points sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orbit {
    pub points: Vec<Rat>,
    pub least_period: u32,
    pub diameter: Rat,
}

impl Orbit {
    fn from_points(mut points: Vec<Rat>) -> Self {
        points.sort();
        let diameter = &points[points.len() - 1] - &points[0];
        Orbit {
            least_period: points.len() as u32,
            points,
            diameter,
        }
    }

    pub fn min(&self) -> &Rat {
        &self.points[0]
    }

    pub fn max(&self) -> &Rat {
        &self.points[self.points.len() - 1]
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.points.binary_search(x).is_ok()
    }

    pub fn lies_within(&self, lo: &Rat, hi: &Rat) -> bool {
        lo <= self.min() && self.max() <= hi
    }

    /// Checks that `f` permutes the points cyclically with the recorded
    /// least period.
    pub fn is_orbit_of(&self, f: &PlMap) -> bool {
        if self.points.len() != self.least_period as usize || !f.contains(self.min()) || !f.contains(self.max()) {
            return false;
        }
        let mut x = self.points[0].clone();
        let mut seen = 0usize;
        loop {
            x = f.eval_unchecked(&x);
            seen += 1;
            if !self.contains(&x) {
                return false;
            }
            if x == self.points[0] {
                return seen == self.points.len();
            }
            if seen > self.points.len() {
                return false;
            }
        }
    }
}

/// Picks the orbit of smallest diameter; ties go to the smaller maximum,
/// then to the larger minimum.
pub fn select_minimal_diameter(orbits: &[Orbit]) -> Option<&Orbit> {
    orbits
        .iter()
        .min_by(|a, b| {
            (&a.diameter, a.max(), Reverse(a.min())).cmp(&(&b.diameter, b.max(), Reverse(b.min())))
        })
}

/// Enumeration entry point carrying the largest iterate order it will
/// attempt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    horizon: u32,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            horizon: DEFAULT_HORIZON,
        }
    }
}

impl Enumerator {
    pub fn new(horizon: u32) -> Self {
        Enumerator { horizon }
    }

    pub fn horizon(&self) -> u32 {
        self.horizon
    }

    pub fn check(&self, n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        if n > self.horizon {
            return Err(Error::HorizonExceeded {
                requested: n,
                horizon: self.horizon,
            });
        }
        Ok(())
    }

    pub fn periodic_points(&self, f: &PlMap, n: u32) -> Result<SolutionSet> {
        self.periodic_points_in(f, n, f.lo(), f.hi())
    }

    /// Solutions of `f^n(x) = x` with `x ∈ [lo, hi]`.
    pub fn periodic_points_in(&self, f: &PlMap, n: u32, lo: &Rat, hi: &Rat) -> Result<SolutionSet> {
        self.check(n)?;
        Ok(SolutionSet {
            n,
            points: laps::fixed_points(f, n, lo, hi)?,
        })
    }

    pub fn least_period(&self, f: &PlMap, x: &Rat) -> Result<u32> {
        let mut v = f.eval(x)?;
        for d in 1..=self.horizon {
            if &v == x {
                return Ok(d);
            }
            v = f.eval_unchecked(&v);
        }
        Err(Error::NotPeriodic {
            x: x.clone(),
            horizon: self.horizon,
        })
    }

    /// The orbit through a periodic point.
    pub fn orbit_of(&self, f: &PlMap, x: &Rat) -> Result<Orbit> {
        let period = self.least_period(f, x)?;
        Ok(Orbit::from_points(f.trajectory(x, period as usize)?))
    }

    pub fn orbits_of_period(&self, f: &PlMap, n: u32) -> Result<Vec<Orbit>> {
        self.orbits_of_period_in(f, n, f.lo(), f.hi())
    }

    /// Orbits of least period `n` lying entirely inside `[lo, hi]`, sorted
    /// by their smallest point.
    pub fn orbits_of_period_in(&self, f: &PlMap, n: u32, lo: &Rat, hi: &Rat) -> Result<Vec<Orbit>> {
        let solutions = self.periodic_points_in(f, n, lo, hi)?;
        Ok(group_orbits(f, n, &solutions.points, lo, hi))
    }

    pub fn minimal_diameter_orbit(&self, f: &PlMap, n: u32) -> Result<Orbit> {
        let orbits = self.orbits_of_period(f, n)?;
        select_minimal_diameter(&orbits)
            .cloned()
            .ok_or(Error::NoSuchOrbit { n })
    }

    /// `{ n ≤ horizon : f has a point of least period n }`.
    pub fn period_set(&self, f: &PlMap, horizon: u32) -> Result<BTreeSet<u32>> {
        if horizon == 0 {
            return Err(Error::ZeroArgument);
        }
        self.check(horizon)?;
        let mut periods = BTreeSet::new();
        for n in 1..=horizon {
            if !self.orbits_of_period(f, n)?.is_empty() {
                periods.insert(n);
            }
        }
        Ok(periods)
    }
}

// Every point of a least-period-d orbit with d | n solves f^n(x) = x, so
// walking each unvisited solution once partitions the set into orbits.
fn group_orbits(f: &PlMap, n: u32, points: &[Rat], lo: &Rat, hi: &Rat) -> Vec<Orbit> {
    let mut visited: HashSet<Rat> = HashSet::new();
    let mut orbits = Vec::new();
    for x in points {
        if visited.contains(x) {
            continue;
        }
        let mut cycle = vec![x.clone()];
        let mut v = f.eval_unchecked(x);
        while &v != x && cycle.len() <= n as usize {
            cycle.push(v.clone());
            v = f.eval_unchecked(&v);
        }
        debug_assert_eq!(&v, x, "solution of f^n(x) = x must return");
        visited.extend(cycle.iter().cloned());
        if cycle.len() == n as usize {
            let orbit = Orbit::from_points(cycle);
            if orbit.lies_within(lo, hi) {
                orbits.push(orbit);
            }
        }
    }
    orbits.sort_by(|a, b| a.min().cmp(b.min()));
    orbits
}
