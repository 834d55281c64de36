//! Tent-map truncations that realize each tail of the Sharkovsky ordering
//! exactly, plus a seeded generator of random test maps.

use std::collections::BTreeSet;

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::orbits::{select_minimal_diameter, Enumerator, Orbit};
use crate::order;
use crate::plmap::{Affine, PlMap};
use crate::rat::{int, rat, Rat};

/// Periods checked after construction, unless the target period is larger.
pub const VERIFY_HORIZON: u32 = 12;

/// `T(x) = 1 − |2x − 1|` on `[0, 1]`.
pub fn tent() -> PlMap {
    PlMap::new(vec![(int(0), int(0)), (rat(1, 2), int(1)), (int(1), int(0))])
        .expect("tent map is valid")
}

/// A constructed map together with the orbit it was cut down to and the
/// period set that was checked before returning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub map: PlMap,
    pub orbit: Orbit,
    pub verified_periods: BTreeSet<u32>,
    pub verification_horizon: u32,
}

// `x ↦ median(lo, T(x), hi)`; a single point collapses to a constant map.
fn clamp_tent(lo: &Rat, hi: &Rat) -> Result<PlMap> {
    let t = tent();
    if lo == hi {
        PlMap::constant(t.lo().clone(), t.hi().clone(), lo.clone())
    } else {
        t.clamp(lo, hi)
    }
}

fn verify_tail(en: &Enumerator, map: &PlMap, n: u32) -> Result<(BTreeSet<u32>, u32)> {
    let horizon = n.max(VERIFY_HORIZON).min(en.horizon());
    let periods = en.period_set(map, horizon)?;
    let expected: BTreeSet<u32> = order::tail(n as u64, horizon as u64)?
        .into_iter()
        .map(|p| p as u32)
        .collect();
    if periods != expected {
        return Err(Error::ConstructionFailed(format!(
            "period set up to {horizon} is {periods:?}, expected the tail of {n}: {expected:?}"
        )));
    }
    Ok((periods, horizon))
}

/// The tent map clamped to the smallest-diameter period-`n` orbit `P_n`.
///
/// The result has `P_n` as its only period-`n` orbit and no period that
/// precedes `n`; both facts are checked before returning.
pub fn truncated_tent(en: &Enumerator, n: u32) -> Result<Counterexample> {
    en.check(n)?;
    let orbit = en.minimal_diameter_orbit(&tent(), n)?;
    let map = clamp_tent(orbit.min(), orbit.max())?;

    let own = en.orbits_of_period(&map, n)?;
    if own.len() != 1 || own[0] != orbit {
        return Err(Error::ConstructionFailed(format!(
            "clamped map has {} orbits of period {n}, expected exactly P_{n}",
            own.len()
        )));
    }
    let (verified_periods, verification_horizon) = verify_tail(en, &map, n)?;
    Ok(Counterexample {
        map,
        orbit,
        verified_periods,
        verification_horizon,
    })
}

/// Nested orbits `Q_3, Q_6, …, Q_{2^depth·3}` of the tent map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerTrace {
    pub depth: u32,
    pub orbits: Vec<Orbit>,
    pub q0: Rat,
    pub q1: Rat,
}

/// Depth-`depth` approximant of the tent truncation whose periods are
/// exactly the powers of two.
///
/// `Q_3` is the smallest-diameter period-3 orbit; each later orbit is the
/// smallest-diameter orbit of twice the period lying in
/// `[min Q, max Q]` of its predecessor. The returned map clamps the tent
/// map to the deepest orbit's hull and has period set equal to the tail of
/// `2^depth·3`.
pub fn doubling_tower(en: &Enumerator, depth: u32) -> Result<(PlMap, TowerTrace)> {
    let period = 3u32
        .checked_shl(depth)
        .filter(|p| p >> depth == 3)
        .ok_or(Error::HorizonExceeded {
            requested: u32::MAX,
            horizon: en.horizon(),
        })?;
    en.check(period)?;

    let t = tent();
    let mut orbits = vec![en.minimal_diameter_orbit(&t, 3)?];
    for i in 1..=depth {
        let outer = orbits.last().expect("nonempty");
        let n = 3 << i;
        let candidates = en.orbits_of_period_in(&t, n, outer.min(), outer.max())?;
        let inner = select_minimal_diameter(&candidates).cloned().ok_or_else(|| {
            Error::ConstructionFailed(format!(
                "no period-{n} orbit inside [{}, {}]",
                outer.min(),
                outer.max()
            ))
        })?;
        if !(outer.min() < inner.min() && inner.max() < outer.max()) {
            return Err(Error::ConstructionFailed(format!(
                "Q_{n} is not strictly nested in Q_{}",
                n / 2
            )));
        }
        orbits.push(inner);
    }
    let deepest = orbits.last().expect("nonempty");
    let (q0, q1) = (deepest.min().clone(), deepest.max().clone());
    let map = clamp_tent(&q0, &q1)?;
    if !deepest.is_orbit_of(&map) {
        return Err(Error::ConstructionFailed(
            "deepest orbit is not an orbit of the clamped map".into(),
        ));
    }
    verify_tail(en, &map, period)?;
    Ok((
        map,
        TowerTrace {
            depth,
            orbits,
            q0,
            q1,
        },
    ))
}

const MAX_DENOMINATOR: i64 = 9;
const MAX_SLOPE: i64 = 3;

fn random_fraction(rng: &mut ChaCha8Rng, max_den: i64) -> Rat {
    let q = rng.random_range(1..=max_den);
    let p = rng.random_range(0..=q);
    rat(p, q)
}

fn slope_ok(s: &Rat, prev: Option<&Rat>) -> bool {
    if s.abs().is_one() || s.abs() > int(MAX_SLOPE) {
        return false;
    }
    match prev {
        Some(p) => !(p * s).abs().is_one(),
        None => true,
    }
}

/// A deterministic random self-map of `[0, 1]` with `pieces` linear pieces
/// before normalization.
///
/// Nodes have denominators at most 9 (more when many pieces need distinct
/// breakpoints). Slopes are bounded by 3 in absolute value, no piece has
/// slope `±1` and no two adjacent slopes multiply to `±1`, which keeps
/// identity laps of iterates rare and lap counts of iterates moderate.
pub fn random_plmap(seed: u64, pieces: usize) -> PlMap {
    let pieces = pieces.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_den = MAX_DENOMINATOR.max(2 * pieces as i64);

    let mut xs: BTreeSet<Rat> = BTreeSet::new();
    while xs.len() < pieces - 1 {
        let x = random_fraction(&mut rng, max_den);
        if x > int(0) && x < int(1) {
            xs.insert(x);
        }
    }
    let xs: Vec<Rat> = std::iter::once(int(0))
        .chain(xs)
        .chain(std::iter::once(int(1)))
        .collect();

    let mut ys: Vec<Rat> = vec![random_fraction(&mut rng, MAX_DENOMINATOR)];
    let mut prev_slope: Option<Rat> = None;
    for i in 1..xs.len() {
        let y = loop {
            let y = random_fraction(&mut rng, MAX_DENOMINATOR);
            let s = Affine::through(&xs[i - 1], &ys[i - 1], &xs[i], &y).slope;
            if slope_ok(&s, prev_slope.as_ref()) {
                prev_slope = Some(s);
                break y;
            }
        };
        ys.push(y);
    }
    PlMap::new(xs.into_iter().zip(ys).collect()).expect("nodes are valid by construction")
}
