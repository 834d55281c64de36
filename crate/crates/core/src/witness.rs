//! Explicit witnesses for period forcing.
//!
//! Starting from an orbit of odd period `m ≥ 3`, these constructions produce
//! a fixed point `z`, a period-2 point `y` and a point `v` with
//! `max{f²(v), y} < v < z < min{f(y), f(v)}`, then use them to exhibit
//! orbits of every larger odd period, orbits of every even period, and a
//! pair of disjoint intervals that `f²` maps over both of them.
//!
//! Every selection is deterministic (smallest fixed point, largest
//! preimage, and so on) and every returned object is re-verified with exact
//! arithmetic before it is handed back. A failed check is reported as
//! [`Error::ConstructionFailed`].

use crate::error::{Error, Result};
use crate::laps::{self, Segment};
use crate::orbits::{Enumerator, Orbit};
use crate::plmap::PlMap;
use crate::rat::Rat;

fn failed(msg: impl Into<String>) -> Error {
    Error::ConstructionFailed(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(failed(msg()))
    }
}

fn largest(segments: &[Segment], what: &str) -> Result<Rat> {
    laps::max_point(segments)
        .cloned()
        .ok_or_else(|| failed(format!("{what}: solution set is empty")))
}

fn smallest(segments: &[Segment], what: &str) -> Result<Rat> {
    laps::min_point(segments)
        .cloned()
        .ok_or_else(|| failed(format!("{what}: solution set is empty")))
}

/// Points `p < b` of an orbit with `f(p) ≥ b` and `f(b) ≤ p`, and `a ∈ [p, b)`
/// with `f(a) = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPair {
    pub p: Rat,
    pub b: Rat,
    pub a: Rat,
}

/// A pair `(a, b)` satisfying one of the two forms of the lemma hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaPair {
    pub a: Rat,
    pub b: Rat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// `f(b) < a < b ≤ f(a)`
    Left,
    /// `f(b) ≤ a < b < f(a)`
    Right,
}

pub fn hypothesis(f: &PlMap, a: &Rat, b: &Rat) -> Result<Option<Hypothesis>> {
    let fa = f.eval(a)?;
    let fb = f.eval(b)?;
    Ok(if fb < *a && a < b && b <= &fa {
        Some(Hypothesis::Left)
    } else if fb <= *a && a < b && b < &fa {
        Some(Hypothesis::Right)
    } else {
        None
    })
}

/// Picks `p`, `b` and `a` from a periodic orbit of period at least 3.
///
/// `p` is the largest orbit point moved to the right, `b` the next orbit
/// point above it, and `a` the largest solution of `f(x) = b` in `[p, b)`.
pub fn pb_pair_from_orbit(f: &PlMap, orbit: &Orbit) -> Result<OrbitPair> {
    if !orbit.is_orbit_of(f) {
        return Err(Error::InvalidOrbit(format!(
            "{:?} is not a period-{} orbit of the map",
            orbit.points.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            orbit.least_period
        )));
    }
    if orbit.least_period < 3 {
        return Err(Error::HypothesisNotSatisfied(format!(
            "orbit has period {}, need at least 3",
            orbit.least_period
        )));
    }
    let p = orbit
        .points
        .iter()
        .rev()
        .find(|x| &f.eval_unchecked(x) > *x)
        .cloned()
        .ok_or_else(|| failed("no orbit point moves right"))?;
    let b = orbit
        .points
        .iter()
        .find(|x| *x > &p)
        .cloned()
        .ok_or_else(|| failed("no orbit point above p"))?;
    let solutions = laps::level_set(f, 1, &p, &b, &b)?;
    let a = largest(&solutions, "f(x) = b on [p, b]")?;

    let (fp, fb, fa) = (f.eval(&p)?, f.eval(&b)?, f.eval(&a)?);
    ensure(fp >= b, || format!("f(p) = {fp} < b = {b}"))?;
    ensure(fb <= p, || format!("f(b) = {fb} > p = {p}"))?;
    ensure(p <= a && a < b, || format!("a = {a} not in [p, b) = [{p}, {b})"))?;
    ensure(fa == b, || format!("f(a) = {fa} != b = {b}"))?;
    ensure(fb < a, || format!("f(b) = {fb} is not below a = {a}"))?;
    Ok(OrbitPair { p, b, a })
}

/// Builds a lemma pair from a point `x0` with `f^n(x0) ≤ x0 < f(x0)`.
///
/// With `X = {f^k(x0) : 0 ≤ k < n}`, `a` is the largest `x ∈ X` with
/// `x ≥ x0` and `f(x) > x`, and `b` the smallest `x ∈ X` in `(a, f(a)]`
/// with `f(b) < a`. When `x0` lies on a period-2 orbit no such `b` exists
/// (every candidate has `f(b) = a`) and construction fails.
pub fn pb_pair_from_displaced_point(f: &PlMap, x0: &Rat, n: u32) -> Result<LemmaPair> {
    if n < 2 {
        return Err(Error::HypothesisNotSatisfied(format!(
            "need n >= 2, got {n}"
        )));
    }
    let fx0 = f.eval(x0)?;
    let fnx0 = f.iterate_eval(n, x0)?;
    if !(fnx0 <= *x0 && *x0 < fx0) {
        return Err(Error::HypothesisNotSatisfied(format!(
            "f^{n}(x0) = {fnx0} <= x0 = {x0} < f(x0) = {fx0} does not hold"
        )));
    }
    let xs = f.trajectory(x0, n as usize)?;
    let a = xs
        .iter()
        .filter(|x| *x >= x0 && &f.eval_unchecked(x) > *x)
        .max()
        .cloned()
        .expect("x0 itself qualifies");
    let fa = f.eval_unchecked(&a);
    let b = xs
        .iter()
        .filter(|x| *x > &a && *x <= &fa && f.eval_unchecked(x) < a)
        .min()
        .cloned()
        .ok_or_else(|| {
            failed(format!(
                "no point b of the trajectory in (a, f(a)] = ({a}, {fa}] has f(b) < a"
            ))
        })?;
    let fb = f.eval_unchecked(&b);
    ensure(fb < a && a < b && b <= fa, || {
        format!("f(b) = {fb} < a = {a} < b = {b} <= f(a) = {fa} fails")
    })?;
    Ok(LemmaPair { a, b })
}

/// The points built from a lemma pair `(a, b)`:
///
/// * `z` smallest fixed point in `(a, b)`
/// * `v` largest solution of `f(x) = b` in `[a, z)`
/// * `u` largest solution of `f(x) = z` in `[min I, v]`, or `min I`
/// * `y` largest point of least period 2 in `[u, v)`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Witness {
    pub a: Rat,
    pub b: Rat,
    pub z: Rat,
    pub y: Rat,
    pub v: Rat,
    pub u: Rat,
}

impl Lemma1Witness {
    /// Re-checks every defining equality and inequality from scratch,
    /// including `f(x) > z` and `f²(x) < x` on all of `(y, v]`.
    pub fn verify(&self, f: &PlMap) -> Result<()> {
        let Lemma1Witness { b, z, y, v, .. } = self;
        let fz = f.eval(z)?;
        ensure(&fz == z, || format!("f(z) = {fz} != z = {z}"))?;
        let fy = f.eval(y)?;
        let f2y = f.eval(&fy)?;
        ensure(&f2y == y, || format!("f^2(y) = {f2y} != y = {y}"))?;
        ensure(&fy != y, || format!("y = {y} is a fixed point"))?;
        let fv = f.eval(v)?;
        ensure(&fv == b, || format!("f(v) = {fv} != b = {b}"))?;
        let f2v = f.eval(&fv)?;
        let lower = if f2v > *y { &f2v } else { y };
        let upper = if fy < fv { &fy } else { &fv };
        ensure(lower < v && v < z && z < upper, || {
            format!("max{{f^2(v), y}} = {lower} < v = {v} < z = {z} < min{{f(y), f(v)}} = {upper} fails")
        })?;

        let image = f.interval_image(y, v)?;
        ensure(&image.min > z, || {
            format!("f attains {} <= z = {z} at {} in [y, v]", image.min, image.argmin)
        })?;
        laps::for_each_lap(f, 2, y, v, &mut |lap| {
            for x in [&lap.lo, &lap.hi] {
                let h = lap.map.apply(x) - x;
                let ok = if x == y {
                    h == Rat::default()
                } else {
                    h < Rat::default()
                };
                ensure(ok, || format!("f^2(x) - x = {h} at x = {x} in (y, v]"))?;
            }
            Ok(())
        })
    }
}

pub fn lemma1_witness(f: &PlMap, a: &Rat, b: &Rat) -> Result<Lemma1Witness> {
    if hypothesis(f, a, b)?.is_none() {
        return Err(Error::HypothesisNotSatisfied(format!(
            "neither f(b) < a < b <= f(a) nor f(b) <= a < b < f(a) holds for a = {a}, b = {b}"
        )));
    }
    let fixed = laps::solve_iterate(f, 1, a, b, &crate::plmap::Affine::identity())?;
    let z = smallest(&fixed, "fixed point in (a, b)")?;
    ensure(a < &z && &z < b, || format!("fixed point {z} not inside (a, b)"))?;

    let v = largest(&laps::level_set(f, 1, a, &z, b)?, "f(x) = b on [a, z]")?;
    ensure(v < z, || format!("v = {v} is not below z = {z}"))?;

    let u = match laps::max_point(&laps::level_set(f, 1, f.lo(), &v, &z)?) {
        Some(u) => u.clone(),
        None => f.lo().clone(),
    };

    let period2 = laps::solve_iterate(f, 2, &u, &v, &crate::plmap::Affine::identity())?;
    let y = largest(&period2, "f^2(x) = x on [u, v]")?;
    ensure(u <= y && y < v, || format!("y = {y} not in [u, v) = [{u}, {v})"))?;

    let w = Lemma1Witness {
        a: a.clone(),
        b: b.clone(),
        z,
        y,
        v,
        u,
    };
    w.verify(f)?;
    Ok(w)
}

fn odd_period_at_least_three(orbit: &Orbit) -> Result<()> {
    let m = orbit.least_period;
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::HypothesisNotSatisfied(format!(
            "orbit has period {m}, need an odd period at least 3"
        )));
    }
    Ok(())
}

/// Runs [`pb_pair_from_orbit`] then [`lemma1_witness`].
pub fn witness_from_orbit(f: &PlMap, orbit: &Orbit) -> Result<(OrbitPair, Lemma1Witness)> {
    let pair = pb_pair_from_orbit(f, orbit)?;
    let w = lemma1_witness(f, &pair.a, &pair.b)?;
    Ok((pair, w))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadePoint {
    pub period: u32,
    pub point: Rat,
}

/// Points of every odd period `m + 2, m + 4, …, m + 2·count`, strictly
/// decreasing towards `y`.
///
/// Each point is the smallest solution of `f^(m+2i)(x) = x` in
/// `[y, previous point]`, starting from `v`.
pub fn theorem2_cascade(en: &Enumerator, f: &PlMap, orbit: &Orbit, count: u32) -> Result<Vec<CascadePoint>> {
    odd_period_at_least_three(orbit)?;
    let m = orbit.least_period;
    en.check(m + 2 * count)?;
    let (_, w) = witness_from_orbit(f, orbit)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut prev = w.v.clone();
    for i in 1..=count {
        let period = m + 2 * i;
        let solutions = en.periodic_points_in(f, period, &w.y, &prev)?;
        let point = solutions
            .points
            .first()
            .cloned()
            .ok_or_else(|| failed(format!("no solution of f^{period}(x) = x in [{}, {prev}]", w.y)))?;
        ensure(w.y < point && point < prev, || {
            format!("p_{period} = {point} not strictly between y = {} and {prev}", w.y)
        })?;
        let lp = en.least_period(f, &point)?;
        ensure(lp == period, || format!("p_{period} = {point} has least period {lp}"))?;
        prev = point.clone();
        out.push(CascadePoint { period, point });
    }
    Ok(out)
}

/// Disjoint closed intervals `I0`, `I1` with `f²(I0) ∩ f²(I1) ⊇ I0 ∪ I1`,
/// together with the points used to find them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurbulenceCertificate {
    pub i0_lo: Rat,
    pub i0_hi: Rat,
    pub i1_lo: Rat,
    pub i1_hi: Rat,
    /// smallest fixed point of `f²` in `[v, z]`
    pub z0: Rat,
    /// largest `x ≤ y` with `f²(x) = z0`
    pub d: Rat,
    /// minimum of `f²` over `[d, z0]`
    pub s: Rat,
    /// smallest `x ∈ [d, z0]` with `f²(x) = d`
    pub t: Rat,
    /// smallest point of `[d, z0]` where `f²` attains `s`
    pub w: Rat,
    /// right end of the interval that starts at `max(t, w)`
    pub r: Rat,
}

impl TurbulenceCertificate {
    pub fn verify(&self, f: &PlMap) -> Result<()> {
        let c = self;
        ensure(c.i0_lo <= c.i0_hi && c.i1_lo <= c.i1_hi, || "empty interval".into())?;
        ensure(c.i0_hi < c.i1_lo, || {
            format!("I0 = [{}, {}] and I1 = [{}, {}] are not disjoint", c.i0_lo, c.i0_hi, c.i1_lo, c.i1_hi)
        })?;
        ensure(c.s < c.d && c.d <= c.i0_lo, || {
            format!("s = {} < d = {} <= I0_lo = {} fails", c.s, c.d, c.i0_lo)
        })?;
        ensure(c.i1_hi <= c.z0, || format!("I1 extends past z0 = {}", c.z0))?;
        for (lo, hi, name) in [(&c.i0_lo, &c.i0_hi, "I0"), (&c.i1_lo, &c.i1_hi, "I1")] {
            let image = laps::iterate_image(f, 2, lo, hi)?;
            ensure(image.covers(&c.i0_lo, &c.i1_hi), || {
                format!(
                    "f^2({name}) = [{}, {}] does not cover [{}, {}]",
                    image.min, image.max, c.i0_lo, c.i1_hi
                )
            })?;
        }
        Ok(())
    }
}

/// The objects shared by the turbulence and even-period constructions.
#[derive(Debug, Clone)]
struct SquareSetup {
    witness: Lemma1Witness,
    z0: Rat,
    d: Rat,
    s: Rat,
    w: Rat,
    t: Rat,
}

fn square_setup(f: &PlMap, orbit: &Orbit) -> Result<SquareSetup> {
    odd_period_at_least_three(orbit)?;
    let (_, witness) = witness_from_orbit(f, orbit)?;
    let Lemma1Witness { y, v, z, .. } = &witness;

    let z0 = laps::fixed_points(f, 2, v, z)?
        .into_iter()
        .next()
        .ok_or_else(|| failed("no fixed point of f^2 in [v, z]"))?;
    ensure(v < &z0 && &z0 <= z, || format!("z0 = {z0} not in (v, z]"))?;

    let d = largest(&laps::level_set(f, 2, f.lo(), y, &z0)?, "f^2(x) = z0 on [min I, y]")?;
    ensure(&d < y, || format!("d = {d} is not below y = {y}"))?;

    let image = laps::iterate_image(f, 2, &d, &z0)?;
    let (s, w) = (image.min, image.argmin);
    ensure(s < d, || format!("s = {s} is not below d = {d}"))?;

    let t = smallest(&laps::level_set(f, 2, &d, &z0, &d)?, "f^2(x) = d on [d, z0]")?;
    Ok(SquareSetup {
        witness,
        z0,
        d,
        s,
        w,
        t,
    })
}

pub fn theorem3_turbulence(f: &PlMap, orbit: &Orbit) -> Result<TurbulenceCertificate> {
    let SquareSetup { z0, d, s, w, t, .. } = square_setup(f, orbit)?;
    ensure(w != t, || format!("w = t = {w}"))?;
    let (i0_hi, i1_lo) = if w < t { (w.clone(), t.clone()) } else { (t.clone(), w.clone()) };
    let r = smallest(&laps::level_set(f, 2, &i1_lo, &z0, &z0)?, "f^2(x) = z0 on [I1_lo, z0]")?;
    let cert = TurbulenceCertificate {
        i0_lo: d.clone(),
        i0_hi,
        i1_lo,
        i1_hi: r.clone(),
        z0,
        d,
        s,
        t,
        w,
        r,
    };
    cert.verify(f)?;
    Ok(cert)
}

/// An orbit of least period `2n` for `f`, built from a period-`n` orbit of
/// the truncated square `ĝ(x) = max{f²(x), d}` on `[d, z0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenPeriodOrbit {
    pub n: u32,
    /// smallest fixed point of `ĝ^n` in `[d, t]`
    pub c: Rat,
    /// the `ĝ`-orbit of `c`
    pub square_orbit: Orbit,
    /// `square_orbit ∪ f(square_orbit)`
    pub orbit: Orbit,
}

/// For `n = 1..=n_max`, an orbit of least period `2n`.
pub fn even_period_orbits(en: &Enumerator, f: &PlMap, orbit: &Orbit, n_max: u32) -> Result<Vec<EvenPeriodOrbit>> {
    en.check(2 * n_max)?;
    let SquareSetup { witness, z0, d, t, .. } = square_setup(f, orbit)?;
    let g = f.compose(f)?;
    let g_max = g.interval_image(&d, &z0)?.max;
    ensure(g_max <= z0, || format!("f^2 exceeds z0 = {z0} on [d, z0]"))?;
    let g_hat = g.clamp_on(&d, &z0)?;

    let mut out: Vec<EvenPeriodOrbit> = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let c = en
            .periodic_points_in(&g_hat, n, &d, &t)?
            .points
            .first()
            .cloned()
            .ok_or_else(|| failed(format!("no fixed point of g^{n} in [d, t]")))?;
        ensure(d < c, || format!("c_{n} = {c} is not above d = {d}"))?;
        match out.last() {
            None => ensure(c <= witness.y, || format!("c_1 = {c} exceeds y = {}", witness.y))?,
            Some(prev) => ensure(c < prev.c, || format!("c_{n} = {c} is not below c_{} = {}", n - 1, prev.c))?,
        }

        let square_orbit = en.orbit_of(&g_hat, &c)?;
        ensure(square_orbit.least_period == n, || {
            format!("c_{n} = {c} has least period {} under the truncated square", square_orbit.least_period)
        })?;
        for q in &square_orbit.points {
            ensure(&d < q && q < &z0, || format!("orbit point {q} not in (d, z0)"))?;
            ensure(g.eval(q)? == g_hat.eval(q)?, || format!("truncation is active at {q}"))?;
        }
        let orbit = en.orbit_of(f, &c)?;
        ensure(orbit.least_period == 2 * n, || {
            format!("c_{n} = {c} has least period {} under f", orbit.least_period)
        })?;
        for q in &square_orbit.points {
            let fq = f.eval(q)?;
            ensure(orbit.contains(q) && orbit.contains(&fq), || {
                format!("{q} or f({q}) = {fq} missing from the f-orbit")
            })?;
        }
        out.push(EvenPeriodOrbit {
            n,
            c,
            square_orbit,
            orbit,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn tent() -> PlMap {
        PlMap::new(vec![(int(0), int(0)), (rat(1, 2), int(1)), (int(1), int(0))]).unwrap()
    }

    fn period3(en: &Enumerator) -> (Orbit, Orbit) {
        let o = en.orbits_of_period(&tent(), 3).unwrap();
        (o[1].clone(), o[0].clone())
    }

    #[test]
    fn orbit_pairs_on_tent() {
        let en = Enumerator::default();
        let (small, wide) = period3(&en);
        let pair = pb_pair_from_orbit(&tent(), &small).unwrap();
        assert_eq!((pair.p, pair.b, pair.a), (rat(4, 7), rat(6, 7), rat(4, 7)));
        let pair = pb_pair_from_orbit(&tent(), &wide).unwrap();
        assert_eq!((pair.p, pair.b), (rat(4, 9), rat(8, 9)));
    }

    #[test]
    fn orbit_pair_rejects_foreign_orbit() {
        let en = Enumerator::default();
        let (small, _) = period3(&en);
        let clamped = tent().clamp(&rat(1, 4), &rat(3, 4)).unwrap();
        assert!(matches!(
            pb_pair_from_orbit(&clamped, &small),
            Err(Error::InvalidOrbit(_))
        ));
        let p2 = en.orbits_of_period(&tent(), 2).unwrap().remove(0);
        assert!(matches!(
            pb_pair_from_orbit(&tent(), &p2),
            Err(Error::HypothesisNotSatisfied(_))
        ));
    }

    #[test]
    fn lemma_witness_on_tent() {
        let w = lemma1_witness(&tent(), &rat(4, 7), &rat(6, 7)).unwrap();
        assert_eq!((&w.z, &w.y, &w.v, &w.u), (&rat(2, 3), &rat(2, 5), &rat(4, 7), &rat(1, 3)));
        w.verify(&tent()).unwrap();
    }

    #[test]
    fn lemma_hypothesis_forms() {
        let t = tent();
        // f(6/7) = 2/7 < 4/7 < 6/7 = f(4/7)
        assert_eq!(hypothesis(&t, &rat(4, 7), &rat(6, 7)).unwrap(), Some(Hypothesis::Left));
        // f(4/5) = 2/5 <= 2/5 < 4/5 < f(2/5)? f(2/5) = 4/5, not strict
        assert_eq!(hypothesis(&t, &rat(2, 5), &rat(4, 5)).unwrap(), None);
        // f(3/4) = 1/2 <= 1/2 < 3/4 < 1 = f(1/2)
        assert_eq!(hypothesis(&t, &rat(1, 2), &rat(3, 4)).unwrap(), Some(Hypothesis::Right));
        let w = lemma1_witness(&t, &rat(1, 2), &rat(3, 4)).unwrap();
        w.verify(&t).unwrap();
        assert!(matches!(
            lemma1_witness(&t, &rat(2, 5), &rat(4, 5)),
            Err(Error::HypothesisNotSatisfied(_))
        ));
    }

    #[test]
    fn witness_verify_catches_tampering() {
        let t = tent();
        let mut w = lemma1_witness(&t, &rat(4, 7), &rat(6, 7)).unwrap();
        w.y = rat(1, 3);
        assert!(matches!(w.verify(&t), Err(Error::ConstructionFailed(_))));
    }

    #[test]
    fn displaced_point_pairs() {
        let t = tent();
        let t3 = t.clamp(&rat(2, 7), &rat(6, 7)).unwrap();
        let pair = pb_pair_from_displaced_point(&t3, &rat(2, 7), 3).unwrap();
        assert_eq!((pair.a, pair.b), (rat(4, 7), rat(6, 7)));
        // {2/5, 4/5}: hypothesis holds but f(b) = a for the only candidate
        assert!(matches!(
            pb_pair_from_displaced_point(&t, &rat(2, 5), 2),
            Err(Error::ConstructionFailed(_))
        ));
        assert!(matches!(
            pb_pair_from_displaced_point(&t, &rat(2, 3), 3),
            Err(Error::HypothesisNotSatisfied(_))
        ));
    }

    #[test]
    fn cascade_on_tent() {
        let en = Enumerator::default();
        let (small, _) = period3(&en);
        let c = theorem2_cascade(&en, &tent(), &small, 2).unwrap();
        assert_eq!(c[0], CascadePoint { period: 5, point: rat(14, 33) });
        assert_eq!(c[1].period, 7);
        assert!(rat(2, 5) < c[1].point && c[1].point < rat(14, 33));
        let orbit = en.orbit_of(&tent(), &rat(14, 33)).unwrap();
        assert_eq!(
            orbit.points,
            vec![rat(10, 33), rat(14, 33), rat(20, 33), rat(26, 33), rat(28, 33)]
        );
    }

    #[test]
    fn cascade_rejects_even_orbits_and_horizon() {
        let en = Enumerator::new(6);
        let (small, _) = period3(&Enumerator::default());
        assert!(matches!(
            theorem2_cascade(&en, &tent(), &small, 2),
            Err(Error::HorizonExceeded { requested: 7, horizon: 6 })
        ));
    }

    #[test]
    fn turbulence_on_tent() {
        let en = Enumerator::default();
        let (small, _) = period3(&en);
        let c = theorem3_turbulence(&tent(), &small).unwrap();
        assert_eq!((&c.z0, &c.d, &c.s, &c.t), (&rat(2, 3), &rat(1, 3), &int(0), &rat(5, 12)));
        assert_eq!((&c.i0_lo, &c.i0_hi), (&rat(1, 3), &rat(5, 12)));
        assert_eq!((&c.i1_lo, &c.i1_hi), (&rat(1, 2), &rat(2, 3)));
        let g0 = laps::iterate_image(&tent(), 2, &c.i0_lo, &c.i0_hi).unwrap();
        assert!(g0.covers(&c.d, &c.z0));
    }

    #[test]
    fn even_orbits_on_tent() {
        let en = Enumerator::default();
        let (small, _) = period3(&en);
        let evens = even_period_orbits(&en, &tent(), &small, 6).unwrap();
        assert_eq!(evens[0].orbit.points, vec![rat(2, 5), rat(4, 5)]);
        assert_eq!(evens[0].c, rat(2, 5));
        for (i, e) in evens.iter().enumerate() {
            assert_eq!(e.orbit.least_period, 2 * (i as u32 + 1));
            assert!(e.orbit.is_orbit_of(&tent()));
        }
        assert_eq!(evens[2].orbit.points.len(), 6);
        for w in evens.windows(2) {
            assert!(w[1].c < w[0].c);
        }
    }
}
