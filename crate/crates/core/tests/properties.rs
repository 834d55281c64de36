use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;

use sharkovsky::counterexample::{random_plmap, tent};
use sharkovsky::document::MapDocument;
use sharkovsky::forcing::verify_forcing_closure;
use sharkovsky::laps;
use sharkovsky::order;
use sharkovsky::rat::{median, rat};
use sharkovsky::{Enumerator, Error, PlMap, Rat};

const DEN: i64 = 12;

// Maps on [0, 1] with breakpoints and values on the grid k/12.
fn grid_map(max_pieces: usize) -> impl Strategy<Value = PlMap> {
    proptest::sample::subsequence((1..DEN).collect::<Vec<_>>(), 0..max_pieces).prop_flat_map(|breaks| {
        let n = breaks.len() + 2;
        proptest::collection::vec(0..=DEN, n).prop_map(move |ys| {
            let xs = std::iter::once(0).chain(breaks.iter().copied()).chain(std::iter::once(DEN));
            PlMap::new(xs.zip(ys).map(|(x, y)| (rat(x, DEN), rat(y, DEN))).collect()).unwrap()
        })
    })
}

fn unit_point() -> impl Strategy<Value = Rat> {
    (0i64..=97).prop_map(|k| rat(k, 97))
}

// Fixed points of a materialized map, one linear piece at a time.
fn materialized_fixed_points(g: &PlMap) -> Result<Vec<Rat>, ()> {
    let mut out = BTreeSet::new();
    for i in 0..g.piece_count() {
        let (lo, hi) = g.piece_bounds(i);
        let a = g.piece(i);
        if a.slope.is_one() {
            if a.offset.is_zero() {
                return Err(());
            }
            continue;
        }
        let x = &a.offset / (Rat::one() - &a.slope);
        if lo <= &x && &x <= hi {
            out.insert(x);
        }
    }
    Ok(out.into_iter().collect())
}

fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn order_trichotomy(m in 1u64..=10_000, n in 1u64..=10_000) {
        let forward = order::precedes(m, n).unwrap();
        let backward = order::precedes(n, m).unwrap();
        prop_assert_eq!([forward, m == n, backward].iter().filter(|&&b| b).count(), 1);
        let expected = if m == n { Ordering::Equal } else if forward { Ordering::Less } else { Ordering::Greater };
        prop_assert_eq!(order::compare(m, n).unwrap(), expected);
    }

    #[test]
    fn order_transitivity(a in 1u64..=200, b in 1u64..=200, c in 1u64..=200) {
        if order::precedes(a, b).unwrap() && order::precedes(b, c).unwrap() {
            prop_assert!(order::precedes(a, c).unwrap());
        }
    }

    #[test]
    fn three_first_one_last(n in 1u64..=100_000) {
        prop_assert_eq!(order::precedes(3, n).unwrap(), n != 3);
        prop_assert_eq!(order::precedes(n, 1).unwrap(), n != 1);
    }

    #[test]
    fn compose_agrees_with_evaluation(f in grid_map(5), g in grid_map(5), x in unit_point()) {
        let fg = f.compose(&g).unwrap();
        prop_assert_eq!(fg.eval(&x).unwrap(), f.eval(&g.eval(&x).unwrap()).unwrap());
        prop_assert_eq!(f.compose(&f).unwrap().eval(&x).unwrap(), f.iterate_eval(2, &x).unwrap());
    }

    #[test]
    fn evaluation_stays_in_domain(f in grid_map(6), x in unit_point()) {
        let y = f.iterate_eval(3, &x).unwrap();
        prop_assert!(f.contains(&y));
    }

    #[test]
    fn interval_image_is_sound_and_tight(f in grid_map(6), a in 0i64..=96, len in 1i64..=97) {
        let lo = rat(a, 97);
        let hi = rat((a + len).min(97), 97);
        prop_assume!(lo < hi);
        let img = f.interval_image(&lo, &hi).unwrap();
        for k in 0..=20 {
            let x = &lo + (&hi - &lo) * rat(k, 20);
            let y = f.eval(&x).unwrap();
            prop_assert!(img.min <= y && y <= img.max);
        }
        prop_assert!(lo <= img.argmin && img.argmin <= hi);
        prop_assert!(lo <= img.argmax && img.argmax <= hi);
        prop_assert_eq!(f.eval(&img.argmin).unwrap(), img.min);
        prop_assert_eq!(f.eval(&img.argmax).unwrap(), img.max);
    }

    #[test]
    fn clamp_is_median_and_idempotent(f in grid_map(5), a in 0i64..12, b in 1i64..=12, x in unit_point()) {
        prop_assume!(a < b);
        let (lo, hi) = (rat(a, 12), rat(b, 12));
        let c = f.clamp(&lo, &hi).unwrap();
        prop_assert_eq!(c.eval(&x).unwrap(), median(&lo, &f.eval(&x).unwrap(), &hi));
        prop_assert_eq!(c.clamp(&lo, &hi).unwrap(), c);
    }

    #[test]
    fn lap_search_matches_materialized_iterates(f in grid_map(3), k in 1u32..=5) {
        let mut g = f.clone();
        for _ in 1..k {
            g = f.compose(&g).unwrap();
        }
        let oracle = materialized_fixed_points(&g);
        let dfs = laps::fixed_points(&f, k, f.lo(), f.hi());
        match (oracle, dfs) {
            (Ok(expected), Ok(found)) => prop_assert_eq!(found, expected),
            (Err(()), Err(Error::NonIsolatedPeriodicPoints { .. })) => {}
            (o, d) => prop_assert!(false, "oracle {:?} vs lap search {:?}", o, d),
        }
    }

    #[test]
    fn orbits_partition_periodic_points(f in grid_map(4), n in 1u32..=6) {
        let en = Enumerator::default();
        let Ok(points) = en.periodic_points(&f, n) else { return Ok(()) };
        // every solution of f^n(x) = x lies on exactly one orbit of least period d | n
        let mut covered = BTreeSet::new();
        for d in divisors(n) {
            for orbit in en.orbits_of_period(&f, d).unwrap() {
                prop_assert!(orbit.is_orbit_of(&f));
                prop_assert_eq!(orbit.points.len() as u32, d);
                prop_assert_eq!(&orbit.diameter, &(orbit.max() - orbit.min()));
                for p in &orbit.points {
                    prop_assert!(covered.insert(p.clone()), "point {} on two orbits", p);
                }
            }
        }
        prop_assert_eq!(covered.into_iter().collect::<Vec<_>>(), points.points);
    }

    #[test]
    fn least_period_is_least(f in grid_map(4), n in 1u32..=5) {
        let en = Enumerator::default();
        let Ok(orbits) = en.orbits_of_period(&f, n) else { return Ok(()) };
        for orbit in orbits {
            for p in &orbit.points {
                for d in divisors(n).filter(|&d| d < n) {
                    prop_assert_ne!(&f.iterate_eval(d, p).unwrap(), p);
                }
                prop_assert_eq!(&f.iterate_eval(n, p).unwrap(), p);
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic(seed in 0u64..1000) {
        let f = random_plmap(seed, 1 + (seed % 5) as usize);
        let en = Enumerator::default();
        prop_assert_eq!(en.orbits_of_period(&f, 4), en.orbits_of_period(&f, 4));
        let a = verify_forcing_closure(&en, &f, 7);
        let b = verify_forcing_closure(&en, &f, 7);
        prop_assert_eq!(a.summary_line(), b.summary_line());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn forcing_closure_on_grid_maps(f in grid_map(4)) {
        let r = verify_forcing_closure(&Enumerator::default(), &f, 7);
        prop_assert!(r.violations.is_empty(), "{}", r);
    }

    #[test]
    fn map_document_round_trip(f in grid_map(8), name in ".{0,20}", provenance in proptest::option::of("[a-z \"\\\\\n]{0,30}")) {
        let mut doc = MapDocument::new(f);
        doc.name = Some(name);
        doc.provenance = provenance;
        let text = doc.to_toml();
        prop_assert_eq!(MapDocument::parse(&text).unwrap(), doc);
    }
}

#[test]
fn tent_divisor_identity() {
    let en = Enumerator::default();
    let t = tent();
    let counts: Vec<usize> = (1..=12).map(|d| en.orbits_of_period(&t, d).unwrap().len()).collect();
    for n in 1..=12u32 {
        let total: usize = divisors(n).map(|d| d as usize * counts[d as usize - 1]).sum();
        assert_eq!(total, 1 << n, "n = {n}");
    }
}

#[test]
fn tail_matches_brute_force() {
    for m in 1..=64u64 {
        let tail = order::tail(m, 64).unwrap();
        let brute: BTreeSet<u64> = (1..=64).filter(|&n| order::precedes_or_eq(m, n).unwrap()).collect();
        assert_eq!(tail.iter().copied().collect::<BTreeSet<_>>(), brute);
        assert!(tail.windows(2).all(|w| order::precedes(w[0], w[1]).unwrap()));
    }
    assert_eq!(order::tail(3, 8).unwrap(), vec![3, 5, 7, 6, 8, 4, 2, 1]);
    assert!(order::tail(0, 8).is_err());
}
