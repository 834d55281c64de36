//! Depth-first traversal of the laps of an iterate `f^k`.
//!
//! The traversal carries the exact affine form of `f^j` on a shrinking
//! subinterval and splits it along the pieces of `f` that the current image
//! meets. The full composition is never built, so memory is bounded by the
//! recursion depth `k`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::plmap::{Affine, Image, PlMap};
use crate::rat::Rat;

/// A closed interval on which `f^k` equals one affine map.
///
/// Laps come out in increasing order of `lo`; consecutive laps share an
/// endpoint. A lap whose image is a single point may span several pieces of
/// the iterate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lap {
    pub lo: Rat,
    pub hi: Rat,
    pub map: Affine,
}

/// A closed solution segment; `lo == hi` for an isolated solution.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Segment {
    pub lo: Rat,
    pub hi: Rat,
}

impl Segment {
    pub fn point(x: Rat) -> Self {
        Segment {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// Visits every lap of `f^k` on `[lo, hi]` in increasing order.
pub fn for_each_lap<F>(f: &PlMap, k: u32, lo: &Rat, hi: &Rat, visit: &mut F) -> Result<()>
where
    F: FnMut(&Lap) -> Result<()>,
{
    if lo > hi {
        return Err(Error::EmptyInterval {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }
    for x in [lo, hi] {
        if !f.contains(x) {
            return Err(Error::OutsideDomain {
                x: x.clone(),
                lo: f.lo().clone(),
                hi: f.hi().clone(),
            });
        }
    }
    if lo == hi {
        let lap = Lap {
            lo: lo.clone(),
            hi: hi.clone(),
            map: Affine::constant(f.iterate_unchecked(k, lo)),
        };
        return visit(&lap);
    }
    descend(f, k, lo.clone(), hi.clone(), Affine::identity(), visit)
}

fn descend<F>(f: &PlMap, remaining: u32, lo: Rat, hi: Rat, map: Affine, visit: &mut F) -> Result<()>
where
    F: FnMut(&Lap) -> Result<()>,
{
    if remaining == 0 {
        return visit(&Lap { lo, hi, map });
    }
    if map.is_constant() {
        let c = f.iterate_unchecked(remaining, &map.offset);
        return visit(&Lap {
            lo,
            hi,
            map: Affine::constant(c),
        });
    }
    let increasing = map.slope.is_positive();
    let (img_lo, img_hi) = if increasing {
        (map.apply(&lo), map.apply(&hi))
    } else {
        (map.apply(&hi), map.apply(&lo))
    };
    let nodes = f.nodes();
    // pieces whose open span meets (img_lo, img_hi)
    let first = nodes[1..].partition_point(|(x, _)| x <= &img_lo);
    let last = nodes[..nodes.len() - 1].partition_point(|(x, _)| x < &img_hi);
    let mut pieces: Vec<usize> = (first..last).collect();
    if !increasing {
        pieces.reverse();
    }
    for i in pieces {
        let (px0, px1) = f.piece_bounds(i);
        let c0 = if px0 > &img_lo { px0 } else { &img_lo };
        let c1 = if px1 < &img_hi { px1 } else { &img_hi };
        let (sub_lo, sub_hi) = if increasing {
            (pull_back(&map, c0, &img_lo, &lo), pull_back(&map, c1, &img_hi, &hi))
        } else {
            (pull_back(&map, c1, &img_hi, &lo), pull_back(&map, c0, &img_lo, &hi))
        };
        let next = map.then(&f.piece(i));
        descend(f, remaining - 1, sub_lo, sub_hi, next, visit)?;
    }
    Ok(())
}

// Reuses the known endpoint when the target is the image of that endpoint.
fn pull_back(map: &Affine, y: &Rat, img_end: &Rat, end: &Rat) -> Rat {
    if y == img_end {
        end.clone()
    } else {
        map.solve(y).expect("non-constant map")
    }
}

/// All solutions of `f^k(x) = target(x)` on `[lo, hi]`, sorted, with
/// touching segments merged.
pub fn solve_iterate(f: &PlMap, k: u32, lo: &Rat, hi: &Rat, target: &Affine) -> Result<Vec<Segment>> {
    let mut found = Vec::new();
    for_each_lap(f, k, lo, hi, &mut |lap| {
        let diff = Affine::new(&lap.map.slope - &target.slope, &lap.map.offset - &target.offset);
        if diff.slope.is_zero() {
            if diff.offset.is_zero() {
                found.push(Segment {
                    lo: lap.lo.clone(),
                    hi: lap.hi.clone(),
                });
            }
        } else {
            let x = diff.solve(&Rat::zero()).expect("non-constant");
            if lap.lo <= x && x <= lap.hi {
                found.push(Segment::point(x));
            }
        }
        Ok(())
    })?;
    Ok(merge(found))
}

fn merge(mut segments: Vec<Segment>) -> Vec<Segment> {
    segments.sort();
    let mut out: Vec<Segment> = Vec::with_capacity(segments.len());
    for s in segments {
        match out.last_mut() {
            Some(prev) if s.lo <= prev.hi => {
                if s.hi > prev.hi {
                    prev.hi = s.hi;
                }
            }
            _ => out.push(s),
        }
    }
    out
}

/// Fixed points of `f^k` on `[lo, hi]`; errors if a lap of `f^k` is the
/// identity on a nondegenerate interval.
pub fn fixed_points(f: &PlMap, k: u32, lo: &Rat, hi: &Rat) -> Result<Vec<Rat>> {
    isolated(k, solve_iterate(f, k, lo, hi, &Affine::identity())?)
}

fn isolated(n: u32, segments: Vec<Segment>) -> Result<Vec<Rat>> {
    segments
        .into_iter()
        .map(|s| {
            if s.is_point() {
                Ok(s.lo)
            } else {
                Err(Error::NonIsolatedPeriodicPoints { n, lo: s.lo, hi: s.hi })
            }
        })
        .collect()
}

/// Solutions of `f^k(x) = c` on `[lo, hi]` as closed segments.
pub fn level_set(f: &PlMap, k: u32, lo: &Rat, hi: &Rat, c: &Rat) -> Result<Vec<Segment>> {
    solve_iterate(f, k, lo, hi, &Affine::constant(c.clone()))
}

/// Exact range of `f^k` over `[lo, hi]`, read off the lap endpoints.
pub fn iterate_image(f: &PlMap, k: u32, lo: &Rat, hi: &Rat) -> Result<Image> {
    let mut image: Option<Image> = None;
    for_each_lap(f, k, lo, hi, &mut |lap| {
        for x in [&lap.lo, &lap.hi] {
            let y = lap.map.apply(x);
            match image.as_mut() {
                None => {
                    image = Some(Image {
                        min: y.clone(),
                        max: y,
                        argmin: x.clone(),
                        argmax: x.clone(),
                    })
                }
                Some(im) => {
                    if y < im.min {
                        im.min = y.clone();
                        im.argmin = x.clone();
                    }
                    if y > im.max {
                        im.max = y;
                        im.argmax = x.clone();
                    }
                }
            }
        }
        Ok(())
    })?;
    Ok(image.expect("at least one lap"))
}

/// Smallest point of a solution set.
pub fn min_point(segments: &[Segment]) -> Option<&Rat> {
    segments.first().map(|s| &s.lo)
}

/// Largest point of a solution set.
pub fn max_point(segments: &[Segment]) -> Option<&Rat> {
    segments.last().map(|s| &s.hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn tent() -> PlMap {
        PlMap::new(vec![(int(0), int(0)), (rat(1, 2), int(1)), (int(1), int(0))]).unwrap()
    }

    #[test]
    fn laps_of_tent_iterates_tile_the_domain() {
        let t = tent();
        for k in 0..=6 {
            let mut laps = Vec::new();
            for_each_lap(&t, k, &int(0), &int(1), &mut |lap| {
                laps.push(lap.clone());
                Ok(())
            })
            .unwrap();
            assert_eq!(laps.len(), 1 << k);
            assert_eq!(laps[0].lo, int(0));
            assert_eq!(laps.last().unwrap().hi, int(1));
            for w in laps.windows(2) {
                assert_eq!(w[0].hi, w[1].lo);
            }
            for lap in &laps {
                let mid = (&lap.lo + &lap.hi) / int(2);
                assert_eq!(lap.map.apply(&mid), t.iterate_eval(k, &mid).unwrap());
            }
        }
    }

    #[test]
    fn restricted_fixed_points() {
        let t = tent();
        assert_eq!(
            fixed_points(&t, 2, &int(0), &int(1)).unwrap(),
            vec![int(0), rat(2, 5), rat(2, 3), rat(4, 5)]
        );
        assert_eq!(
            fixed_points(&t, 2, &rat(1, 3), &rat(4, 7)).unwrap(),
            vec![rat(2, 5)]
        );
        assert_eq!(fixed_points(&t, 1, &rat(2, 3), &rat(2, 3)).unwrap(), vec![rat(2, 3)]);
    }

    #[test]
    fn identity_lap_is_rejected() {
        let id = PlMap::identity(int(0), int(1)).unwrap();
        assert!(matches!(
            fixed_points(&id, 3, &int(0), &int(1)),
            Err(Error::NonIsolatedPeriodicPoints { n: 3, .. })
        ));
    }

    #[test]
    fn level_sets_and_images() {
        let t = tent();
        let sols = level_set(&t, 1, &int(0), &int(1), &rat(2, 3)).unwrap();
        assert_eq!(sols, vec![Segment::point(rat(1, 3)), Segment::point(rat(2, 3))]);
        let sols = level_set(&t, 2, &int(0), &rat(2, 5), &rat(2, 3)).unwrap();
        assert_eq!(max_point(&sols), Some(&rat(1, 3)));
        let im = iterate_image(&t, 2, &rat(1, 3), &rat(2, 3)).unwrap();
        assert_eq!(im.bounds(), (int(0), rat(2, 3)));
        assert_eq!(im.argmin, rat(1, 2));
        let clamped = t.clamp(&rat(2, 7), &rat(6, 7)).unwrap();
        let flat = level_set(&clamped, 1, &int(0), &int(1), &rat(2, 7)).unwrap();
        assert_eq!(flat.len(), 2);
        assert_eq!(flat[0], Segment { lo: int(0), hi: rat(1, 7) });
    }
}
