//! Continuous piecewise-linear self-maps of a compact interval, stored as
//! exact node lists.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{median, Rat};

/// `x ↦ slope·x + offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Affine {
    pub slope: Rat,
    pub offset: Rat,
}

impl Affine {
    pub fn new(slope: Rat, offset: Rat) -> Self {
        Affine { slope, offset }
    }

    pub fn identity() -> Self {
        Affine::new(Rat::one(), Rat::zero())
    }

    pub fn constant(c: Rat) -> Self {
        Affine::new(Rat::zero(), c)
    }

    /// The affine map through `(x0, y0)` and `(x1, y1)`; requires `x0 != x1`.
    pub fn through(x0: &Rat, y0: &Rat, x1: &Rat, y1: &Rat) -> Self {
        let slope = (y1 - y0) / (x1 - x0);
        let offset = y0 - &slope * x0;
        Affine::new(slope, offset)
    }

    pub fn apply(&self, x: &Rat) -> Rat {
        &self.slope * x + &self.offset
    }

    /// `outer ∘ self`.
    pub fn then(&self, outer: &Affine) -> Affine {
        Affine::new(
            &outer.slope * &self.slope,
            &outer.slope * &self.offset + &outer.offset,
        )
    }

    /// The unique `x` with `self(x) = y`, if the map is not constant.
    pub fn solve(&self, y: &Rat) -> Option<Rat> {
        if self.slope.is_zero() {
            None
        } else {
            Some((y - &self.offset) / &self.slope)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.slope.is_zero()
    }
}

/// Exact range of a map over a closed interval, with the smallest points
/// attaining each bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    pub min: Rat,
    pub max: Rat,
    pub argmin: Rat,
    pub argmax: Rat,
}

impl Image {
    pub fn bounds(&self) -> (Rat, Rat) {
        (self.min.clone(), self.max.clone())
    }

    pub fn covers(&self, lo: &Rat, hi: &Rat) -> bool {
        &self.min <= lo && hi <= &self.max
    }
}

/// A continuous piecewise-linear map `[lo, hi] → [lo, hi]`.
///
/// Nodes are strictly increasing in `x`; between nodes the map is the linear
/// interpolant. Collinear interior nodes are removed on construction, so two
/// maps are equal exactly when their node lists are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlMap {
    nodes: Vec<(Rat, Rat)>,
}

impl PlMap {
    pub fn new(nodes: Vec<(Rat, Rat)>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::InvalidMap(
                "at least two nodes are required".to_string(),
            ));
        }
        for (i, w) in nodes.windows(2).enumerate() {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidMap(format!(
                    "node x values must strictly increase (node {} has x = {}, node {} has x = {})",
                    i,
                    w[0].0,
                    i + 1,
                    w[1].0
                )));
            }
        }
        let lo = &nodes[0].0;
        let hi = &nodes[nodes.len() - 1].0;
        for (i, (_, y)) in nodes.iter().enumerate() {
            if y < lo || y > hi {
                return Err(Error::InvalidMap(format!(
                    "node {i} has value {y} outside [{lo}, {hi}]: not a self-map"
                )));
            }
        }
        Ok(PlMap {
            nodes: normalize(nodes),
        })
    }

    pub fn identity(lo: Rat, hi: Rat) -> Result<Self> {
        PlMap::new(vec![(lo.clone(), lo), (hi.clone(), hi)])
    }

    pub fn constant(lo: Rat, hi: Rat, c: Rat) -> Result<Self> {
        PlMap::new(vec![(lo, c.clone()), (hi, c)])
    }

    pub fn nodes(&self) -> &[(Rat, Rat)] {
        &self.nodes
    }

    pub fn lo(&self) -> &Rat {
        &self.nodes[0].0
    }

    pub fn hi(&self) -> &Rat {
        &self.nodes[self.nodes.len() - 1].0
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.lo() <= x && x <= self.hi()
    }

    pub fn piece_count(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn piece_bounds(&self, i: usize) -> (&Rat, &Rat) {
        (&self.nodes[i].0, &self.nodes[i + 1].0)
    }

    /// The affine form of the map on piece `i`.
    pub fn piece(&self, i: usize) -> Affine {
        let (x0, y0) = &self.nodes[i];
        let (x1, y1) = &self.nodes[i + 1];
        Affine::through(x0, y0, x1, y1)
    }

    /// Index of the first piece whose closed span contains `x`.
    pub(crate) fn piece_index(&self, x: &Rat) -> usize {
        // first node with node_x >= x, minus one, clamped to a valid piece
        let k = self.nodes.partition_point(|(nx, _)| nx < x);
        k.saturating_sub(1).min(self.piece_count() - 1)
    }

    fn check_domain(&self, x: &Rat) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutsideDomain {
                x: x.clone(),
                lo: self.lo().clone(),
                hi: self.hi().clone(),
            })
        }
    }

    pub(crate) fn eval_unchecked(&self, x: &Rat) -> Rat {
        let i = self.piece_index(x);
        let (x0, y0) = &self.nodes[i];
        if x == x0 {
            return y0.clone();
        }
        let (x1, y1) = &self.nodes[i + 1];
        if x == x1 {
            return y1.clone();
        }
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        self.check_domain(x)?;
        Ok(self.eval_unchecked(x))
    }

    /// `f^n(x)`; `n = 0` returns `x`.
    pub fn iterate_eval(&self, n: u32, x: &Rat) -> Result<Rat> {
        self.check_domain(x)?;
        Ok(self.iterate_unchecked(n, x))
    }

    pub(crate) fn iterate_unchecked(&self, n: u32, x: &Rat) -> Rat {
        let mut v = x.clone();
        for _ in 0..n {
            v = self.eval_unchecked(&v);
        }
        v
    }

    /// The sequence `x, f(x), …, f^len−1(x)`.
    pub fn trajectory(&self, x: &Rat, len: usize) -> Result<Vec<Rat>> {
        self.check_domain(x)?;
        let mut out = Vec::with_capacity(len);
        let mut v = x.clone();
        for _ in 0..len {
            let next = self.eval_unchecked(&v);
            out.push(v);
            v = next;
        }
        Ok(out)
    }

    /// `self ∘ inner`, materialized.
    pub fn compose(&self, inner: &PlMap) -> Result<PlMap> {
        let range = inner.interval_image(inner.lo(), inner.hi())?;
        if &range.min < self.lo() || &range.max > self.hi() {
            return Err(Error::DomainMismatch {
                range_lo: range.min,
                range_hi: range.max,
                lo: self.lo().clone(),
                hi: self.hi().clone(),
            });
        }
        let mut xs: Vec<Rat> = Vec::new();
        for i in 0..inner.piece_count() {
            let (x0, x1) = inner.piece_bounds(i);
            xs.push(x0.clone());
            let aff = inner.piece(i);
            let (y0, y1) = (&inner.nodes[i].1, &inner.nodes[i + 1].1);
            let (ylo, yhi) = if y0 <= y1 { (y0, y1) } else { (y1, y0) };
            let mut crossings: Vec<Rat> = self
                .nodes
                .iter()
                .filter(|(nx, _)| ylo < nx && nx < yhi)
                .filter_map(|(nx, _)| aff.solve(nx))
                .filter(|x| x0 < x && x < x1)
                .collect();
            crossings.sort();
            xs.extend(crossings);
        }
        xs.push(inner.hi().clone());
        let nodes = xs
            .into_iter()
            .map(|x| {
                let y = self.eval_unchecked(&inner.eval_unchecked(&x));
                (x, y)
            })
            .collect();
        PlMap::new(nodes)
    }

    /// `x ↦ median(lo, f(x), hi)` on the full domain.
    pub fn clamp(&self, lo: &Rat, hi: &Rat) -> Result<PlMap> {
        self.check_bounds(lo, hi)?;
        PlMap::new(clamp_nodes(&self.nodes, lo, hi))
    }

    /// `x ↦ median(lo, f(x), hi)` as a self-map of `[lo, hi]`.
    pub fn clamp_on(&self, lo: &Rat, hi: &Rat) -> Result<PlMap> {
        self.check_bounds(lo, hi)?;
        let mut sub = vec![(lo.clone(), self.eval_unchecked(lo))];
        sub.extend(
            self.nodes
                .iter()
                .filter(|(x, _)| lo < x && x < hi)
                .cloned(),
        );
        sub.push((hi.clone(), self.eval_unchecked(hi)));
        PlMap::new(clamp_nodes(&sub, lo, hi))
    }

    fn check_bounds(&self, lo: &Rat, hi: &Rat) -> Result<()> {
        if lo >= hi || lo < self.lo() || hi > self.hi() {
            return Err(Error::InvalidBounds {
                lo: lo.clone(),
                hi: hi.clone(),
            });
        }
        Ok(())
    }

    /// Exact minimum and maximum of the map over `[lo, hi]`.
    pub fn interval_image(&self, lo: &Rat, hi: &Rat) -> Result<Image> {
        if lo > hi {
            return Err(Error::EmptyInterval {
                lo: lo.clone(),
                hi: hi.clone(),
            });
        }
        self.check_domain(lo)?;
        self.check_domain(hi)?;
        let y_lo = self.eval_unchecked(lo);
        let mut image = Image {
            min: y_lo.clone(),
            max: y_lo,
            argmin: lo.clone(),
            argmax: lo.clone(),
        };
        let interior = self.nodes.iter().filter(|(x, _)| lo < x && x < hi);
        let last = (hi.clone(), self.eval_unchecked(hi));
        for (x, y) in interior.chain(std::iter::once(&last)) {
            if y < &image.min {
                image.min = y.clone();
                image.argmin = x.clone();
            }
            if y > &image.max {
                image.max = y.clone();
                image.argmax = x.clone();
            }
        }
        Ok(image)
    }
}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nodes
            .iter()
            .map(|(x, y)| format!("({x}, {y})"))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Inserts the crossings of `lo` and `hi` into each piece, then clamps every
/// node value. The input need not be a self-map.
fn clamp_nodes(nodes: &[(Rat, Rat)], lo: &Rat, hi: &Rat) -> Vec<(Rat, Rat)> {
    let mut out = Vec::with_capacity(nodes.len() * 2);
    for w in nodes.windows(2) {
        let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
        out.push((x0.clone(), median(lo, y0, hi)));
        if y0 == y1 {
            continue;
        }
        let aff = Affine::through(x0, y0, x1, y1);
        let mut crossings: Vec<Rat> = [lo, hi]
            .into_iter()
            .filter_map(|level| aff.solve(level))
            .filter(|x| x0 < x && x < x1)
            .collect();
        crossings.sort();
        crossings.dedup();
        out.extend(crossings.into_iter().map(|x| {
            let y = median(lo, &aff.apply(&x), hi);
            (x, y)
        }));
    }
    let (xl, yl) = &nodes[nodes.len() - 1];
    out.push((xl.clone(), median(lo, yl, hi)));
    out
}

/// Drops interior nodes that lie on the segment joining their neighbours.
fn normalize(nodes: Vec<(Rat, Rat)>) -> Vec<(Rat, Rat)> {
    let mut out: Vec<(Rat, Rat)> = Vec::with_capacity(nodes.len());
    for node in nodes {
        while out.len() >= 2 {
            let (xa, ya) = &out[out.len() - 2];
            let (xb, yb) = &out[out.len() - 1];
            let (xc, yc) = &node;
            if (yb - ya) * (xc - xb) == (yc - yb) * (xb - xa) {
                out.pop();
            } else {
                break;
            }
        }
        out.push(node);
    }
    out
}
