//! Graph and cobweb data for plotting, as exact CSV or a static SVG.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::Result;
use crate::plmap::PlMap;
use crate::rat::{to_decimal, to_f64, Rat};

/// A labelled point to highlight on the graph of the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mark {
    pub label: String,
    pub x: Rat,
}

/// `(x, f(x))` at `grid + 1` equally spaced points and at every node,
/// sorted by `x`.
pub fn graph_samples(f: &PlMap, grid: u32) -> Vec<(Rat, Rat)> {
    let grid = grid.max(1);
    let width = f.hi() - f.lo();
    let mut xs: BTreeSet<Rat> = f.nodes().iter().map(|(x, _)| x.clone()).collect();
    for i in 0..=grid {
        xs.insert(f.lo() + &width * Rat::new(i.into(), grid.into()));
    }
    xs.into_iter()
        .map(|x| {
            let y = f.eval_unchecked(&x);
            (x, y)
        })
        .collect()
}

/// The cobweb path `(x0, x0), (x0, f(x0)), (f(x0), f(x0)), …` with one
/// vertical and one horizontal segment per step.
pub fn cobweb_path(f: &PlMap, x0: &Rat, steps: u32) -> Result<Vec<(Rat, Rat)>> {
    let mut x = x0.clone();
    f.eval(&x)?;
    let mut path = vec![(x.clone(), x.clone())];
    for _ in 0..steps {
        let y = f.eval_unchecked(&x);
        path.push((x, y.clone()));
        path.push((y.clone(), y.clone()));
        x = y;
    }
    Ok(path)
}

/// Rows `series,x,y` for the nodes, the sampled graph and the optional
/// cobweb path. With `decimal`, two rounded columns are appended.
pub fn csv(f: &PlMap, grid: u32, cobweb: Option<&[(Rat, Rat)]>, decimal: bool) -> String {
    let mut out = String::new();
    out.push_str("series,x,y");
    if decimal {
        out.push_str(",x_approx,y_approx");
    }
    out.push('\n');
    let mut row = |series: &str, x: &Rat, y: &Rat| {
        write!(out, "{series},{x},{y}").unwrap();
        if decimal {
            write!(out, ",{},{}", to_decimal(x, 6), to_decimal(y, 6)).unwrap();
        }
        out.push('\n');
    };
    for (x, y) in f.nodes() {
        row("node", x, y);
    }
    for (x, y) in graph_samples(f, grid) {
        row("graph", &x, &y);
    }
    for (x, y) in cobweb.unwrap_or(&[]) {
        row("cobweb", x, y);
    }
    out
}

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

struct Frame {
    lo: f64,
    span: f64,
}

impl Frame {
    fn px(&self, x: &Rat) -> f64 {
        MARGIN + (to_f64(x) - self.lo) / self.span * (SIZE - 2.0 * MARGIN)
    }

    fn py(&self, y: &Rat) -> f64 {
        SIZE - self.px(y)
    }

    fn polyline(&self, points: &[(Rat, Rat)]) -> String {
        points
            .iter()
            .map(|(x, y)| format!("{:.2},{:.2}", self.px(x), self.py(y)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A static picture of the map over its domain square with the diagonal,
/// an optional cobweb path and optional marked points on the graph.
pub fn svg(f: &PlMap, cobweb: Option<&[(Rat, Rat)]>, marks: &[Mark]) -> String {
    let frame = Frame {
        lo: to_f64(f.lo()),
        span: to_f64(&(f.hi() - f.lo())),
    };
    let (lo, hi) = (f.lo(), f.hi());
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let square = [(lo.clone(), lo.clone()), (hi.clone(), lo.clone()), (hi.clone(), hi.clone()), (lo.clone(), hi.clone()), (lo.clone(), lo.clone())];
    writeln!(s, r#"<polyline points="{}" fill="none" stroke="black" stroke-width="1"/>"#, frame.polyline(&square)).unwrap();
    let diagonal = [(lo.clone(), lo.clone()), (hi.clone(), hi.clone())];
    writeln!(
        s,
        r##"<polyline points="{}" fill="none" stroke="#888888" stroke-width="1" stroke-dasharray="4 4"/>"##,
        frame.polyline(&diagonal)
    )
    .unwrap();
    writeln!(
        s,
        r##"<polyline points="{}" fill="none" stroke="#1f4e9c" stroke-width="2"/>"##,
        frame.polyline(f.nodes())
    )
    .unwrap();
    if let Some(path) = cobweb {
        writeln!(
            s,
            r##"<polyline points="{}" fill="none" stroke="#c0392b" stroke-width="1"/>"##,
            frame.polyline(path)
        )
        .unwrap();
    }
    for m in marks.iter().filter(|m| f.contains(&m.x)) {
        let y = f.eval_unchecked(&m.x);
        let (cx, cy) = (frame.px(&m.x), frame.py(&y));
        writeln!(s, r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="4" fill="#2e8b57"/>"##).unwrap();
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="11">{}={}</text>"#,
            cx + 6.0,
            cy - 6.0,
            m.label,
            m.x
        )
        .unwrap();
    }
    for (x, label) in [(lo, lo.to_string()), (hi, hi.to_string())] {
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="11" text-anchor="middle">{label}</text>"#,
            frame.px(x),
            SIZE - MARGIN + 16.0
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
