//! Plain-text witness reports.
//!
//! A report is a sequence of `[section]` headers followed by `key = value`
//! lines, values printed exactly as `p/q`. Lines starting with `check:` echo
//! the inequalities that were certified. With `decimal` set, numeric lines
//! get a trailing `# ~ 0.123456` comment; those digits are rounded and carry
//! no guarantee.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::orbits::Orbit;
use crate::plmap::PlMap;
use crate::rat::{parse_rat, to_decimal, Rat};
use crate::witness::{CascadePoint, EvenPeriodOrbit, Lemma1Witness, OrbitPair, TurbulenceCertificate};

const DECIMAL_PLACES: usize = 6;

pub struct ReportWriter {
    out: String,
    decimal: bool,
}

fn join(points: &[Rat]) -> String {
    points.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl ReportWriter {
    pub fn new(decimal: bool) -> Self {
        ReportWriter {
            out: String::new(),
            decimal,
        }
    }

    pub fn finish(self) -> String {
        self.out
    }

    pub fn section(&mut self, name: &str) {
        if !self.out.is_empty() {
            self.out.push('\n');
        }
        writeln!(self.out, "[{name}]").unwrap();
    }

    pub fn text(&mut self, key: &str, value: impl std::fmt::Display) {
        writeln!(self.out, "{key} = {value}").unwrap();
    }

    pub fn value(&mut self, key: &str, x: &Rat) {
        if self.decimal {
            writeln!(self.out, "{key} = {x}  # ~ {}", to_decimal(x, DECIMAL_PLACES)).unwrap();
        } else {
            writeln!(self.out, "{key} = {x}").unwrap();
        }
    }

    pub fn check(&mut self, statement: impl std::fmt::Display) {
        writeln!(self.out, "check: {statement}").unwrap();
    }

    pub fn orbit(&mut self, key: &str, orbit: &Orbit) {
        self.text(key, join(&orbit.points));
    }

    pub fn header(&mut self, map_name: &str, orbit: &Orbit) {
        self.section("orbit");
        self.text("map", map_name);
        self.text("period", orbit.least_period);
        self.orbit("points", orbit);
        self.value("diameter", &orbit.diameter);
    }

    pub fn pair(&mut self, f: &PlMap, pair: &OrbitPair) {
        let fp = f.eval_unchecked(&pair.p);
        let fb = f.eval_unchecked(&pair.b);
        let fa = f.eval_unchecked(&pair.a);
        self.section("pair");
        self.value("p", &pair.p);
        self.value("b", &pair.b);
        self.value("a", &pair.a);
        self.check(format!("p = {} < b = {}", pair.p, pair.b));
        self.check(format!("f(p) = {fp} >= b = {}", pair.b));
        self.check(format!("f(b) = {fb} <= p = {}", pair.p));
        self.check(format!("f(a) = {fa} = b, a in [p, b)"));
    }

    pub fn lemma(&mut self, f: &PlMap, w: &Lemma1Witness) {
        let fy = f.eval_unchecked(&w.y);
        let fv = f.eval_unchecked(&w.v);
        let f2v = f.eval_unchecked(&fv);
        self.section("lemma");
        for (k, x) in [("a", &w.a), ("b", &w.b), ("z", &w.z), ("y", &w.y), ("v", &w.v), ("u", &w.u)] {
            self.value(k, x);
        }
        self.check(format!("f(z) = {} = z", w.z));
        self.check(format!("f(y) = {fy} != y and f^2(y) = {} = y", w.y));
        self.check(format!("f(v) = {fv} = b"));
        let lower = if f2v > w.y { &f2v } else { &w.y };
        let upper = if fy < fv { &fy } else { &fv };
        self.check(format!(
            "max{{f^2(v), y}} = {lower} < v = {} < z = {} < min{{f(y), f(v)}} = {upper}",
            w.v, w.z
        ));
        let image = f.interval_image(&w.y, &w.v).expect("y < v inside the domain");
        self.check(format!("min of f on [y, v] = {} > z", image.min));
        self.check("f^2(x) < x for every x in (y, v]");
    }

    pub fn cascade(&mut self, w: &Lemma1Witness, points: &[CascadePoint]) {
        self.section("cascade");
        let mut prev = w.v.clone();
        for p in points {
            self.value(&format!("p_{}", p.period), &p.point);
        }
        for p in points {
            self.check(format!("y = {} < p_{} = {} < {prev}, least period {}", w.y, p.period, p.point, p.period));
            prev = p.point.clone();
        }
    }

    pub fn turbulence(&mut self, f: &PlMap, c: &TurbulenceCertificate) {
        self.section("turbulence");
        for (k, x) in [
            ("z0", &c.z0),
            ("d", &c.d),
            ("s", &c.s),
            ("t", &c.t),
            ("w", &c.w),
            ("r", &c.r),
            ("i0_lo", &c.i0_lo),
            ("i0_hi", &c.i0_hi),
            ("i1_lo", &c.i1_lo),
            ("i1_hi", &c.i1_hi),
        ] {
            self.value(k, x);
        }
        self.check(format!("s = {} < d = {}", c.s, c.d));
        self.check(format!("I0 = [{}, {}] and I1 = [{}, {}] are disjoint", c.i0_lo, c.i0_hi, c.i1_lo, c.i1_hi));
        for (name, lo, hi) in [("I0", &c.i0_lo, &c.i0_hi), ("I1", &c.i1_lo, &c.i1_hi)] {
            let g = crate::laps::iterate_image(f, 2, lo, hi).expect("interval inside the domain");
            self.check(format!(
                "f^2({name}) = [{}, {}] contains [{}, {}]",
                g.min, g.max, c.i0_lo, c.i1_hi
            ));
        }
    }

    pub fn even(&mut self, orbits: &[EvenPeriodOrbit]) {
        self.section("even");
        for e in orbits {
            self.value(&format!("c_{}", e.n), &e.c);
            self.orbit(&format!("orbit_{}", 2 * e.n), &e.orbit);
        }
        for w in orbits.windows(2) {
            self.check(format!("c_{} = {} < c_{} = {}", w[1].n, w[1].c, w[0].n, w[0].c));
        }
        for e in orbits {
            self.check(format!("orbit_{} has least period {} under f", 2 * e.n, e.orbit.least_period));
        }
    }
}

/// The single-valued entries `section.key = value` of a report. Used to mark
/// witness points on plots.
pub fn parse_values(text: &str) -> BTreeMap<String, Rat> {
    let mut out = BTreeMap::new();
    let mut section = String::new();
    for line in text.lines() {
        let line = line.trim();
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = name.to_string();
            continue;
        }
        let Some((key, value)) = line.split_once(" = ") else {
            continue;
        };
        let value = value.split('#').next().unwrap_or("").trim();
        if let Ok(x) = parse_rat(value) {
            out.insert(format!("{section}.{}", key.trim()), x);
        }
    }
    out
}
