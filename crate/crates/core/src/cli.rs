//! Command-line front end.
//!
//! Exit codes: 0 success, 1 property violation, 2 input error,
//! 3 computation error, 4 precondition not met.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::counterexample::{doubling_tower, truncated_tent, VERIFY_HORIZON};
use crate::document::{Construction, MapDocument};
use crate::error::Error;
use crate::forcing::{verify_counterexample, verify_forcing_closure_with, PeriodSource};
use crate::orbits::{Enumerator, DEFAULT_HORIZON};
use crate::plot::{self, Mark};
use crate::rat::{parse_rat, to_decimal};
use crate::report::{self, ReportWriter};
use crate::witness::{even_period_orbits, theorem2_cascade, theorem3_turbulence, witness_from_orbit};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

/// Exact periodic-orbit analysis of piecewise-linear interval maps.
#[derive(Debug, Parser)]
#[command(name = "sharkovsky", version)]
pub struct Cli {
    /// Largest iterate order any command may enumerate.
    #[arg(long, global = true, env = "SHARKOVSKY_HORIZON", default_value_t = DEFAULT_HORIZON)]
    pub horizon_limit: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the orbits of least period N.
    Orbits {
        /// Map file (TOML).
        map: PathBuf,
        /// Least period.
        n: u32,
        /// Emit JSON instead of a table.
        #[arg(long)]
        json: bool,
        /// Add a rounded decimal column (not exact).
        #[arg(long)]
        decimal: bool,
    },
    /// Build the witness objects for the smallest period-M orbit (M odd, at least 3).
    Witness {
        map: PathBuf,
        m: u32,
        /// Also find points of periods M+2, ..., M+2K.
        #[arg(long, value_name = "K")]
        cascade: Option<u32>,
        /// Also build the pair of intervals covered twice by f².
        #[arg(long)]
        turbulence: bool,
        /// Also build orbits of periods 2, 4, ..., 2N.
        #[arg(long, value_name = "N")]
        even: Option<u32>,
        /// Add rounded decimal comments (not exact).
        #[arg(long)]
        decimal: bool,
    },
    /// Build a tent truncation and write it as a map file.
    Counterexample {
        kind: Kind,
        /// Period for truncated-tent, depth for tower.
        parameter: u32,
        /// Output map file; printed to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that the period set is closed under the forcing order.
    Verify {
        map: PathBuf,
        #[arg(long, default_value_t = VERIFY_HORIZON)]
        horizon: u32,
    },
    /// Emit graph samples and a cobweb path as CSV, optionally an SVG.
    Plot {
        map: PathBuf,
        /// Number of equal grid steps across the domain.
        #[arg(long, default_value_t = 32)]
        grid: u32,
        /// Start point of a cobweb path, as p/q.
        #[arg(long, value_name = "X0")]
        cobweb: Option<String>,
        /// Cobweb steps.
        #[arg(long, default_value_t = 10)]
        steps: u32,
        /// Also write an SVG picture here.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Witness report whose points are marked on the SVG.
        #[arg(long, value_name = "REPORT")]
        witness: Option<PathBuf>,
        /// Add rounded decimal columns (not exact).
        #[arg(long)]
        decimal: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    TruncatedTent,
    Tower,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        code
    }

    fn print(&mut self, text: &str) {
        let _ = self.out.write_all(text.as_bytes());
    }
}

fn computation_exit(e: &Error) -> i32 {
    match e {
        Error::HypothesisNotSatisfied(_) | Error::NoSuchOrbit { .. } => EXIT_PRECONDITION,
        _ => EXIT_COMPUTATION,
    }
}

fn load(path: &Path) -> Result<MapDocument, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    MapDocument::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn map_name(doc: &MapDocument, path: &Path) -> String {
    doc.name.clone().unwrap_or_else(|| path.display().to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let en = Enumerator::new(cli.horizon_limit);
    let mut io = Io { out, err };
    match cli.command {
        Command::Orbits { map, n, json, decimal } => orbits(&en, &mut io, &map, n, json, decimal),
        Command::Witness {
            map,
            m,
            cascade,
            turbulence,
            even,
            decimal,
        } => witness(&en, &mut io, &map, m, cascade, turbulence, even, decimal),
        Command::Counterexample { kind, parameter, out } => counterexample(&en, &mut io, kind, parameter, out.as_deref()),
        Command::Verify { map, horizon } => cmd_verify(&en, &map, horizon, io.out, io.err),
        Command::Plot {
            map,
            grid,
            cobweb,
            steps,
            svg,
            witness,
            decimal,
        } => plot_cmd(&mut io, &map, grid, cobweb.as_deref(), steps, svg.as_deref(), witness.as_deref(), decimal),
    }
}

fn orbits(en: &Enumerator, io: &mut Io, path: &Path, n: u32, as_json: bool, decimal: bool) -> i32 {
    let doc = match load(path) {
        Ok(d) => d,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let orbits = match en.orbits_of_period(&doc.map, n) {
        Ok(o) => o,
        Err(e) => return io.fail(computation_exit(&e), e),
    };
    if as_json {
        let rows: Vec<_> = orbits
            .iter()
            .map(|o| {
                json!({
                    "least_period": o.least_period,
                    "diameter": o.diameter.to_string(),
                    "points": o.points.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let value = json!({ "map": map_name(&doc, path), "n": n, "orbits": rows });
        io.print(&format!("{}\n", serde_json::to_string_pretty(&value).expect("json values serialize")));
        return EXIT_OK;
    }
    let mut text = String::from("index\tperiod\tdiameter\tpoints");
    if decimal {
        text.push_str("\tapprox (rounded, not exact)");
    }
    text.push('\n');
    for (i, o) in orbits.iter().enumerate() {
        let points: Vec<String> = o.points.iter().map(|x| x.to_string()).collect();
        text.push_str(&format!("{i}\t{}\t{}\t{}", o.least_period, o.diameter, points.join(" ")));
        if decimal {
            let approx: Vec<String> = o.points.iter().map(|x| to_decimal(x, 6)).collect();
            text.push_str(&format!("\t{}", approx.join(" ")));
        }
        text.push('\n');
    }
    io.print(&text);
    EXIT_OK
}

#[allow(clippy::too_many_arguments)]
fn witness(
    en: &Enumerator,
    io: &mut Io,
    path: &Path,
    m: u32,
    cascade: Option<u32>,
    turbulence: bool,
    even: Option<u32>,
    decimal: bool,
) -> i32 {
    if m < 3 || m.is_multiple_of(2) {
        return io.fail(
            EXIT_PRECONDITION,
            format!("period {m} is not an odd number at least 3; the witness constructions start from such an orbit"),
        );
    }
    let doc = match load(path) {
        Ok(d) => d,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    let f = &doc.map;
    let orbit = match en.minimal_diameter_orbit(f, m) {
        Ok(o) => o,
        Err(e) => return io.fail(computation_exit(&e), e),
    };
    let result = (|| -> crate::Result<String> {
        let (pair, w) = witness_from_orbit(f, &orbit)?;
        let mut r = ReportWriter::new(decimal);
        r.header(&map_name(&doc, path), &orbit);
        r.pair(f, &pair);
        r.lemma(f, &w);
        if let Some(k) = cascade {
            r.cascade(&w, &theorem2_cascade(en, f, &orbit, k)?);
        }
        if turbulence {
            r.turbulence(f, &theorem3_turbulence(f, &orbit)?);
        }
        if let Some(n) = even {
            r.even(&even_period_orbits(en, f, &orbit, n)?);
        }
        Ok(r.finish())
    })();
    match result {
        Ok(text) => {
            io.print(&text);
            EXIT_OK
        }
        Err(e) => io.fail(computation_exit(&e), e),
    }
}

fn counterexample(en: &Enumerator, io: &mut Io, kind: Kind, parameter: u32, out: Option<&Path>) -> i32 {
    let built = match kind {
        Kind::TruncatedTent => truncated_tent(en, parameter).map(|c| {
            let doc = MapDocument {
                name: Some(format!("truncated-tent-{parameter}")),
                provenance: Some(format!(
                    "tent map clamped to [{}, {}], the hull of its smallest period-{parameter} orbit",
                    c.orbit.min(),
                    c.orbit.max()
                )),
                construction: Some(Construction {
                    kind: "truncated-tent".into(),
                    parameter,
                    q0: c.orbit.min().clone(),
                    q1: c.orbit.max().clone(),
                    orbits: vec![c.orbit.points.clone()],
                    verified_periods: Vec::new(),
                }),
                map: c.map,
            };
            (doc, parameter)
        }),
        Kind::Tower => doubling_tower(en, parameter).map(|(map, trace)| {
            let n = 3 << parameter;
            let doc = MapDocument {
                name: Some(format!("tower-{parameter}")),
                provenance: Some(format!(
                    "tent map clamped to [{}, {}], the hull of the nested period-{n} orbit",
                    trace.q0, trace.q1
                )),
                construction: Some(Construction {
                    kind: "tower".into(),
                    parameter,
                    q0: trace.q0,
                    q1: trace.q1,
                    orbits: trace.orbits.into_iter().map(|o| o.points).collect(),
                    verified_periods: Vec::new(),
                }),
                map,
            };
            (doc, n)
        }),
    };
    let (mut doc, n) = match built {
        Ok(b) => b,
        Err(e) => return io.fail(EXIT_COMPUTATION, e),
    };
    let horizon = n.max(VERIFY_HORIZON).min(en.horizon());
    let report = verify_counterexample(en, &doc.map, n, horizon);
    if let Some(c) = doc.construction.as_mut() {
        c.verified_periods = report.periods_found.iter().copied().collect();
    }
    let text = doc.to_toml();
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                return io.fail(EXIT_INPUT, format!("{}: {e}", path.display()));
            }
        }
        None => io.print(&text),
    }
    let _ = writeln!(if out.is_some() { &mut *io.out } else { &mut *io.err }, "{report}");
    if let Some(reason) = &report.skipped {
        return io.fail(EXIT_COMPUTATION, reason);
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

/// Loads a map and checks forcing closure with the given period source.
/// Exit 0 on pass, 1 on violations, 3 when enumeration was skipped.
pub fn cmd_verify<S: PeriodSource>(
    source: &S,
    path: &Path,
    horizon: u32,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut io = Io { out, err };
    let doc = match load(path) {
        Ok(d) => d,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    if horizon == 0 {
        return io.fail(EXIT_INPUT, "horizon must be positive");
    }
    let report = verify_forcing_closure_with(source, &doc.map, horizon);
    io.print(&format!("{report}\n"));
    if let Some(reason) = &report.skipped {
        return io.fail(EXIT_COMPUTATION, reason);
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

const MARKED: [&str; 4] = ["lemma.", "cascade.", "turbulence.", "even."];
const UNMARKED: [&str; 6] = ["turbulence.s", "turbulence.i0_lo", "turbulence.i0_hi", "turbulence.i1_lo", "turbulence.i1_hi", "lemma.a"];

#[allow(clippy::too_many_arguments)]
fn plot_cmd(
    io: &mut Io,
    path: &Path,
    grid: u32,
    cobweb: Option<&str>,
    steps: u32,
    svg: Option<&Path>,
    witness: Option<&Path>,
    decimal: bool,
) -> i32 {
    let doc = match load(path) {
        Ok(d) => d,
        Err(e) => return io.fail(EXIT_INPUT, e),
    };
    if grid == 0 {
        return io.fail(EXIT_INPUT, "grid must be positive");
    }
    let path_points = match cobweb {
        None => None,
        Some(s) => {
            let x0 = match parse_rat(s) {
                Ok(x) => x,
                Err(e) => return io.fail(EXIT_INPUT, e),
            };
            match plot::cobweb_path(&doc.map, &x0, steps) {
                Ok(p) => Some(p),
                Err(e) => return io.fail(EXIT_INPUT, e),
            }
        }
    };
    let mut marks = Vec::new();
    if let Some(report_path) = witness {
        let text = match fs::read_to_string(report_path) {
            Ok(t) => t,
            Err(e) => return io.fail(EXIT_INPUT, format!("{}: {e}", report_path.display())),
        };
        for (key, x) in report::parse_values(&text) {
            if MARKED.iter().any(|p| key.starts_with(p)) && !UNMARKED.contains(&key.as_str()) {
                let label = key.split_once('.').map(|(_, k)| k).unwrap_or(&key).to_string();
                marks.push(Mark { label, x });
            }
        }
    }
    if let Some(svg_path) = svg {
        let picture = plot::svg(&doc.map, path_points.as_deref(), &marks);
        if let Err(e) = fs::write(svg_path, picture) {
            return io.fail(EXIT_INPUT, format!("{}: {e}", svg_path.display()));
        }
    }
    io.print(&plot::csv(&doc.map, grid, path_points.as_deref(), decimal));
    EXIT_OK
}
