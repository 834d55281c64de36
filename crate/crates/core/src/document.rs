//! On-disk map files.
//!
//! A map file is TOML. Every number is a string holding an integer or a
//! reduced fraction `p/q`:
//!
//! ```toml
//! name = "tent"
//! domain = ["0", "1"]
//! nodes = [
//!     ["0", "0"],
//!     ["1/2", "1"],
//!     ["1", "0"],
//! ]
//! ```
//!
//! An optional `[construction]` table records how a map was built.

use std::fmt;
use std::ops::Range;

use serde::Deserialize;
use toml::Spanned;

use crate::plmap::PlMap;
use crate::rat::{parse_rat, Rat};

/// A map-file problem, with the 1-based line it was found on when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for DocumentError {}

/// Where a map came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    /// `truncated-tent` or `tower`
    pub kind: String,
    pub parameter: u32,
    /// the orbit the tent map was clamped to
    pub q0: Rat,
    pub q1: Rat,
    /// orbits recorded during construction, each sorted ascending
    pub orbits: Vec<Vec<Rat>>,
    /// periods checked after construction
    pub verified_periods: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDocument {
    pub name: Option<String>,
    pub provenance: Option<String>,
    pub map: PlMap,
    pub construction: Option<Construction>,
}

impl MapDocument {
    pub fn new(map: PlMap) -> Self {
        MapDocument {
            name: None,
            provenance: None,
            map,
            construction: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let raw: RawDocument = toml::from_str(text).map_err(|e| DocumentError {
            line: e.span().map(|s| line_of(text, s.start)),
            message: e.message().trim().to_string(),
        })?;
        raw.into_document(text)
    }

    /// Deterministic TOML text, one node per line.
    pub fn to_toml(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("name = {}\n", quote(name)));
        }
        if let Some(provenance) = &self.provenance {
            out.push_str(&format!("provenance = {}\n", quote(provenance)));
        }
        out.push_str(&format!("domain = {}\n", list([self.map.lo(), self.map.hi()])));
        out.push_str("nodes = [\n");
        for (x, y) in self.map.nodes() {
            out.push_str(&format!("    {},\n", list([x, y])));
        }
        out.push_str("]\n");
        if let Some(c) = &self.construction {
            out.push_str("\n[construction]\n");
            out.push_str(&format!("kind = {}\n", quote(&c.kind)));
            out.push_str(&format!("parameter = {}\n", c.parameter));
            out.push_str(&format!("q0 = {}\n", quote(&c.q0.to_string())));
            out.push_str(&format!("q1 = {}\n", quote(&c.q1.to_string())));
            out.push_str("orbits = [\n");
            for orbit in &c.orbits {
                out.push_str(&format!("    {},\n", list(orbit)));
            }
            out.push_str("]\n");
            let periods: Vec<String> = c.verified_periods.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("verified_periods = [{}]\n", periods.join(", ")));
        }
        out
    }
}

fn quote(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

fn list<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> String {
    let items: Vec<String> = xs.into_iter().map(|x| quote(&x.to_string())).collect();
    format!("[{}]", items.join(", "))
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

type Number = Spanned<String>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: Option<String>,
    provenance: Option<String>,
    domain: Spanned<Vec<Number>>,
    nodes: Spanned<Vec<Spanned<Vec<Number>>>>,
    construction: Option<RawConstruction>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConstruction {
    kind: String,
    parameter: u32,
    q0: Number,
    q1: Number,
    #[serde(default)]
    orbits: Vec<Vec<Number>>,
    #[serde(default)]
    verified_periods: Vec<u32>,
}

struct Ctx<'a> {
    text: &'a str,
}

impl Ctx<'_> {
    fn err(&self, span: Range<usize>, message: impl Into<String>) -> DocumentError {
        DocumentError {
            line: Some(line_of(self.text, span.start)),
            message: message.into(),
        }
    }

    fn number(&self, n: &Number) -> Result<Rat, DocumentError> {
        parse_rat(n.get_ref()).map_err(|e| self.err(n.span(), e.to_string()))
    }

    fn pair(&self, v: &Spanned<Vec<Number>>, what: &str) -> Result<(Rat, Rat), DocumentError> {
        match v.get_ref().as_slice() {
            [a, b] => Ok((self.number(a)?, self.number(b)?)),
            other => Err(self.err(v.span(), format!("{what} must have 2 entries, found {}", other.len()))),
        }
    }
}

impl RawDocument {
    fn into_document(self, text: &str) -> Result<MapDocument, DocumentError> {
        let cx = Ctx { text };
        let (lo, hi) = cx.pair(&self.domain, "domain")?;
        if lo >= hi {
            return Err(cx.err(self.domain.span(), format!("empty domain [{lo}, {hi}]")));
        }

        let raw_nodes = self.nodes.get_ref();
        if raw_nodes.len() < 2 {
            return Err(cx.err(self.nodes.span(), "a map needs at least 2 nodes"));
        }
        let mut nodes: Vec<(Rat, Rat)> = Vec::with_capacity(raw_nodes.len());
        for raw in raw_nodes {
            let (x, y) = cx.pair(raw, "node")?;
            if let Some((px, _)) = nodes.last() {
                if &x <= px {
                    return Err(cx.err(raw.span(), format!("node x = {x} does not exceed previous x = {px}")));
                }
            }
            if y < lo || y > hi {
                return Err(cx.err(raw.span(), format!("node value {y} lies outside the domain [{lo}, {hi}]")));
            }
            nodes.push((x, y));
        }
        let first = &raw_nodes[0];
        let last = &raw_nodes[raw_nodes.len() - 1];
        if nodes[0].0 != lo {
            return Err(cx.err(first.span(), format!("first node x = {} is not the domain start {lo}", nodes[0].0)));
        }
        if nodes[nodes.len() - 1].0 != hi {
            return Err(cx.err(last.span(), format!("last node x = {} is not the domain end {hi}", nodes[nodes.len() - 1].0)));
        }
        let map = PlMap::new(nodes).map_err(|e| cx.err(self.nodes.span(), e.to_string()))?;

        let construction = match self.construction {
            None => None,
            Some(c) => Some(Construction {
                q0: cx.number(&c.q0)?,
                q1: cx.number(&c.q1)?,
                orbits: c
                    .orbits
                    .iter()
                    .map(|o| o.iter().map(|x| cx.number(x)).collect())
                    .collect::<Result<_, _>>()?,
                kind: c.kind,
                parameter: c.parameter,
                verified_periods: c.verified_periods,
            }),
        };
        Ok(MapDocument {
            name: self.name,
            provenance: self.provenance,
            map,
            construction,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::tent;
    use crate::rat::{int, rat};

    const TENT: &str = r#"name = "tent"
domain = ["0", "1"]
nodes = [
    ["0", "0"],
    ["1/2", "1"],
    ["1", "0"],
]
"#;

    #[test]
    fn parses_tent() {
        let doc = MapDocument::parse(TENT).unwrap();
        assert_eq!(doc.name.as_deref(), Some("tent"));
        assert_eq!(doc.map, tent());
    }

    #[test]
    fn round_trip() {
        let mut doc = MapDocument::new(tent().clamp(&rat(2, 7), &rat(6, 7)).unwrap());
        doc.provenance = Some("clamped".into());
        doc.construction = Some(Construction {
            kind: "truncated-tent".into(),
            parameter: 3,
            q0: rat(2, 7),
            q1: rat(6, 7),
            orbits: vec![vec![rat(2, 7), rat(4, 7), rat(6, 7)]],
            verified_periods: (1..=12).collect(),
        });
        let text = doc.to_toml();
        assert_eq!(MapDocument::parse(&text).unwrap(), doc);
    }

    fn error_of(text: &str) -> DocumentError {
        MapDocument::parse(text).unwrap_err()
    }

    #[test]
    fn unreduced_number_reports_line() {
        let e = error_of(&TENT.replace("\"1/2\"", "\"2/4\""));
        assert_eq!(e.line, Some(5));
        assert!(e.to_string().starts_with("line 5:"), "{e}");
    }

    #[test]
    fn non_monotone_nodes_report_line() {
        let text = "domain = [\"0\", \"1\"]\nnodes = [\n  [\"0\", \"0\"],\n  [\"1/2\", \"1\"],\n  [\"1/3\", \"1\"],\n  [\"1\", \"0\"],\n]\n";
        let e = error_of(text);
        assert_eq!(e.line, Some(5), "{e}");
        assert!(e.message.contains("does not exceed"));
    }

    #[test]
    fn other_rejections() {
        assert!(error_of(&TENT.replace("[\"1/2\", \"1\"]", "[\"1/2\", \"2\"]")).message.contains("outside"));
        assert!(error_of(&TENT.replace("[\"1\", \"0\"]", "[\"1\", \"0\", \"1\"]")).message.contains("2 entries"));
        assert!(error_of("domain = [\"0\", \"1\"]\nnodes = [[\"0\", \"0\"]]\n").message.contains("at least 2"));
        assert!(error_of(&TENT.replace("domain = [\"0\", \"1\"]", "domain = [\"0\", \"2\"]")).message.contains("domain end"));
        assert!(error_of("this is not toml").line.is_some());
        assert!(error_of(&format!("{TENT}colour = \"red\"\n")).message.contains("unknown field"));
    }

    #[test]
    fn collinear_nodes_normalize() {
        let text = "domain = [\"0\", \"1\"]\nnodes = [[\"0\", \"0\"], [\"1/2\", \"1/2\"], [\"1\", \"1\"]]\n";
        let doc = MapDocument::parse(text).unwrap();
        assert_eq!(doc.map, PlMap::identity(int(0), int(1)).unwrap());
    }
}
