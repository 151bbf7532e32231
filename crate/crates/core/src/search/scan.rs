//! Predicate scans over every connected graph in an order range.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{connected_graph_codes, ENUMERATION_MAX_N};
use super::canon::graph_from_code;
use crate::analysis::{analyze, AnalysisReport};
use crate::curvature::Regime;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{emit_graph6, parse_graph6};
use crate::linalg::{self, SolutionKind};
use crate::rational::{self, to_exact};

pub const DEFAULT_SCAN_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    ZeroTotal,
    NegativeTotal,
    BmSharp,
    /// `antipodal XOR (self-centered AND sharp)`.
    AntipodalMismatch,
    #[serde(rename = "singular-D")]
    SingularD,
    InconsistentSystem,
}

impl Predicate {
    pub const ALL: [Predicate; 6] = [
        Predicate::ZeroTotal,
        Predicate::NegativeTotal,
        Predicate::BmSharp,
        Predicate::AntipodalMismatch,
        Predicate::SingularD,
        Predicate::InconsistentSystem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::ZeroTotal => "zero-total",
            Predicate::NegativeTotal => "negative-total",
            Predicate::BmSharp => "bm-sharp",
            Predicate::AntipodalMismatch => "antipodal-mismatch",
            Predicate::SingularD => "singular-D",
            Predicate::InconsistentSystem => "inconsistent-system",
        }
    }

    fn holds(self, r: &AnalysisReport) -> bool {
        match self {
            Predicate::ZeroTotal => r.total.is_zero(),
            Predicate::NegativeTotal => r.total.is_negative(),
            Predicate::BmSharp => r.is_bm_sharp,
            Predicate::AntipodalMismatch => r.antipodal != (r.self_centered && r.is_bm_sharp),
            Predicate::SingularD => r.solution.solution_space_dim > 0,
            Predicate::InconsistentSystem => r.regime() == Regime::Pseudoinverse,
        }
    }

    /// Rank-only predicates skip the curvature computation on non-matches.
    fn cheap_reject(self, g: &Graph) -> Result<bool> {
        let want_singular = match self {
            Predicate::SingularD => false,
            Predicate::InconsistentSystem => true,
            _ => return Ok(false),
        };
        let d = g.distance_matrix()?.to_int_matrix();
        let rhs = vec![rational::int(g.n() as i64); g.n()];
        let kind = linalg::solve(&d, &rhs).kind;
        Ok(match want_singular {
            false => kind == SolutionKind::Unique,
            true => kind != SolutionKind::Inconsistent,
        })
    }

    pub fn evaluate(self, g: &Graph) -> Result<Option<Witness>> {
        if self.cheap_reject(g)? {
            return Ok(None);
        }
        let r = analyze(g)?;
        Ok(self.holds(&r).then(|| Witness::new(&r)))
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

/// Invariants of a matching graph, exact values as `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub regime: Regime,
    pub solution_space_dim: usize,
    pub total: String,
    pub min: String,
    pub diameter: usize,
    pub bm_sharp: bool,
    pub self_centered: bool,
    pub antipodal: bool,
}

impl Witness {
    fn new(r: &AnalysisReport) -> Self {
        Witness {
            regime: r.regime(),
            solution_space_dim: r.solution.solution_space_dim,
            total: to_exact(&r.total),
            min: to_exact(&r.min_curvature),
            diameter: r.diameter,
            bm_sharp: r.is_bm_sharp,
            self_centered: r.self_centered,
            antipodal: r.antipodal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanMatch {
    pub graph6: String,
    pub n: usize,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub predicate: Predicate,
    pub n_range: [usize; 2],
    pub graphs_scanned: usize,
    /// Stream entries that are disconnected, have one vertex, or lie outside `n_range`.
    pub skipped: usize,
    pub matches: Vec<ScanMatch>,
}

pub enum Source<'a> {
    Enumerated,
    /// One graph6 line per graph; blank lines are ignored.
    Graph6Stream(&'a str),
}

pub fn scan_graphs(n_min: usize, n_max: usize, predicate: Predicate, source: Source<'_>) -> Result<ScanResult> {
    scan_graphs_with_cap(n_min, n_max, predicate, source, DEFAULT_SCAN_CAP)
}

pub fn scan_graphs_with_cap(
    n_min: usize,
    n_max: usize,
    predicate: Predicate,
    source: Source<'_>,
    cap: usize,
) -> Result<ScanResult> {
    if n_max > cap {
        return Err(Error::CapExceeded { what: "scan order", value: n_max, cap });
    }
    let n_min = n_min.max(1);
    let (graphs, skipped) = match source {
        Source::Enumerated => {
            if n_max > ENUMERATION_MAX_N {
                return Err(Error::CapExceeded { what: "enumeration order", value: n_max, cap: ENUMERATION_MAX_N });
            }
            let mut graphs = Vec::new();
            for n in n_min.max(2)..=n_max {
                graphs.extend(connected_graph_codes(n)?.into_iter().map(|c| graph_from_code(n, c)));
            }
            (graphs, 0)
        }
        Source::Graph6Stream(text) => read_stream(text, n_min, n_max)?,
    };
    let evaluated: Result<Vec<Option<ScanMatch>>> = graphs
        .par_iter()
        .map(|g| {
            Ok(predicate.evaluate(g)?.map(|witness| ScanMatch { graph6: emit_graph6(g), n: g.n(), witness }))
        })
        .collect();
    Ok(ScanResult {
        predicate,
        n_range: [n_min, n_max],
        graphs_scanned: graphs.len(),
        skipped,
        matches: evaluated?.into_iter().flatten().collect(),
    })
}

fn read_stream(text: &str, n_min: usize, n_max: usize) -> Result<(Vec<Graph>, usize)> {
    let mut graphs = Vec::new();
    let mut skipped = 0;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| match e {
            Error::Graph6(m) => Error::Graph6(format!("line {}: {m}", i + 1)),
            other => other,
        })?;
        if g.n() < n_min.max(2) || g.n() > n_max || !g.is_connected() {
            skipped += 1;
        } else {
            graphs.push(g);
        }
    }
    Ok((graphs, skipped))
}

impl ScanResult {
    /// Matches per order, indexed from `n_range[0]`.
    pub fn counts_by_n(&self) -> Vec<(usize, usize)> {
        (self.n_range[0]..=self.n_range[1])
            .map(|n| (n, self.matches.iter().filter(|m| m.n == n).count()))
            .collect()
    }

    /// One line: predicate, graphs scanned, and match counts per order.
    pub fn summary(&self) -> String {
        let counts: Vec<String> = self.counts_by_n().iter().map(|(n, c)| format!("n={n}:{c}")).collect();
        format!("{} over {} graphs [{}]", self.predicate, self.graphs_scanned, counts.join(" "))
    }

    /// Reloads every match from its graph6 string and re-evaluates the predicate.
    pub fn reverify(&self) -> Result<bool> {
        for m in &self.matches {
            let g = parse_graph6(&m.graph6)?;
            if self.predicate.evaluate(&g)?.as_ref() != Some(&m.witness) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "graph6", "n", "regime", "solution_space_dim", "total", "min", "diameter", "bm_sharp",
            "self_centered", "antipodal",
        ])
        .expect("in-memory write");
        for m in &self.matches {
            let x = &m.witness;
            w.write_record([
                m.graph6.clone(),
                m.n.to_string(),
                x.regime.as_str().to_string(),
                x.solution_space_dim.to_string(),
                x.total.clone(),
                x.min.clone(),
                x.diameter.to_string(),
                x.bm_sharp.to_string(),
                x.self_centered.to_string(),
                x.antipodal.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}
