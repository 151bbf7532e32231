//! JSON documents. Exact values are `"p/q"` strings; decimals are display-only.

use serde::{Deserialize, Serialize};

use crate::analysis::{AnalysisReport, Bound};
use crate::closed_forms::{BridgePrediction, LeafPrediction};
use crate::curvature::Regime;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{parse_exact, to_decimal, to_exact, Rational};

pub const DECIMAL_PLACES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub exact: String,
    pub decimal: String,
}

impl ExactValue {
    pub fn new(r: &Rational) -> Self {
        ExactValue { exact: to_exact(r), decimal: to_decimal(r, DECIMAL_PLACES) }
    }

    pub fn value(&self) -> Option<Rational> {
        parse_exact(&self.exact)
    }
}

impl From<&Rational> for ExactValue {
    fn from(r: &Rational) -> Self {
        ExactValue::new(r)
    }
}

fn exact_vec(v: &[Rational]) -> Vec<ExactValue> {
    v.iter().map(ExactValue::new).collect()
}

/// Request body `{ "n": .., "edges": [[u, v], ..] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument { n: g.n(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub regime: Regime,
    pub curvature: Vec<ExactValue>,
    pub total: ExactValue,
    pub min: ExactValue,
    pub diameter: usize,
    pub bm_sharp: bool,
    pub self_centered: bool,
    pub antipodal: bool,
    pub solution_space_dim: usize,
    pub average_distance: ExactValue,
}

impl ReportDocument {
    pub fn new(g: &Graph, r: &AnalysisReport) -> Self {
        ReportDocument {
            n: r.n,
            edges: GraphDocument::from_graph(g).edges,
            regime: r.regime(),
            curvature: exact_vec(&r.solution.curvature),
            total: (&r.total).into(),
            min: (&r.min_curvature).into(),
            diameter: r.diameter,
            bm_sharp: r.is_bm_sharp,
            self_centered: r.self_centered,
            antipodal: r.antipodal,
            solution_space_dim: r.solution.solution_space_dim,
            average_distance: (&r.average_distance).into(),
        }
    }

    /// Exact curvature values; `None` if any string is malformed.
    pub fn curvature_values(&self) -> Option<Vec<Rational>> {
        self.curvature.iter().map(ExactValue::value).collect()
    }
}

/// `{"exact", "decimal"}` for a finite bound, the string `"unbounded"` when
/// `K₀ = 0`, and `null` when no bound applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundDocument {
    Finite(ExactValue),
    Marker(String),
}

pub const UNBOUNDED: &str = "unbounded";

fn bound_doc(b: &Bound) -> Option<BoundDocument> {
    match b {
        Bound::Finite(r) => Some(BoundDocument::Finite(r.into())),
        Bound::Unbounded => Some(BoundDocument::Marker(UNBOUNDED.into())),
        Bound::NotApplicable => None,
    }
}

/// Full analysis: the report keys plus the bounds and classification flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    #[serde(flatten)]
    pub report: ReportDocument,
    pub witness_canonical: bool,
    pub constant_curvature: bool,
    pub bm_upper_bound: Option<BoundDocument>,
    pub diameter_chain_holds: Option<bool>,
    pub avdist_bound: Option<BoundDocument>,
}

impl AnalysisDocument {
    pub fn new(g: &Graph, r: &AnalysisReport) -> Self {
        AnalysisDocument {
            report: ReportDocument::new(g, r),
            witness_canonical: r.solution.canonical,
            constant_curvature: r.constant_curvature,
            bm_upper_bound: bound_doc(&r.bm_upper_bound),
            diameter_chain_holds: r.diameter_chain_holds,
            avdist_bound: bound_doc(&r.avdist_bound),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafPredictionDocument {
    pub n: usize,
    pub u: usize,
    pub k1: ExactValue,
    pub ku: ExactValue,
    pub alpha: ExactValue,
    pub gamma: ExactValue,
    pub k_leaf: ExactValue,
    pub predicted: Vec<ExactValue>,
}

impl From<&LeafPrediction> for LeafPredictionDocument {
    fn from(p: &LeafPrediction) -> Self {
        LeafPredictionDocument {
            n: p.n,
            u: p.u,
            k1: (&p.k1).into(),
            ku: (&p.ku).into(),
            alpha: (&p.alpha).into(),
            gamma: (&p.gamma).into(),
            k_leaf: (&p.k_leaf).into(),
            predicted: exact_vec(&p.predicted),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgePredictionDocument {
    pub n1: usize,
    pub n2: usize,
    pub k1: ExactValue,
    pub k2: ExactValue,
    pub ku: ExactValue,
    pub kv: ExactValue,
    pub z: ExactValue,
    pub alpha: ExactValue,
    pub beta: ExactValue,
    pub gamma: ExactValue,
    pub delta: ExactValue,
    pub predicted: Vec<ExactValue>,
    pub predicted_total: ExactValue,
}

impl From<&BridgePrediction> for BridgePredictionDocument {
    fn from(p: &BridgePrediction) -> Self {
        BridgePredictionDocument {
            n1: p.n1,
            n2: p.n2,
            k1: (&p.k1).into(),
            k2: (&p.k2).into(),
            ku: (&p.ku).into(),
            kv: (&p.kv).into(),
            z: (&p.z).into(),
            alpha: (&p.alpha).into(),
            beta: (&p.beta).into(),
            gamma: (&p.gamma).into(),
            delta: (&p.delta).into(),
            predicted: exact_vec(&p.predicted),
            predicted_total: (&p.predicted_total()).into(),
        }
    }
}

/// Machine-readable error body shared by the CLI and the service.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDocument {
    pub error: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<String>,
}

impl From<&Error> for ErrorDocument {
    fn from(e: &Error) -> Self {
        let conditions = match e {
            Error::ConditionsViolated(cs) => cs.iter().map(|c| c.to_string()).collect(),
            _ => Vec::new(),
        };
        ErrorDocument { error: e.name().to_string(), message: e.to_string(), conditions }
    }
}
