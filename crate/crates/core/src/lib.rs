//! Exact Steinerberger curvature of finite simple graphs.
//!
//! Distances, curvature solutions and every derived quantity are computed in
//! exact rational arithmetic. Decimal renderings exist only for display.

pub mod analysis;
pub mod closed_forms;
pub mod curvature;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod rational;
pub mod search;

pub use analysis::{analyze, AnalysisReport, Bound};
pub use closed_forms::{predict_bridge_join, predict_leaf_join, BridgePrediction, Condition, LeafPrediction};
pub use curvature::{steinerberger_curvature, total_curvature, CurvatureSolution, Regime};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, Vertex};
pub use io::report::{AnalysisDocument, ReportDocument};
pub use linalg::{characteristic_polynomial, IntPolynomial};
pub use rational::Rational;
pub use search::{LeafSearchResult, Predicate, ScanResult};
