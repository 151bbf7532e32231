//! Each command returns its stdout text; errors become JSON on stderr in `main`.

use std::fmt::Write;

use curvlab::io::report::{
    AnalysisDocument, BridgePredictionDocument, ExactValue, LeafPredictionDocument, ReportDocument,
};
use curvlab::io::export_dot;
use curvlab::rational::to_exact;
use curvlab::search::{
    leaf_increment_probe, min_leaves_negative_with, scan_graphs_with_cap, LeafSearchOptions, Predicate, Source,
};
use curvlab::{analyze, characteristic_polynomial, predict_bridge_join, predict_leaf_join, steinerberger_curvature};
use curvlab::{Error, Graph};
use serde::Serialize;
use serde_json::json;

pub type CommandResult = Result<String, Error>;

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents serialize") + "\n"
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CurvatureFormat {
    Json,
    Table,
    Dot,
}

pub fn curvature(g: &Graph, format: CurvatureFormat) -> CommandResult {
    let report = analyze(g)?;
    Ok(match format {
        CurvatureFormat::Json => to_json(&ReportDocument::new(g, &report)),
        CurvatureFormat::Dot => export_dot(g, &report.solution),
        CurvatureFormat::Table => {
            let mut out = String::from("vertex\texact\tdecimal\n");
            for (v, k) in report.solution.curvature.iter().enumerate() {
                let e = ExactValue::new(k);
                writeln!(out, "{v}\t{}\t{}", e.exact, e.decimal).unwrap();
            }
            let total = ExactValue::new(&report.total);
            writeln!(
                out,
                "regime {}, solution space dim {}, total {} ({}), diameter {}",
                report.regime().as_str(),
                report.solution.solution_space_dim,
                total.exact,
                total.decimal,
                report.diameter
            )
            .unwrap();
            out
        }
    })
}

pub fn analyze_command(g: &Graph) -> CommandResult {
    Ok(to_json(&AnalysisDocument::new(g, &analyze(g)?)))
}

pub fn predict_leaf(g: &Graph, u: usize) -> CommandResult {
    let p = predict_leaf_join(g, u)?;
    let direct = steinerberger_curvature(&g.attach_leaf(u)?)?;
    Ok(to_json(&json!({
        "prediction": LeafPredictionDocument::from(&p),
        "matches_solver": p.predicted == direct.curvature,
    })))
}

pub fn predict_bridge(g1: &Graph, u: usize, g2: &Graph, v: usize) -> CommandResult {
    let p = predict_bridge_join(g1, u, g2, v)?;
    let direct = steinerberger_curvature(&g1.bridge_join(u, g2, v)?)?;
    Ok(to_json(&json!({
        "prediction": BridgePredictionDocument::from(&p),
        "matches_solver": p.predicted == direct.curvature,
    })))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ScanFormat {
    Json,
    Csv,
}

pub struct ScanArgs<'a> {
    pub n_min: usize,
    pub n_max: usize,
    pub predicate: Predicate,
    pub graph6: Option<&'a str>,
    pub cap: usize,
    pub format: ScanFormat,
}

pub fn scan(args: &ScanArgs<'_>) -> CommandResult {
    let source = match args.graph6 {
        Some(text) => Source::Graph6Stream(text),
        None => Source::Enumerated,
    };
    let result = scan_graphs_with_cap(args.n_min, args.n_max, args.predicate, source, args.cap)?;
    Ok(match args.format {
        ScanFormat::Json => to_json(&result),
        ScanFormat::Csv => result.to_csv(),
    })
}

pub fn min_leaves(g: &Graph, budget: usize, options: LeafSearchOptions) -> CommandResult {
    let r = min_leaves_negative_with(g, budget, options)?;
    Ok(to_json(&r))
}

pub fn charpoly(g: &Graph) -> CommandResult {
    let p = characteristic_polynomial(&g.distance_matrix()?.to_int_matrix());
    Ok(format!("{p}\n"))
}

pub fn probe(g: &Graph, sequence: &[usize]) -> CommandResult {
    let p = leaf_increment_probe(g, sequence)?;
    let exact = |rows: &[Vec<curvlab::Rational>]| -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(to_exact).collect()).collect()
    };
    Ok(to_json(&json!({
        "sequence": sequence,
        "steps": exact(&p.steps),
        "regimes": p.regimes,
        "deltas": exact(&p.deltas),
        "constant_deltas": p.has_constant_deltas(),
        "warning": p.warning,
    })))
}
