//! Graph arguments: `family:NAME(args)`, `g6:LINE`, or a file path.
//!
//! Files ending in `.g6` hold graph6 (first nonblank line); anything else is
//! an edge list.

use std::fs;

use curvlab::io::{parse_edge_list, parse_graph6};
use curvlab::{families, Error, Graph};

pub fn load_graph(spec: &str) -> Result<Graph, Error> {
    if let Some(family) = spec.strip_prefix("family:") {
        return families::parse_family(family);
    }
    if let Some(line) = spec.strip_prefix("g6:") {
        return parse_graph6(line);
    }
    let text = fs::read_to_string(spec)
        .map_err(|e| Error::Parse { line: 0, message: format!("cannot read {spec}: {e}") })?;
    if spec.ends_with(".g6") {
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        parse_graph6(line.trim())
    } else {
        parse_edge_list(&text)
    }
}
