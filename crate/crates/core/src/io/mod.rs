//! Text formats: edge lists, graph6, DOT, and the JSON report documents.

mod dot;
mod edge_list;
mod graph6;
pub mod report;

pub use dot::export_dot;
pub use edge_list::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};
