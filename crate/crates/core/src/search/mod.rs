//! Exhaustive enumeration and searches over small graphs.

mod canon;
mod enumerate;
mod leaves;
mod scan;

pub use canon::{are_isomorphic, canonical_code, canonical_graph, graph_from_code, CANON_MAX_N};
pub use enumerate::{connected_graph_codes, connected_graphs, ENUMERATION_MAX_N};
pub use leaves::{
    leaf_increment_probe, min_leaves_negative, min_leaves_negative_with, LeafProbe, LeafSearchOptions,
    LeafSearchResult, LEAF_BUDGET_CAP,
};
pub use scan::{
    scan_graphs, scan_graphs_with_cap, Predicate, ScanMatch, ScanResult, Source, Witness,
    DEFAULT_SCAN_CAP,
};
