//! Fixed inputs shared by the benchmarks.

use curvlab::{families, Graph};

/// Named graphs covering the unique, maxi-min and pseudoinverse regimes.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("block_example", families::block_graph_example()),
        ("handa", families::handa_graph()),
        ("cycle_12", families::cycle(12).unwrap()),
        ("hypercube_4", families::hypercube(4).unwrap()),
        ("book_8", families::book_of_triangles(8).unwrap()),
        // Inconsistent system: needs the pseudoinverse.
        ("g6_F?~~w", curvlab::io::parse_graph6("F?~~w").unwrap()),
    ]
}
