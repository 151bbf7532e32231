use std::fmt::Write;

use num_traits::Signed;

use crate::curvature::CurvatureSolution;
use crate::graph::Graph;
use crate::rational::to_decimal;

pub const POSITIVE_COLOR: &str = "#2b7bba";
pub const ZERO_COLOR: &str = "#9a9a9a";
pub const NEGATIVE_COLOR: &str = "#d7301f";

/// DOT rendering with each vertex labelled by its curvature (4 decimals)
/// and coloured by sign.
pub fn export_dot(g: &Graph, sol: &CurvatureSolution) -> String {
    assert_eq!(g.n(), sol.n(), "solution computed for a different graph");
    let mut out = String::from("graph G {\n  node [style=filled, fontcolor=white];\n");
    for (v, k) in sol.curvature.iter().enumerate() {
        let color = if k.is_positive() {
            POSITIVE_COLOR
        } else if k.is_negative() {
            NEGATIVE_COLOR
        } else {
            ZERO_COLOR
        };
        writeln!(out, "  {v} [label=\"{}\", fillcolor=\"{color}\"];", to_decimal(k, 4)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::steinerberger_curvature;
    use crate::families;

    #[test]
    fn triangle_labels() {
        let g = families::complete(3).unwrap();
        let dot = export_dot(&g, &steinerberger_curvature(&g).unwrap());
        assert_eq!(dot.matches("label=\"1.5000\"").count(), 3);
        assert!(dot.contains("0 -- 1;"));
    }

    #[test]
    fn path_labels_and_colors() {
        let g = families::path(3).unwrap();
        let dot = export_dot(&g, &steinerberger_curvature(&g).unwrap());
        assert!(dot.contains("0 [label=\"1.5000\""));
        assert!(dot.contains(&format!("1 [label=\"0.0000\", fillcolor=\"{ZERO_COLOR}\"]")));
    }

    #[test]
    fn negative_vertices_share_color() {
        let g = families::book_of_triangles(4).unwrap();
        let sol = steinerberger_curvature(&g).unwrap();
        let dot = export_dot(&g, &sol);
        let negatives = sol.curvature.iter().filter(|k| k.is_negative()).count();
        assert!(negatives >= 2);
        assert_eq!(dot.matches(NEGATIVE_COLOR).count(), negatives);
    }
}
