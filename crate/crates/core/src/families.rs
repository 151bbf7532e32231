//! Generators for named graphs.
//!
//! Vertex numbering is fixed per family:
//! - `path(n)`: `0 - 1 - … - (n-1)`
//! - `cycle(n)`: path plus `{n-1, 0}`
//! - `star(k)`: centre `0`, leaves `1..=k`
//! - `hypercube(d)`: vertex = bitmask, neighbours differ in one bit
//! - `johnson(n, k)`: `k`-subsets of `0..n` in lexicographic order
//! - `cocktail_party(m)`: `2i` and `2i + 1` are the non-adjacent pairs
//! - `book_of_triangles(n)`: spine `0 ~ 1`, pages `2..n+2` joined to both

use std::sync::OnceLock;

use serde::Serialize;

use crate::curvature::{steinerberger_curvature, Regime};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_edge_list;
use crate::rational::frac;

fn param_error(msg: String) -> Error {
    Error::Family(msg)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(param_error("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param_error("cycle needs n >= 3".into()));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(param_error("complete needs n >= 1".into()));
    }
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{1,k}`
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(param_error("star needs k >= 1".into()));
    }
    Graph::new(k + 1, (1..=k).map(|i| (0, i)))
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 16 {
        return Err(param_error("hypercube needs 1 <= d <= 16".into()));
    }
    let n = 1usize << d;
    Graph::new(
        n,
        (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))).filter(|&(v, w)| v < w)),
    )
}

pub fn johnson(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k >= n || n > 20 {
        return Err(param_error("johnson needs 1 <= k < n <= 20".into()));
    }
    let subsets: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    // lexicographic order of sorted element lists
    let mut subsets = subsets;
    subsets.sort_by_key(|&s| (0..n).filter(|&i| s >> i & 1 == 1).collect::<Vec<_>>());
    let mut edges = Vec::new();
    for (i, &a) in subsets.iter().enumerate() {
        for (j, &b) in subsets.iter().enumerate().skip(i + 1) {
            if (a & b).count_ones() as usize == k - 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(subsets.len(), edges)
}

/// `K_{2m}` minus the perfect matching `{2i, 2i+1}`.
pub fn cocktail_party(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(param_error("cocktail_party needs m >= 2".into()));
    }
    let n = 2 * m;
    Graph::new(
        n,
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| i / 2 != j / 2),
    )
}

/// `A(n)`: `n` triangles glued along the common edge `{0, 1}`.
pub fn book_of_triangles(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(param_error("book_of_triangles needs n >= 1".into()));
    }
    let pages = 2..n + 2;
    Graph::new(
        n + 2,
        std::iter::once((0, 1)).chain(pages.flat_map(|p| [(0, p), (1, p)])),
    )
}

/// Index of the vertex shared by the `K_5` and `K_3` blocks of
/// [`block_graph_example`].
pub const BLOCK_EXAMPLE_JOINT: usize = 8;

/// Block graph on 11 vertices with blocks `K_4 = {0,1,2,3}`, `K_2 = {3,4}`,
/// `K_5 = {4,..,8}` and `K_3 = {8,9,10}`.
pub fn block_graph_example() -> Graph {
    let cliques: [&[usize]; 4] = [&[0, 1, 2, 3], &[3, 4], &[4, 5, 6, 7, 8], &[8, 9, 10]];
    let edges = cliques.iter().flat_map(|c| {
        c.iter()
            .enumerate()
            .flat_map(move |(i, &u)| c[i + 1..].iter().map(move |&v| (u, v)))
    });
    Graph::new(11, edges).expect("static data")
}

const HANDA_DATA: &str = include_str!("../data/handa.edges");

/// Pairs at distance five in the bundled labeling.
pub const HANDA_ANTIPODES: [(usize, usize); 10] = [
    (0, 10),
    (1, 9),
    (2, 8),
    (3, 7),
    (4, 6),
    (5, 13),
    (11, 14),
    (12, 15),
    (17, 20),
    (18, 22),
];

/// Vertices with no vertex at distance five.
pub const HANDA_DEFICIENT: [usize; 4] = [16, 19, 21, 23];

/// The 24-vertex Handa graph from the bundled data file, validated once.
pub fn handa_graph() -> Graph {
    static HANDA: OnceLock<Graph> = OnceLock::new();
    HANDA
        .get_or_init(|| load_handa(HANDA_DATA).expect("bundled Handa data is valid"))
        .clone()
}

/// Parses an edge list and checks it against every known property of the
/// Handa graph.
pub fn load_handa(text: &str) -> Result<Graph> {
    let g = parse_edge_list(text)?;
    validate_handa(&g)?;
    Ok(g)
}

pub fn validate_handa(g: &Graph) -> Result<()> {
    let fail = |m: &str| Err(Error::DataFileInvalid(m.to_string()));
    if g.n() != 24 {
        return fail("expected 24 vertices");
    }
    if !g.is_connected() {
        return fail("not connected");
    }
    if !g.is_bipartite() {
        return fail("not bipartite");
    }
    if (0..24).all(|v| g.degree(v) == g.degree(0)) {
        return fail("graph is regular");
    }
    let d = g.distance_matrix()?;
    if d.diameter() != 5 {
        return fail("diameter is not 5");
    }
    if !g.is_distance_balanced()? {
        return fail("not distance-balanced");
    }
    let mut far: Vec<(usize, usize)> = (0..24)
        .flat_map(|i| (i + 1..24).map(move |j| (i, j)))
        .filter(|&(i, j)| d.get(i, j) == 5)
        .collect();
    far.sort_unstable();
    let mut expected = HANDA_ANTIPODES.to_vec();
    expected.sort_unstable();
    if far != expected {
        return fail("distance-5 pairs differ from the expected set");
    }
    let deficient: Vec<usize> = (0..24).filter(|&v| d.eccentricity(v) < 5).collect();
    if deficient != HANDA_DEFICIENT {
        return fail("eccentricity-deficient vertices differ from v16, v19, v21, v23");
    }
    let sol = steinerberger_curvature(g)?;
    if sol.regime != Regime::MaxiMin
        || sol.solution_space_dim != 18
        || sol.maximin_value != frac(2, 5)
        || !sol.is_constant()
    {
        return fail("curvature is not the constant 2/5 on an 18-dimensional solution space");
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub description: &'static str,
}

pub fn catalog() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo { name: "path", params: &["n"], description: "path on n vertices" },
        FamilyInfo { name: "cycle", params: &["n"], description: "cycle on n >= 3 vertices" },
        FamilyInfo { name: "complete", params: &["n"], description: "complete graph K_n" },
        FamilyInfo { name: "star", params: &["k"], description: "star K_{1,k}, centre 0" },
        FamilyInfo { name: "hypercube", params: &["d"], description: "hypercube Q_d" },
        FamilyInfo { name: "johnson", params: &["n", "k"], description: "Johnson graph J(n,k)" },
        FamilyInfo {
            name: "cocktail_party",
            params: &["m"],
            description: "K_{2m} minus a perfect matching",
        },
        FamilyInfo {
            name: "A",
            params: &["n"],
            description: "book of n triangles sharing the edge {0,1}",
        },
        FamilyInfo {
            name: "handa",
            params: &[],
            description: "Handa's 24-vertex bipartite distance-balanced graph",
        },
        FamilyInfo {
            name: "block_example",
            params: &[],
            description: "11-vertex block graph with blocks K4, K2, K5, K3",
        },
    ]
}

/// Builds a family member from a name and integer arguments.
pub fn build(name: &str, args: &[usize]) -> Result<Graph> {
    let want = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(param_error(format!("{name} takes {k} argument(s), got {}", args.len())))
        }
    };
    match name {
        "path" => want(1).and_then(|_| path(args[0])),
        "cycle" => want(1).and_then(|_| cycle(args[0])),
        "complete" | "K" => want(1).and_then(|_| complete(args[0])),
        "star" => want(1).and_then(|_| star(args[0])),
        "hypercube" | "Q" => want(1).and_then(|_| hypercube(args[0])),
        "johnson" | "J" => want(2).and_then(|_| johnson(args[0], args[1])),
        "cocktail_party" | "cp" | "CP" => want(1).and_then(|_| cocktail_party(args[0])),
        "A" | "book" | "book_of_triangles" => want(1).and_then(|_| book_of_triangles(args[0])),
        "handa" => want(0).map(|_| handa_graph()),
        "block_example" => want(0).map(|_| block_graph_example()),
        other => Err(param_error(format!("unknown family {other:?}"))),
    }
}

/// Parses `name`, `name(a)` or `name(a, b)`.
pub fn parse_family(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let (name, args) = match spec.split_once('(') {
        None => (spec, Vec::new()),
        Some((name, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| param_error(format!("missing ')' in {spec:?}")))?;
            let args = inner
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| param_error(format!("bad argument {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            (name.trim(), args)
        }
    };
    build(name, &args)
}
