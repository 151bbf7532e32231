//! Immutable simple undirected graphs and the metric primitives every
//! curvature computation consumes.
//!
//! Vertices are dense indices `0..n`. Operations that "modify" a graph
//! (leaf attachment, bridging, products) return new values.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub type Vertex = usize;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    distances: OnceLock<Option<DistanceMatrix>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push((u, v));
            adj[u].push(v);
            adj[v].push(u);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            distances: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs(&self, src: Vertex) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// All-pairs shortest-path distances, computed once and cached.
    pub fn distance_matrix(&self) -> Result<&DistanceMatrix> {
        self.distances
            .get_or_init(|| DistanceMatrix::from_graph(self))
            .as_ref()
            .ok_or(Error::DisconnectedGraph)
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(self.distance_matrix()?.diameter())
    }

    pub fn eccentricity(&self, x: Vertex) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self.distance_matrix()?.eccentricity(x))
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// For every edge `{x, y}`, as many vertices are strictly closer to `x`
    /// as are strictly closer to `y`.
    pub fn is_distance_balanced(&self) -> Result<bool> {
        let d = self.distance_matrix()?;
        Ok(self.edges.iter().all(|&(x, y)| {
            let (mut cx, mut cy) = (0usize, 0usize);
            for z in 0..self.n {
                match d.get(x, z).cmp(&d.get(y, z)) {
                    std::cmp::Ordering::Less => cx += 1,
                    std::cmp::Ordering::Greater => cy += 1,
                    std::cmp::Ordering::Equal => {}
                }
            }
            cx == cy
        }))
    }

    pub fn find_bridges(&self) -> Result<Vec<(Vertex, Vertex)>> {
        let blocks = self.block_decomposition()?;
        let mut bridges: Vec<_> = blocks
            .blocks
            .iter()
            .filter(|b| b.len() == 2)
            .map(|b| (b[0], b[1]))
            .collect();
        bridges.sort_unstable();
        Ok(bridges)
    }

    /// Biconnected blocks via an iterative Tarjan DFS with an edge stack.
    pub fn block_decomposition(&self) -> Result<BlockDecomposition> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let n = self.n;
        let mut blocks: Vec<Vec<Vertex>> = Vec::new();
        if n == 1 {
            blocks.push(vec![0]);
        } else {
            const UNSEEN: usize = usize::MAX;
            let mut disc = vec![UNSEEN; n];
            let mut low = vec![0usize; n];
            let mut timer = 0;
            let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
            // (vertex, parent, next neighbour index)
            let mut frames: Vec<(Vertex, Option<Vertex>, usize)> = vec![(0, None, 0)];
            disc[0] = timer;
            low[0] = timer;
            timer += 1;
            while let Some(frame) = frames.last_mut() {
                let (v, parent, next) = *frame;
                if next < self.adj[v].len() {
                    frame.2 += 1;
                    let w = self.adj[v][next];
                    if disc[w] == UNSEEN {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        edge_stack.push((v, w));
                        frames.push((w, Some(v), 0));
                    } else if Some(w) != parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                    continue;
                }
                frames.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
        blocks.sort();

        let mut blocks_containing = vec![Vec::new(); n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                blocks_containing[v].push(i);
            }
        }
        let cut_vertices = (0..n).filter(|&v| blocks_containing[v].len() > 1).collect();
        let is_block_graph = blocks.iter().all(|b| {
            b.iter()
                .enumerate()
                .all(|(i, &u)| b[i + 1..].iter().all(|&v| self.has_edge(u, v)))
        });
        Ok(BlockDecomposition {
            blocks,
            cut_vertices,
            is_block_graph,
            blocks_containing,
        })
    }

    /// Vertex sets of the two sides of the bridge `{u, v}`: `(V1 ∋ u, V2 ∋ v)`.
    /// `None` if `{u, v}` is not an edge or not a bridge.
    pub fn bridge_sides(&self, u: Vertex, v: Vertex) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        if !self.has_edge(u, v) {
            return None;
        }
        let cut = self.without_edge(u, v);
        let dist = cut.bfs(u);
        if dist[v].is_some() {
            return None;
        }
        let (side_u, side_v) = (0..self.n).partition(|&x| dist[x].is_some());
        Some((side_u, side_v))
    }

    pub fn is_self_centered(&self) -> Result<bool> {
        let d = self.distance_matrix()?;
        let diam = d.diameter();
        Ok((0..self.n).all(|x| d.eccentricity(x) == diam))
    }

    /// Antipodal partner map: for every `x` the unique `x̂` with every vertex
    /// on a geodesic between them. `None` if some vertex has no such partner.
    pub fn antipodal_partners(&self) -> Result<Option<Vec<Vertex>>> {
        let d = self.distance_matrix()?;
        let n = self.n;
        let mut partners = Vec::with_capacity(n);
        for x in 0..n {
            let ecc = d.eccentricity(x) as u32;
            let mut found = (0..n).filter(|&y| {
                d.get(x, y) == ecc && (0..n).all(|z| d.get(x, z) + d.get(z, y) == ecc)
            });
            let Some(partner) = found.next() else {
                return Ok(None);
            };
            assert!(found.next().is_none(), "antipodal partner of {x} not unique");
            partners.push(partner);
        }
        Ok(Some(partners))
    }

    pub fn is_antipodal(&self) -> Result<bool> {
        Ok(self.antipodal_partners()?.is_some())
    }

    /// New graph with vertex `n` joined only to `v`.
    pub fn attach_leaf(&self, v: Vertex) -> Result<Graph> {
        self.attach_leaves(&[v])
    }

    /// Attaches one new leaf per entry of `at`, in order; leaf `i` gets index `n + i`.
    pub fn attach_leaves(&self, at: &[Vertex]) -> Result<Graph> {
        for &v in at {
            self.check_vertex(v)?;
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(at.iter().enumerate().map(|(i, &v)| (v, self.n + i)));
        Graph::new(self.n + at.len(), edges)
    }

    /// Disjoint union with `other` (shifted by `self.n()`) plus the bridge
    /// `u ~ v + self.n()`.
    pub fn bridge_join(&self, u: Vertex, other: &Graph, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)))
            .chain(std::iter::once((u, v + shift)));
        Graph::new(self.n + other.n, edges)
    }

    /// Cartesian product; vertex `(a, b)` is numbered `a * other.n() + b`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let idx = |a: usize, b: usize| a * m + b;
        let mut edges = Vec::new();
        for a in 0..self.n {
            for &(b1, b2) in &other.edges {
                edges.push((idx(a, b1), idx(a, b2)));
            }
        }
        for &(a1, a2) in &self.edges {
            for b in 0..m {
                edges.push((idx(a1, b), idx(a2, b)));
            }
        }
        Graph::new(self.n * m, edges).expect("product of simple graphs is simple")
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let key = if u < v { (u, v) } else { (v, u) };
        Graph::new(self.n, self.edges.iter().copied().filter(|&e| e != key))
            .expect("subgraph of a simple graph is simple")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation preserves simplicity")
    }
}

/// Shortest-path distances of a connected graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    fn from_graph(g: &Graph) -> Option<Self> {
        let n = g.n;
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            for d in g.bfs(s) {
                entries.push(d?);
            }
        }
        Some(DistanceMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&d| d as u64).sum())
            .collect()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&d| d as u64).sum()
    }

    pub fn eccentricity(&self, x: usize) -> usize {
        self.row(x).iter().copied().max().unwrap_or(0) as usize
    }

    pub fn diameter(&self) -> usize {
        self.entries.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j) as i64)
    }
}

/// Maximal 2-connected subgraphs. Single bridge edges count as blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex sets, sorted lexicographically.
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    /// Every block induces a complete subgraph.
    pub is_block_graph: bool,
    /// Indices into `blocks` for each vertex.
    pub blocks_containing: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}
