//! Canonical labelling by individualization-refinement.
//!
//! The code of a discrete labelling is the upper triangle of the relabelled
//! adjacency matrix read column by column; the canonical code is the largest
//! code over all leaves of the search tree. Twin vertices in the target cell
//! are interchanged by an automorphism, so only one per class is explored.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `n(n-1)/2 <= 128` bits must fit in a `u128`.
pub const CANON_MAX_N: usize = 16;

type Masks = [u16; CANON_MAX_N];

fn masks(g: &Graph) -> Result<Masks> {
    if g.n() > CANON_MAX_N {
        return Err(Error::CapExceeded { what: "vertices for canonical form", value: g.n(), cap: CANON_MAX_N });
    }
    let mut adj = [0u16; CANON_MAX_N];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(adj)
}

pub(crate) fn canonical_masks(n: usize, adj: &Masks) -> (u128, [u8; CANON_MAX_N]) {
    let mut colors = [0u8; CANON_MAX_N];
    let cells = refine(n, adj, &mut colors, 1);
    let mut best = (0u128, [0u8; CANON_MAX_N], false);
    search(n, adj, colors, cells, &mut best);
    (best.0, best.1)
}

/// Splits cells by neighbour counts per colour until stable. Colours are
/// ranks of `(old colour, count vector)`, so the result is invariant.
fn refine(n: usize, adj: &Masks, colors: &mut [u8; CANON_MAX_N], mut cells: usize) -> usize {
    loop {
        let mut sigs: Vec<(u8, [u8; CANON_MAX_N], usize)> = (0..n)
            .map(|v| {
                let mut counts = [0u8; CANON_MAX_N];
                let mut nb = adj[v];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    counts[colors[w] as usize] += 1;
                    nb &= nb - 1;
                }
                (colors[v], counts, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = 0u8;
        for i in 0..n {
            if i > 0 && (sigs[i].0, sigs[i].1) != (sigs[i - 1].0, sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        let new_cells = next as usize + 1;
        if new_cells == cells {
            return cells;
        }
        cells = new_cells;
    }
}

fn search(
    n: usize,
    adj: &Masks,
    colors: [u8; CANON_MAX_N],
    cells: usize,
    best: &mut (u128, [u8; CANON_MAX_N], bool),
) {
    if cells == n {
        let code = code_of(n, adj, &colors);
        if !best.2 || code > best.0 {
            *best = (code, colors, true);
        }
        return;
    }
    // Target: the first cell with more than one vertex.
    let mut size = [0u8; CANON_MAX_N];
    for &c in &colors[..n] {
        size[c as usize] += 1;
    }
    let target = (0..cells).find(|&c| size[c] > 1).expect("partition not discrete") as u8;
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == target) {
        if tried.iter().any(|&w| are_twins(adj, v, w)) {
            continue;
        }
        tried.push(v);
        let mut next = colors;
        for (w, c) in next[..n].iter_mut().enumerate() {
            if *c > target || (*c == target && w != v) {
                *c += 1;
            }
        }
        let cells = refine(n, adj, &mut next, cells + 1);
        search(n, adj, next, cells, best);
    }
}

fn are_twins(adj: &Masks, v: usize, w: usize) -> bool {
    let strip = !((1u16 << v) | (1u16 << w));
    adj[v] & strip == adj[w] & strip
}

fn code_of(n: usize, adj: &Masks, labels: &[u8; CANON_MAX_N]) -> u128 {
    let mut inv = [0usize; CANON_MAX_N];
    for v in 0..n {
        inv[labels[v] as usize] = v;
    }
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | (adj[inv[i]] >> inv[j] & 1) as u128;
        }
    }
    code
}

/// Canonical code; equal codes on equal `n` mean isomorphic graphs.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    Ok(canonical_masks(g.n(), &masks(g)?).0)
}

/// Relabelled copy of `g` whose labelling depends only on its isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (code, _) = canonical_masks(g.n(), &masks(g)?);
    Ok(graph_from_code(g.n(), code))
}

pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).expect("code describes a simple graph")
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}
