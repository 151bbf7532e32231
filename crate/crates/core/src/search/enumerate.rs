//! Connected graphs up to isomorphism, grown one vertex at a time.
//!
//! Every connected graph on `n + 1` vertices has a non-cut vertex, so it
//! arises from a connected graph on `n` vertices plus a vertex joined to a
//! nonempty subset. Children are deduplicated by canonical code.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_masks, graph_from_code, CANON_MAX_N};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// 11.7 million graphs at 10 vertices; beyond that memory becomes the limit.
pub const ENUMERATION_MAX_N: usize = 10;

fn unpack(n: usize, code: u128) -> [u16; CANON_MAX_N] {
    let bits = n * (n - 1) / 2;
    let mut adj = [0u16; CANON_MAX_N];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    adj
}

fn children(n: usize, code: u128) -> HashSet<u128> {
    let base = unpack(n, code);
    let mut out = HashSet::new();
    for subset in 1u16..(1 << n) {
        let mut adj = base;
        adj[n] = subset;
        for (v, row) in adj[..n].iter_mut().enumerate() {
            if subset >> v & 1 == 1 {
                *row |= 1 << n;
            }
        }
        out.insert(canonical_masks(n + 1, &adj).0);
    }
    out
}

/// Sorted canonical codes of all connected graphs on `n` vertices.
pub fn connected_graph_codes(n: usize) -> Result<Vec<u128>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > ENUMERATION_MAX_N {
        return Err(Error::CapExceeded { what: "enumeration order", value: n, cap: ENUMERATION_MAX_N });
    }
    let mut level = vec![0u128];
    for m in 1..n {
        let merged = level
            .par_iter()
            .fold(HashSet::new, |mut acc, &code| {
                acc.extend(children(m, code));
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                if a.len() < b.len() {
                    return b.into_iter().chain(a).collect();
                }
                a.extend(b);
                a
            });
        level = merged.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level)
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graph_codes(n)?.into_iter().map(|c| graph_from_code(n, c)).collect())
}
