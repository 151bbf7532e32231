//! Random instance generators and independent oracles shared by the
//! integration tests. Nothing here calls into the solver.

#![allow(dead_code)]

use curvlab::rational::Rational;
use curvlab::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random spanning tree plus independent extra edges, randomly relabelled.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for v in 0..n {
        for w in v + 1..n {
            if !edges.contains(&(v, w)) && rng.random_bool(p) {
                edges.push((v, w));
            }
        }
    }
    relabel(rng, Graph::new(n, edges).unwrap())
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    random_connected(rng, n, 0.0)
}

/// Cliques of size 2..=5 glued at single vertices until `max_n` would be exceeded.
pub fn random_block_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let target = rng.random_range(2..=max_n);
    let first = rng.random_range(2..=5.min(target));
    let mut n = first;
    let mut edges: Vec<(usize, usize)> = clique_edges(&(0..first).collect::<Vec<_>>());
    while n < target {
        let size = rng.random_range(2..=5.min(target - n + 1));
        let anchor = rng.random_range(0..n);
        let mut block = vec![anchor];
        block.extend(n..n + size - 1);
        edges.extend(clique_edges(&block));
        n += size - 1;
    }
    relabel(rng, Graph::new(n, edges).unwrap())
}

fn clique_edges(vs: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

pub fn relabel<R: Rng>(rng: &mut R, g: Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// All-pairs distances by Floyd-Warshall; `None` for unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Fraction-free Gaussian elimination (Bareiss).
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `det(x·I - a)` for an integer matrix.
pub fn char_poly_at(a: &[Vec<i64>], x: i64) -> BigInt {
    let n = a.len();
    let m = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(if i == j { x } else { 0 } - a[i][j])).collect())
        .collect();
    if n == 0 {
        return BigInt::one();
    }
    bareiss_det(m)
}

/// graph6 encoder written directly from the format description: length byte
/// `n + 63`, then the upper triangle column by column in groups of six bits.
pub fn reference_graph6(g: &Graph) -> String {
    assert!(g.n() < 63);
    let mut bits: Vec<bool> = Vec::new();
    for j in 1..g.n() {
        for i in 0..j {
            bits.push(g.edges().contains(&(i, j)));
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    let mut out = String::new();
    out.push(char::from(g.n() as u8 + 63));
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc * 2 + b as u8);
        out.push(char::from(v + 63));
    }
    out
}

/// Dense `D·K` with the distances from Floyd-Warshall.
pub fn distance_times(g: &Graph, k: &[Rational]) -> Vec<Rational> {
    let d = floyd_warshall(g);
    (0..g.n())
        .map(|i| {
            (0..g.n())
                .map(|j| Rational::from_integer(BigInt::from(d[i][j].unwrap())) * &k[j])
                .sum()
        })
        .collect()
}
