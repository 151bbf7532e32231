//! Closed-form curvature of block graphs and trees, and predictions for
//! graphs glued by a single bridge edge.
//!
//! Predictions are independent oracles for the solver; they are never used
//! as a shortcut by [`steinerberger_curvature`].

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::curvature::{steinerberger_curvature, Regime};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::{self, int, Rational};

/// Hypotheses of the bridge and leaf composition formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// `2 + k1/n ≠ 0` (leaf) or `Z ≠ 4` (bridge).
    C1,
    /// Distance matrices of the parts are invertible.
    C2,
    /// Curvature at the bridge endpoint(s) is nonzero.
    C3,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::C1 => "C1",
            Condition::C2 => "C2",
            Condition::C3 => "C3",
        };
        f.write_str(s)
    }
}

/// `λ_G = Σ (P_i − 1)/P_i` and `β_x` for every vertex of a block graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGraphTerms {
    pub lambda: Rational,
    pub beta: Vec<Rational>,
}

pub fn block_graph_terms(g: &Graph) -> Result<BlockGraphTerms> {
    if g.n() == 1 {
        return Err(Error::SingleVertex);
    }
    let blocks = g.block_decomposition()?;
    if !blocks.is_block_graph {
        return Err(Error::NotABlockGraph);
    }
    let sizes = blocks.block_sizes();
    let lambda = rational::sum(
        &sizes
            .iter()
            .map(|&p| rational::frac(p as i64 - 1, p as i64))
            .collect::<Vec<_>>(),
    );
    let beta = blocks
        .blocks_containing
        .iter()
        .map(|containing| {
            let s = containing.len() as i64;
            let inv: Rational = containing
                .iter()
                .map(|&b| rational::frac(1, sizes[b] as i64))
                .fold(Rational::zero(), |a, x| a + x);
            inv - int(s - 1)
        })
        .collect();
    Ok(BlockGraphTerms { lambda, beta })
}

/// `K(x) = |V| β_x / λ_G`.
pub fn block_graph_curvature(g: &Graph) -> Result<Vec<Rational>> {
    let terms = block_graph_terms(g)?;
    let scale = int(g.n() as i64) / &terms.lambda;
    Ok(terms.beta.iter().map(|b| b * &scale).collect())
}

/// `K(x) = |V|/(|V|−1) · (2 − deg x)`.
pub fn tree_curvature(g: &Graph) -> Result<Vec<Rational>> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.n() as i64;
    if n == 1 {
        return Err(Error::SingleVertex);
    }
    let factor = rational::frac(n, n - 1);
    Ok((0..g.n())
        .map(|x| &factor * int(2 - g.degree(x) as i64))
        .collect())
}

/// Curvature of `attach_leaf(g1, u)` predicted from `g1` alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafPrediction {
    pub n: usize,
    pub u: Vertex,
    pub k1: Rational,
    pub ku: Rational,
    pub alpha: Rational,
    pub gamma: Rational,
    /// Curvature of the new leaf.
    pub k_leaf: Rational,
    /// Indexed like `attach_leaf(g1, u)`: the leaf is the last vertex.
    pub predicted: Vec<Rational>,
}

impl LeafPrediction {
    fn new(n: usize, u: Vertex, k1_curv: &[Rational]) -> Self {
        let nn = int(n as i64);
        let k1 = rational::sum(k1_curv);
        let ku = k1_curv[u].clone();
        let two = int(2);
        let alpha = int(2 * (n as i64 + 1)) / (&two * &nn + &k1);
        let gamma = (Rational::one() - &k1 / (&two * &ku)) * &alpha;
        let k_leaf = int(n as i64 + 1) * &k1 / (&two * &nn + &k1);
        let mut predicted: Vec<Rational> = k1_curv.iter().map(|k| k * &alpha).collect();
        predicted[u] = &gamma * &ku;
        predicted.push(k_leaf.clone());

        assert_eq!(alpha, int(2 * (n as i64 + 1)) / (int(2 * n as i64) + &k1));
        assert_eq!(k_leaf, int(n as i64 + 1) * &k1 / (int(2 * n as i64) + &k1));
        LeafPrediction { n, u, k1, ku, alpha, gamma, k_leaf, predicted }
    }
}

pub fn predict_leaf_join(g1: &Graph, u: Vertex) -> Result<LeafPrediction> {
    g1.check_vertex(u)?;
    let sol = steinerberger_curvature(g1)?;
    let n = g1.n();
    let k1 = &sol.total;
    let ku = &sol.curvature[u];
    let mut violated = Vec::new();
    if (int(2) + k1 / int(n as i64)).is_zero() {
        violated.push(Condition::C1);
    }
    if sol.regime != Regime::Unique {
        violated.push(Condition::C2);
    }
    if ku.is_zero() {
        violated.push(Condition::C3);
    }
    if !violated.is_empty() {
        return Err(Error::ConditionsViolated(violated));
    }
    Ok(LeafPrediction::new(n, u, &sol.curvature))
}

/// Curvature of `g1.bridge_join(u, g2, v)` predicted from the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgePrediction {
    pub n1: usize,
    pub n2: usize,
    pub k1: Rational,
    pub k2: Rational,
    pub ku: Rational,
    pub kv: Rational,
    pub z: Rational,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
    /// Indexed like the bridged graph: `V1` first, then `V2` shifted by `n1`.
    pub predicted: Vec<Rational>,
}

impl BridgePrediction {
    fn new(u: Vertex, v: Vertex, curv1: &[Rational], curv2: &[Rational]) -> Self {
        let (n1, n2) = (curv1.len(), curv2.len());
        let (r1, r2) = (int(n1 as i64), int(n2 as i64));
        let k1 = rational::sum(curv1);
        let k2 = rational::sum(curv2);
        let ku = curv1[u].clone();
        let kv = curv2[v].clone();
        let two = int(2);
        let z = (&two + &k1 / &r1) * (&two + &k2 / &r2);
        let denom = &r1 * &r2 * (&z - int(4));
        let num = int(2 * (n1 + n2) as i64);
        let alpha = &num * &k2 / &denom;
        let beta = &num * &k1 / &denom;
        let gamma = (Rational::one() - &k1 / (&two * &ku)) * &alpha;
        let delta = (Rational::one() - &k2 / (&two * &kv)) * &beta;

        let mut predicted: Vec<Rational> = curv1.iter().map(|k| k * &alpha).collect();
        predicted[u] = &gamma * &ku;
        predicted.extend(curv2.iter().map(|k| k * &beta));
        predicted[n1 + v] = &delta * &kv;

        assert_eq!(z, (int(2) + &k1 / &r1) * (int(2) + &k2 / &r2));
        assert_eq!(gamma, (Rational::one() - &k1 / (int(2) * &ku)) * &alpha);
        assert_eq!(delta, (Rational::one() - &k2 / (int(2) * &kv)) * &beta);
        BridgePrediction { n1, n2, k1, k2, ku, kv, z, alpha, beta, gamma, delta, predicted }
    }

    /// `(α/2)·k1 + (β/2)·k2`, the predicted total curvature.
    pub fn predicted_total(&self) -> Rational {
        (&self.alpha * &self.k1 + &self.beta * &self.k2) / int(2)
    }
}

pub fn predict_bridge_join(g1: &Graph, u: Vertex, g2: &Graph, v: Vertex) -> Result<BridgePrediction> {
    g1.check_vertex(u)?;
    g2.check_vertex(v)?;
    let s1 = steinerberger_curvature(g1)?;
    let s2 = steinerberger_curvature(g2)?;
    let (r1, r2) = (int(g1.n() as i64), int(g2.n() as i64));
    let z = (int(2) + &s1.total / r1) * (int(2) + &s2.total / r2);
    let mut violated = Vec::new();
    if z == int(4) {
        violated.push(Condition::C1);
    }
    if s1.regime != Regime::Unique || s2.regime != Regime::Unique {
        violated.push(Condition::C2);
    }
    if s1.curvature[u].is_zero() || s2.curvature[v].is_zero() {
        violated.push(Condition::C3);
    }
    if !violated.is_empty() {
        return Err(Error::ConditionsViolated(violated));
    }
    Ok(BridgePrediction::new(u, v, &s1.curvature, &s2.curvature))
}

/// Solver totals on the two sides `(V1 ∋ u, V2 ∋ v)` of the bridge `{u, v}`.
pub fn bridge_side_totals(g: &Graph, u: Vertex, v: Vertex) -> Result<Option<(Rational, Rational)>> {
    let Some((side_u, side_v)) = g.bridge_sides(u, v) else {
        return Ok(None);
    };
    let sol = steinerberger_curvature(g)?;
    let total = |s: &[Vertex]| rational::sum(s.iter().map(|&x| &sol.curvature[x]));
    Ok(Some((total(&side_u), total(&side_v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rational::frac;

    #[test]
    fn block_example_terms() {
        let g = families::block_graph_example();
        let t = block_graph_terms(&g).unwrap();
        assert_eq!(t.lambda, frac(163, 60));
        assert_eq!(t.beta[families::BLOCK_EXAMPLE_JOINT], frac(-7, 15));
        let k = block_graph_curvature(&g).unwrap();
        assert_eq!(k[families::BLOCK_EXAMPLE_JOINT], frac(-308, 163));
    }

    #[test]
    fn complete_and_star() {
        assert_eq!(block_graph_curvature(&families::complete(3).unwrap()).unwrap(), vec![frac(3, 2); 3]);
        let star = families::star(3).unwrap();
        let k = block_graph_curvature(&star).unwrap();
        assert_eq!(k, vec![frac(-4, 3), frac(4, 3), frac(4, 3), frac(4, 3)]);
        assert_eq!(k, tree_curvature(&star).unwrap());
        assert_eq!(block_graph_curvature(&families::cycle(4).unwrap()), Err(Error::NotABlockGraph));
    }

    #[test]
    fn trees() {
        assert_eq!(tree_curvature(&families::path(2).unwrap()).unwrap(), vec![int(2), int(2)]);
        assert_eq!(
            tree_curvature(&families::path(4).unwrap()).unwrap(),
            vec![frac(4, 3), int(0), int(0), frac(4, 3)]
        );
        assert_eq!(tree_curvature(&families::cycle(4).unwrap()), Err(Error::NotATree));
        let t = Graph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(rational::sum(&tree_curvature(&t).unwrap()), frac(12, 5));
    }

    #[test]
    fn leaf_on_k2_and_k3() {
        let p = predict_leaf_join(&families::complete(2).unwrap(), 0).unwrap();
        assert_eq!((p.alpha.clone(), p.gamma.clone(), p.k_leaf.clone()), (frac(3, 4), int(0), frac(3, 2)));
        assert_eq!(p.predicted, vec![int(0), frac(3, 2), frac(3, 2)]);

        let k3 = families::complete(3).unwrap();
        let p = predict_leaf_join(&k3, 0).unwrap();
        assert_eq!(p.alpha, frac(16, 21));
        assert_eq!(p.k_leaf, frac(12, 7));
        let direct = steinerberger_curvature(&k3.attach_leaf(0).unwrap()).unwrap();
        assert_eq!(p.predicted, direct.curvature);
    }

    #[test]
    fn bridge_of_two_edges_is_p4() {
        let k2 = families::complete(2).unwrap();
        let p = predict_bridge_join(&k2, 1, &k2, 0).unwrap();
        assert_eq!(p.z, int(16));
        assert_eq!((p.alpha.clone(), p.beta.clone()), (frac(2, 3), frac(2, 3)));
        assert_eq!((p.gamma.clone(), p.delta.clone()), (int(0), int(0)));
        assert_eq!(p.predicted, vec![frac(4, 3), int(0), int(0), frac(4, 3)]);
        assert_eq!(p.predicted_total(), &p.alpha * &p.k1);
    }

    #[test]
    fn bridged_triangles() {
        let k3 = families::complete(3).unwrap();
        let p = predict_bridge_join(&k3, 2, &k3, 0).unwrap();
        let g = k3.bridge_join(2, &k3, 0).unwrap();
        assert_eq!(p.predicted, steinerberger_curvature(&g).unwrap().curvature);
        let (a, b) = bridge_side_totals(&g, 2, 3).unwrap().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn condition_reporting() {
        // P3's centre has curvature zero; C6 is singular.
        let p3 = families::path(3).unwrap();
        assert_eq!(predict_leaf_join(&p3, 1), Err(Error::ConditionsViolated(vec![Condition::C3])));
        let c6 = families::cycle(6).unwrap();
        assert!(matches!(
            predict_bridge_join(&c6, 0, &p3, 1),
            Err(Error::ConditionsViolated(v)) if v == vec![Condition::C2, Condition::C3]
        ));
    }

    #[test]
    fn c1_boundary() {
        // A(4): n = 6, k1 = 0 is not the boundary; the boundary is k1 = -2n.
        let a4 = families::book_of_triangles(4).unwrap();
        assert!(predict_leaf_join(&a4, 2).is_ok());
    }
}
