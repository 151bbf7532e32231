//! Leaf-attachment experiments: increment probes and the minimum number of
//! leaves that makes every vertex negatively curved.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::curvature::{steinerberger_curvature, CurvatureSolution, Regime};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

pub const LEAF_BUDGET_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafProbe {
    /// Curvature of the original vertices, before and after each attachment.
    pub steps: Vec<Vec<Rational>>,
    pub regimes: Vec<Regime>,
    /// `steps[i + 1] - steps[i]`.
    pub deltas: Vec<Vec<Rational>>,
    pub warning: Option<String>,
}

impl LeafProbe {
    /// Whether every step changes each original vertex by the same amount.
    pub fn has_constant_deltas(&self) -> bool {
        self.deltas.windows(2).all(|w| w[0] == w[1])
    }
}

/// Attaches leaves one at a time; `sequence` may name leaves added earlier.
pub fn leaf_increment_probe(g: &Graph, sequence: &[Vertex]) -> Result<LeafProbe> {
    let n = g.n();
    let base = steinerberger_curvature(g)?;
    let warning = (!base.total.is_zero()).then(|| {
        format!("base graph has total curvature {} rather than 0", crate::rational::to_exact(&base.total))
    });
    let mut steps = vec![base.curvature[..n].to_vec()];
    let mut regimes = vec![base.regime];
    let mut current = g.clone();
    for &v in sequence {
        current = current.attach_leaf(v)?;
        let sol = steinerberger_curvature(&current)?;
        steps.push(sol.curvature[..n].to_vec());
        regimes.push(sol.regime);
    }
    let deltas = steps
        .windows(2)
        .map(|w| w[1].iter().zip(&w[0]).map(|(a, b)| a - b).collect())
        .collect();
    Ok(LeafProbe { steps, regimes, deltas, warning })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafSearchResult {
    pub base_n: usize,
    pub base_edges: Vec<(Vertex, Vertex)>,
    pub minimum_leaves: usize,
    /// `(vertex, leaf count)` for every vertex that receives leaves.
    pub attachment: Vec<(Vertex, usize)>,
    pub regime: Regime,
    /// Curvature of the whole witness graph; leaves follow the base vertices.
    #[serde(serialize_with = "serialize_exact")]
    pub achieved_curvatures: Vec<Rational>,
    pub options: LeafSearchOptions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeafSearchOptions {
    /// Leaves must be negatively curved too, not only the base vertices.
    pub strict: bool,
    /// Every base vertex receives at least one leaf.
    pub every_vertex: bool,
    #[serde(skip)]
    pub cap: usize,
}

impl Default for LeafSearchOptions {
    fn default() -> Self {
        LeafSearchOptions { strict: false, every_vertex: false, cap: LEAF_BUDGET_CAP }
    }
}

fn serialize_exact<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(crate::rational::to_exact))
}

impl LeafSearchResult {
    pub fn base_graph(&self) -> Graph {
        Graph::new(self.base_n, self.base_edges.iter().copied()).expect("stored base graph is valid")
    }

    pub fn witness_graph(&self) -> Graph {
        let at: Vec<Vertex> = self
            .attachment
            .iter()
            .flat_map(|&(v, c)| std::iter::repeat_n(v, c))
            .collect();
        self.base_graph().attach_leaves(&at).expect("attachment vertices are in range")
    }

    /// Recomputes the witness curvature and checks the sign condition.
    pub fn reverify(&self) -> Result<bool> {
        let sol = steinerberger_curvature(&self.witness_graph())?;
        let covers = !self.options.every_vertex || self.attachment.len() == self.base_n;
        Ok(covers
            && sol.curvature == self.achieved_curvatures
            && all_negative(&sol, self.base_n, self.options.strict))
    }
}

fn all_negative(sol: &CurvatureSolution, n: usize, strict: bool) -> bool {
    let upto = if strict { sol.n() } else { n };
    sol.curvature[..upto].iter().all(Signed::is_negative)
}

pub fn min_leaves_negative(g: &Graph, budget: usize, strict: bool) -> Result<LeafSearchResult> {
    min_leaves_negative_with(g, budget, LeafSearchOptions { strict, ..Default::default() })
}

/// Tries attachments by total leaf count, then lexicographically as sorted
/// vertex sequences; the first success is minimal within the budget.
pub fn min_leaves_negative_with(g: &Graph, budget: usize, options: LeafSearchOptions) -> Result<LeafSearchResult> {
    if budget > options.cap {
        return Err(Error::CapExceeded { what: "leaf budget", value: budget, cap: options.cap });
    }
    let n = g.n();
    steinerberger_curvature(g)?;
    let forced = if options.every_vertex { n } else { 0 };
    for total in forced..=budget {
        let candidates: Vec<Vec<Vertex>> = multisets(n, total - forced)
            .into_iter()
            .map(|mut extra| {
                // Merging 0..n into a sorted sequence keeps lexicographic order.
                extra.extend(0..forced);
                extra.sort_unstable();
                extra
            })
            .collect();
        let found = candidates.par_iter().find_map_first(|at| {
            let h = g.attach_leaves(at).expect("vertices in range");
            match steinerberger_curvature(&h) {
                Ok(sol) if all_negative(&sol, n, options.strict) => Some(Ok((at.clone(), sol))),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            }
        });
        if let Some(found) = found {
            let (at, sol) = found?;
            let mut attachment: Vec<(Vertex, usize)> = Vec::new();
            for v in at {
                match attachment.last_mut() {
                    Some((w, c)) if *w == v => *c += 1,
                    _ => attachment.push((v, 1)),
                }
            }
            return Ok(LeafSearchResult {
                base_n: n,
                base_edges: g.edges().to_vec(),
                minimum_leaves: total,
                attachment,
                regime: sol.regime,
                achieved_curvatures: sol.curvature,
                options,
            });
        }
    }
    Err(Error::NotFoundWithinBudget { budget })
}

/// Nondecreasing sequences of length `k` over `0..n`, in lexicographic order.
fn multisets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = vec![0; k];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] + 1 < n) else {
            return out;
        };
        let next = cur[i] + 1;
        cur[i..].fill(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::predict_leaf_join;
    use crate::families;

    #[test]
    fn multiset_order() {
        assert_eq!(multisets(3, 2), vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(multisets(4, 0), vec![Vec::<usize>::new()]);
        assert_eq!(multisets(5, 3).len(), 35);
    }

    #[test]
    fn probe_baseline_and_single_leaf() {
        let k3 = families::complete(3).unwrap();
        let p = leaf_increment_probe(&k3, &[]).unwrap();
        assert_eq!(p.steps.len(), 1);
        assert!(p.deltas.is_empty() && p.warning.is_some());

        let p = leaf_increment_probe(&k3, &[0]).unwrap();
        let pred = predict_leaf_join(&k3, 0).unwrap();
        assert_eq!(p.steps[1], pred.predicted[..3].to_vec());
    }

    #[test]
    fn short_path_result_reverifies() {
        let r = min_leaves_negative(&families::path(3).unwrap(), 8, false).unwrap();
        assert!(r.reverify().unwrap());
        assert_eq!(r.attachment.iter().map(|a| a.1).sum::<usize>(), r.minimum_leaves);
    }

    #[test]
    fn budget_errors() {
        let p5 = families::path(5).unwrap();
        assert_eq!(min_leaves_negative(&p5, 3, false), Err(Error::NotFoundWithinBudget { budget: 3 }));
        assert!(matches!(min_leaves_negative(&p5, 99, false), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn every_vertex_mode() {
        let k3 = families::complete(3).unwrap();
        let opts = LeafSearchOptions { every_vertex: true, ..Default::default() };
        let r = min_leaves_negative_with(&k3, 9, opts).unwrap();
        assert_eq!(r.attachment.len(), 3);
        assert!(r.reverify().unwrap());
        assert!(min_leaves_negative_with(&k3, 2, opts).is_err());
    }
}
