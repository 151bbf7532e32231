//! Steinerberger curvature: solutions `K` of `D K = n·1`.
//!
//! The three regimes are tried in order. A unique solution is the
//! curvature. If the solution space is affine, the curvature is a solution
//! whose smallest entry is as large as possible. If there is no solution,
//! `K = n·D†·1`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::linalg::{self, maximin_over_affine, SolutionKind};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    #[serde(rename = "unique")]
    Unique,
    #[serde(rename = "maximin")]
    MaxiMin,
    #[serde(rename = "pseudoinverse")]
    Pseudoinverse,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Unique => "unique",
            Regime::MaxiMin => "maximin",
            Regime::Pseudoinverse => "pseudoinverse",
        }
    }

    /// Whether `D K = n·1` has any solution at all.
    pub fn has_solution(self) -> bool {
        self != Regime::Pseudoinverse
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureSolution {
    pub regime: Regime,
    /// Vertex curvatures `K(x)`.
    pub curvature: Vec<Rational>,
    /// Nullity of the distance matrix.
    pub solution_space_dim: usize,
    /// `min_x K(x)`; in the maxi-min regime this is the optimum of the LP.
    pub maximin_value: Rational,
    pub total: Rational,
    /// False only for a maxi-min witness that is not constant: the entries of
    /// such a vector are one optimal choice among many.
    pub canonical: bool,
}

impl CurvatureSolution {
    pub fn n(&self) -> usize {
        self.curvature.len()
    }

    pub fn is_constant(&self) -> bool {
        self.curvature.windows(2).all(|w| w[0] == w[1])
    }

    pub fn max(&self) -> &Rational {
        self.curvature.iter().max().expect("nonempty")
    }

    pub fn is_nonnegative(&self) -> bool {
        self.maximin_value >= Rational::zero()
    }
}

pub fn steinerberger_curvature(g: &Graph) -> Result<CurvatureSolution> {
    let d = g.distance_matrix()?;
    let n = g.n();
    if n == 1 {
        return Err(Error::SingleVertex);
    }
    let dm = d.to_int_matrix();
    let rhs = vec![rational::int(n as i64); n];
    let system = linalg::solve(&dm, &rhs);
    let nullity = n - system.rank;

    let (regime, curvature, canonical) = match system.kind {
        SolutionKind::Unique => (Regime::Unique, system.particular.unwrap(), true),
        SolutionKind::Affine => {
            let particular = system.particular.unwrap();
            let opt = maximin_over_affine(&particular, &system.nullspace)
                .expect("maxi-min LP is bounded for distance matrices of connected graphs");
            match constant_solution(d.row_sums(), n) {
                // A constant solution has the mean of every solution as its
                // value, so it is always optimal.
                Some(c) => {
                    assert_eq!(opt.value, c, "constant solution must be maxi-min optimal");
                    (Regime::MaxiMin, vec![c; n], true)
                }
                None => {
                    let canonical = opt.witness.windows(2).all(|w| w[0] == w[1]);
                    (Regime::MaxiMin, opt.witness, canonical)
                }
            }
        }
        SolutionKind::Inconsistent => (
            Regime::Pseudoinverse,
            linalg::pseudoinverse_apply(&dm, &rhs),
            true,
        ),
    };
    let maximin_value = rational::min(&curvature).expect("n >= 2");
    let total = rational::sum(&curvature);
    Ok(CurvatureSolution {
        regime,
        curvature,
        solution_space_dim: nullity,
        maximin_value,
        total,
        canonical,
    })
}

/// `n / r` when every row of `D` sums to `r`.
fn constant_solution(row_sums: Vec<u64>, n: usize) -> Option<Rational> {
    let r = *row_sums.first()?;
    (r > 0 && row_sums.iter().all(|&s| s == r))
        .then(|| rational::frac(n as i64, r as i64))
}

/// `K(W) = Σ_{w ∈ W} K(w)`; `None` means the whole vertex set.
pub fn total_curvature(sol: &CurvatureSolution, subset: Option<&[Vertex]>) -> Result<Rational> {
    match subset {
        None => Ok(sol.total.clone()),
        Some(w) => {
            let n = sol.n();
            let mut acc = Rational::zero();
            for &v in w {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                acc += &sol.curvature[v];
            }
            Ok(acc)
        }
    }
}

/// Row-sum test: `D·1` is a constant vector.
pub fn is_constant_curvature(g: &Graph) -> Result<bool> {
    if g.n() == 1 {
        return Err(Error::SingleVertex);
    }
    let sums = g.distance_matrix()?.row_sums();
    Ok(sums.windows(2).all(|w| w[0] == w[1]))
}
