//! Exact linear algebra over integer and rational matrices.
//!
//! Nothing in here rounds: every operation works on [`Rational`] or
//! arbitrary-precision integers.

mod charpoly;
mod pinv;
mod simplex;

use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

pub use charpoly::{characteristic_polynomial, IntPolynomial};
pub use pinv::{pseudoinverse, pseudoinverse_apply};
pub use simplex::{maximin_over_affine, maximize, LpOutcome, Maximin};

use crate::rational::Rational;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let data = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        IntMatrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| (i == j) as i64)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| {
            Rational::from_integer(self.get(i, j).into())
        })
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, xj) in x.iter().enumerate() {
                    let a = self.get(i, j);
                    if a != 0 {
                        acc += xj * Rational::from_integer(a.into());
                    }
                }
                acc
            })
            .collect()
    }
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl RatMatrix {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Gauss-Jordan reduction in place, pivoting only within the first
    /// `pivot_cols` columns. Returns the pivot columns in row order.
    pub fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols.min(self.cols) {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &self[(r, j)] * &factor;
                    self[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = RatMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        if aug.rref_in_place(n).len() < n {
            return None;
        }
        Some(RatMatrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolutionKind {
    Unique,
    Affine,
    Inconsistent,
}

/// Outcome of solving `D x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystemSolution {
    pub kind: SolutionKind,
    /// Some solution, with every free variable set to zero.
    pub particular: Option<Vec<Rational>>,
    /// Basis of `ker(D)`; empty unless the system is singular.
    pub nullspace: Vec<Vec<Rational>>,
    pub rank: usize,
}

/// Solves `D x = b` by Gauss-Jordan elimination over the rationals.
///
/// The nullspace basis is returned even for inconsistent systems.
pub fn solve(d: &IntMatrix, b: &[Rational]) -> LinearSystemSolution {
    assert!(d.is_square(), "solve expects a square matrix");
    assert_eq!(b.len(), d.rows());
    let n = d.cols();
    let mut aug = RatMatrix::from_fn(n, n + 1, |i, j| {
        if j < n {
            Rational::from_integer(d.get(i, j).into())
        } else {
            b[i].clone()
        }
    });
    let pivots = aug.rref_in_place(n);
    let rank = pivots.len();
    let consistent = (rank..n).all(|i| aug[(i, n)].is_zero());

    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let nullspace: Vec<Vec<Rational>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut z = vec![Rational::zero(); n];
            z[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                z[c] = -aug[(r, f)].clone();
            }
            z
        })
        .collect();

    let particular = consistent.then(|| {
        let mut x = vec![Rational::zero(); n];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, n)].clone();
        }
        x
    });
    let kind = match (consistent, nullspace.is_empty()) {
        (false, _) => SolutionKind::Inconsistent,
        (true, true) => SolutionKind::Unique,
        (true, false) => SolutionKind::Affine,
    };
    LinearSystemSolution {
        kind,
        particular,
        nullspace,
        rank,
    }
}
