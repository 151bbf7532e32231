//! Two-phase tableau simplex over exact rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; last entry is minus the current objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.obj.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = c;
    }

    /// Sets the objective to `cost` (indexed by column) and prices out the basis.
    fn set_objective(&mut self, cost: &[Rational]) {
        let width = self.obj.len();
        self.obj = (0..width)
            .map(|j| cost.get(j).cloned().unwrap_or_else(Rational::zero))
            .collect();
        self.obj[width - 1] = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost.get(b).cloned().unwrap_or_else(Rational::zero);
            if cb.is_zero() {
                continue;
            }
            for (v, a) in self.obj.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *v -= &cb * a;
                }
            }
        }
    }

    /// Runs Bland-rule pivots with entering columns restricted to `< allowed`.
    /// Returns false if the objective is unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let rhs = self.rhs();
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c);
        }
    }
}

/// Maximizes `cost · x` subject to `a x = b`, `x ≥ 0`.
pub fn maximize(cost: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = cost.len();
    assert_eq!(b.len(), m);
    assert!(a.iter().all(|r| r.len() == n), "constraint width mismatch");

    // Phase one: artificial per row, rows sign-normalised so b >= 0.
    let width = n + m + 1;
    let mut rows = Vec::with_capacity(m);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut row = vec![Rational::zero(); width];
        for (j, v) in ai.iter().enumerate() {
            row[j] = if flip { -v.clone() } else { v.clone() };
        }
        row[n + i] = Rational::one();
        row[width - 1] = if flip { -bi.clone() } else { bi.clone() };
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        obj: vec![Rational::zero(); width],
        basis: (n..n + m).collect(),
    };
    let mut phase_one = vec![Rational::zero(); n + m];
    for c in phase_one.iter_mut().skip(n) {
        *c = -Rational::one();
    }
    t.set_objective(&phase_one);
    let bounded = t.optimize(n + m);
    debug_assert!(bounded, "phase one is always bounded");
    if !t.obj[width - 1].is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive artificials out of the basis; drop rows that are redundant.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            if let Some(c) = (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, c);
            } else {
                t.rows.remove(i);
                t.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }

    t.set_objective(cost);
    if !t.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
        x[bv] = t.rows[i][width - 1].clone();
    }
    let value = -t.obj[width - 1].clone();
    LpOutcome::Optimal { x, value }
}

/// Optimum of `max_t min_i (particular + t)_i` over `t` in the span of `basis`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Maximin {
    pub value: Rational,
    pub witness: Vec<Rational>,
}

/// Solves the maxi-min problem as the linear program
/// `max m  s.t.  particular + Σ c_j basis_j ≥ m·1`, with `c` and `m` free.
pub fn maximin_over_affine(particular: &[Rational], basis: &[Vec<Rational>]) -> Result<Maximin> {
    let n = particular.len();
    if basis.is_empty() {
        let value = particular.iter().min().cloned().unwrap_or_else(Rational::zero);
        return Ok(Maximin {
            value,
            witness: particular.to_vec(),
        });
    }
    let k = basis.len();
    // columns: c+ (k) | c- (k) | m+ | m- | slack (n)
    let cols = 2 * k + 2 + n;
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![Rational::zero(); cols];
        for (j, z) in basis.iter().enumerate() {
            row[j] = z[i].clone();
            row[k + j] = -z[i].clone();
        }
        row[2 * k] = -Rational::one();
        row[2 * k + 1] = Rational::one();
        row[2 * k + 2 + i] = -Rational::one();
        a.push(row);
        b.push(-particular[i].clone());
    }
    let mut cost = vec![Rational::zero(); cols];
    cost[2 * k] = Rational::one();
    cost[2 * k + 1] = -Rational::one();

    match maximize(&cost, &a, &b) {
        LpOutcome::Optimal { x, value } => {
            let mut witness = particular.to_vec();
            for (j, z) in basis.iter().enumerate() {
                let c = &x[j] - &x[k + j];
                if c.is_zero() {
                    continue;
                }
                for (w, zi) in witness.iter_mut().zip(z) {
                    *w += &c * zi;
                }
            }
            debug_assert_eq!(witness.iter().min(), Some(&value));
            Ok(Maximin { value, witness })
        }
        LpOutcome::Unbounded => Err(Error::Unbounded),
        LpOutcome::Infeasible => unreachable!("maximin LP is always feasible"),
    }
}
