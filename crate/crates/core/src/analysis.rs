//! Bonnet-Myers bounds, sharpness and the related metric classifications.

use num_traits::{Signed, Zero};

use crate::curvature::{is_constant_curvature, steinerberger_curvature, CurvatureSolution, Regime};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{frac, int, Rational};

/// A bound of the form `c / K₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Finite(Rational),
    /// `K₀ = 0`.
    Unbounded,
    /// No solution, or `K₀ < 0`.
    NotApplicable,
}

impl Bound {
    fn over_min(numerator: i64, regime: Regime, k0: &Rational) -> Bound {
        if !regime.has_solution() || k0.is_negative() {
            Bound::NotApplicable
        } else if k0.is_zero() {
            Bound::Unbounded
        } else {
            Bound::Finite(int(numerator) / k0)
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub n: usize,
    pub diameter: usize,
    pub solution: CurvatureSolution,
    /// `K₀ = min_x K(x)`.
    pub min_curvature: Rational,
    pub total: Rational,
    /// `2 / K₀`.
    pub bm_upper_bound: Bound,
    /// `L ≤ 2n/total ≤ 2/K₀`, checked only for nonnegative solutions.
    pub diameter_chain_holds: Option<bool>,
    pub is_bm_sharp: bool,
    pub constant_curvature: bool,
    pub self_centered: bool,
    pub antipodal: bool,
    /// `d# = (1/n²) Σ_{x,y} d(x,y)`.
    pub average_distance: Rational,
    /// `1 / K₀`.
    pub avdist_bound: Bound,
}

impl AnalysisReport {
    pub fn regime(&self) -> Regime {
        self.solution.regime
    }
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let solution = steinerberger_curvature(g)?;
    let d = g.distance_matrix()?;
    let n = g.n();
    let diameter = d.diameter();
    let regime = solution.regime;
    let k0 = solution.maximin_value.clone();
    let total = solution.total.clone();
    let two_over_l = frac(2, diameter as i64);

    // The canonical quantity for sharpness is the maxi-min value, never a
    // particular witness.
    let is_bm_sharp = regime.has_solution() && k0 == two_over_l;
    let bm_upper_bound = Bound::over_min(2, regime, &k0);
    let diameter_chain_holds = (regime.has_solution() && !k0.is_negative()).then(|| {
        let l = int(diameter as i64);
        let middle = int(2 * n as i64) / &total;
        l <= middle && bm_upper_bound.finite().is_none_or(|b| middle <= *b)
    });

    Ok(AnalysisReport {
        n,
        diameter,
        min_curvature: k0.clone(),
        total,
        bm_upper_bound,
        diameter_chain_holds,
        is_bm_sharp,
        constant_curvature: is_constant_curvature(g)?,
        self_centered: g.is_self_centered()?,
        antipodal: g.is_antipodal()?,
        average_distance: frac(d.total() as i64, (n * n) as i64),
        avdist_bound: Bound::over_min(1, regime, &k0),
        solution,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AvDistCheck {
    /// `d# ≤ 1/K₀`.
    pub holds: bool,
    pub equality: bool,
    pub constant: bool,
}

/// Average-distance inequality for graphs with a nonnegative curvature solution.
pub fn check_avdist_inequality(g: &Graph) -> Result<AvDistCheck> {
    let r = analyze(g)?;
    check_avdist_report(&r)
}

pub fn check_avdist_report(r: &AnalysisReport) -> Result<AvDistCheck> {
    let constant = r.solution.is_constant();
    match &r.avdist_bound {
        Bound::NotApplicable => Err(Error::NotApplicable),
        Bound::Unbounded => Ok(AvDistCheck { holds: true, equality: false, constant }),
        Bound::Finite(b) => Ok(AvDistCheck {
            holds: r.average_distance <= *b,
            equality: r.average_distance == *b,
            constant,
        }),
    }
}

/// Bonnet-Myers sharpness of a diameter-2 graph.
pub fn classify_diameter2_sharp(g: &Graph) -> Result<bool> {
    let diameter = g.diameter()?;
    if diameter != 2 {
        return Err(Error::WrongDiameter { expected: 2, found: diameter });
    }
    Ok(analyze(g)?.is_bm_sharp)
}

/// `K_{2m}` minus a perfect matching, `m ≥ 2`: every vertex misses exactly one other.
pub fn is_cocktail_party(g: &Graph) -> bool {
    let n = g.n();
    n >= 4 && n.is_multiple_of(2) && (0..n).all(|v| g.degree(v) == n - 2)
}
