//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Hard failures make the binary exit nonzero. The leaf-count criterion is
//! soft: a mismatch prints a structured discrepancy report instead.

mod common;

use std::time::{Duration, Instant};

use common::*;
use curvlab::analysis::{analyze, is_cocktail_party};
use curvlab::closed_forms::{
    block_graph_curvature, block_graph_terms, bridge_side_totals, predict_bridge_join, predict_leaf_join,
    tree_curvature,
};
use curvlab::families;
use curvlab::linalg::{characteristic_polynomial, IntPolynomial};
use curvlab::rational::{frac, int, to_decimal, to_exact, Rational};
use curvlab::search::{
    are_isomorphic, connected_graphs, min_leaves_negative_with, scan_graphs, LeafSearchOptions,
    Predicate, Source,
};
use curvlab::{steinerberger_curvature, Error, Regime};
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    SoftFail,
}

struct Suite {
    hard_failures: usize,
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

impl Suite {
    fn run(&mut self, name: &str, tolerance: &str, limit: Option<Duration>, f: impl FnOnce() -> (Status, String)) {
        let start = Instant::now();
        let (mut status, mut detail) = f();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            if elapsed > limit && status == Status::Pass {
                status = Status::Fail;
                detail = format!("{detail}; exceeded runtime limit {limit:?}");
            }
        }
        let tag = match status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SoftFail => "FAIL (soft)",
        };
        if status == Status::Fail {
            self.hard_failures += 1;
        }
        println!("{tag:<12} {name} [{tolerance}; {:.2}s] {detail}", elapsed.as_secs_f64());
    }

    fn hard(&mut self, name: &str, tolerance: &str, limit: Option<Duration>, f: impl FnOnce() -> Check) {
        self.run(name, tolerance, limit, || match f() {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        });
    }
}

fn block_graph_example() -> Check {
    let g = families::block_graph_example();
    let x = families::BLOCK_EXAMPLE_JOINT;
    let terms = block_graph_terms(&g).map_err(|e| e.to_string())?;
    let closed = block_graph_curvature(&g).map_err(|e| e.to_string())?;
    let solved = steinerberger_curvature(&g).map_err(|e| e.to_string())?;
    ensure(terms.lambda == frac(163, 60), || format!("lambda = {}", terms.lambda))?;
    ensure(terms.beta[x] == frac(-7, 15), || format!("beta_x = {}", terms.beta[x]))?;
    ensure(closed[x] == frac(-308, 163), || format!("closed form K(x) = {}", closed[x]))?;
    ensure(solved.regime == Regime::Unique, || "solver regime is not unique".into())?;
    ensure(closed == solved.curvature, || "closed form and solver differ".into())?;
    ensure(to_decimal(&closed[x], 4) == "-1.8896", || "decimal rendering".into())?;
    Ok("lambda = 163/60, beta_x = -7/15, K(x) = -308/163 (-1.8896) from both closed form and solver".into())
}

fn triangle() -> Check {
    let r = analyze(&families::complete(3).unwrap()).map_err(|e| e.to_string())?;
    ensure(r.solution.curvature == vec![frac(3, 2); 3], || "curvature is not constant 3/2".into())?;
    ensure(!r.is_bm_sharp, || "triangle reported sharp".into())?;
    Ok("K = 3/2 at every vertex, not Bonnet-Myers sharp".into())
}

fn book_graphs() -> Check {
    let total = |n| steinerberger_curvature(&families::book_of_triangles(n).unwrap()).unwrap().total;
    ensure(total(4).is_zero(), || format!("total of A(4) = {}", total(4)))?;
    ensure(total(5).is_negative(), || format!("total of A(5) = {}", total(5)))?;
    for n in 1..=8i64 {
        let g = families::book_of_triangles(n as usize).unwrap();
        let got = characteristic_polynomial(&g.distance_matrix().unwrap().to_int_matrix());
        let quadratic = IntPolynomial::from_i64s(&[-2, 1 - 2 * n, 1]);
        let want = quadratic.mul(&IntPolynomial::linear(-1)).mul(&IntPolynomial::linear(-2).pow(n as u32 - 1));
        ensure(got == want, || format!("A({n}): got {got}, want {want}"))?;
    }
    Ok(format!("total A(4) = 0, total A(5) = {}; char. polynomials match for n = 1..8", to_exact(&total(5))))
}

fn handa() -> Check {
    let g = families::handa_graph();
    families::validate_handa(&g).map_err(|e| e.to_string())?;
    let r = analyze(&g).map_err(|e| e.to_string())?;
    ensure(r.regime() == Regime::MaxiMin, || format!("regime {}", r.regime().as_str()))?;
    ensure(r.min_curvature == frac(2, 5), || format!("maximin value {}", r.min_curvature))?;
    ensure(r.solution.solution_space_dim == 18, || format!("dimension {}", r.solution.solution_space_dim))?;
    ensure(r.is_bm_sharp, || "not sharp".into())?;
    ensure(!r.self_centered && !r.antipodal, || "self-centered or antipodal".into())?;
    Ok(format!(
        "24 vertices, {} edges, bipartite, diameter 5, distance-balanced, 10 far pairs, 4 deficient vertices; \
         maximin 2/5 on an 18-dim solution space; sharp, not self-centered, not antipodal",
        g.edge_count()
    ))
}

fn antipodal_characterization() -> Check {
    let (mut checked, mut antipodal) = (0, 0);
    for n in 2..=7 {
        for g in connected_graphs(n).unwrap() {
            let r = analyze(&g).map_err(|e| e.to_string())?;
            if !r.regime().has_solution() {
                continue;
            }
            checked += 1;
            antipodal += r.antipodal as usize;
            ensure(r.antipodal == (r.self_centered && r.is_bm_sharp), || {
                format!("exception: {}", curvlab::io::emit_graph6(&g))
            })?;
        }
    }
    Ok(format!("{checked} graphs with a solution (n = 2..7), {antipodal} antipodal, 0 exceptions"))
}

fn diameter_two_sharp() -> Check {
    let (mut checked, mut sharp) = (0, Vec::new());
    for n in 3..=8 {
        for g in connected_graphs(n).unwrap() {
            if g.diameter().unwrap() != 2 {
                continue;
            }
            checked += 1;
            let r = analyze(&g).map_err(|e| e.to_string())?;
            if r.is_bm_sharp {
                let cp = (n % 2 == 0).then(|| families::cocktail_party(n / 2).unwrap());
                let matches = cp.is_some_and(|cp| are_isomorphic(&g, &cp).unwrap()) && is_cocktail_party(&g);
                ensure(matches, || format!("sharp non-CP graph {}", curvlab::io::emit_graph6(&g)))?;
                sharp.push(n);
            }
        }
    }
    Ok(format!("{checked} diameter-2 graphs (n <= 8); sharp ones have n = {sharp:?}, all CP(n/2); 0 exceptions"))
}

fn composition_oracles() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_b41d);
    let (mut tried, mut accepted, mut balanced) = (0, 0, 0);
    while accepted < 200 {
        tried += 1;
        let (n1, n2) = (rng.random_range(2..=8), rng.random_range(2..=8));
        let (p1, p2) = (rng.random_range(0.0..0.8), rng.random_range(0.0..0.8));
        let g1 = random_connected(&mut rng, n1, p1);
        let g2 = random_connected(&mut rng, n2, p2);
        let (u, v) = (rng.random_range(0..n1), rng.random_range(0..n2));
        let joined = g1.bridge_join(u, &g2, v).unwrap();
        let direct = steinerberger_curvature(&joined).unwrap();
        if direct.regime == Regime::Unique {
            let (a, b) = bridge_side_totals(&joined, u, n1 + v).unwrap().unwrap();
            ensure(a == b, || format!("balance fails on trial {tried}: {a} vs {b}"))?;
            balanced += 1;
        }
        let p = match predict_bridge_join(&g1, u, &g2, v) {
            Ok(p) => p,
            Err(Error::ConditionsViolated(_)) => continue,
            Err(e) => return Err(e.to_string()),
        };
        accepted += 1;
        ensure(p.predicted == direct.curvature, || format!("bridge prediction differs on trial {tried}"))?;
        let alpha_k1 = &p.alpha * &p.k1;
        ensure(
            direct.total == p.predicted_total() && direct.total == alpha_k1 && alpha_k1 == &p.beta * &p.k2,
            || format!("total-curvature identities fail on trial {tried}"),
        )?;
    }
    let (mut leaf_tried, mut leaf_ok) = (0, 0);
    while leaf_ok < 200 {
        leaf_tried += 1;
        let n = rng.random_range(2..=15);
        let p = rng.random_range(0.0..0.8);
        let g = random_connected(&mut rng, n, p);
        let u = rng.random_range(0..n);
        let p = match predict_leaf_join(&g, u) {
            Ok(p) => p,
            Err(Error::ConditionsViolated(_)) => continue,
            Err(e) => return Err(e.to_string()),
        };
        leaf_ok += 1;
        let direct = steinerberger_curvature(&g.attach_leaf(u).unwrap()).unwrap();
        ensure(p.predicted == direct.curvature, || format!("leaf prediction differs on trial {leaf_tried}"))?;
    }
    Ok(format!(
        "bridge: {accepted}/{tried} pairs satisfied the conditions and matched; balance held on {balanced} \
         uniquely-solvable bridged graphs; leaf: {leaf_ok}/{leaf_tried} matched"
    ))
}

fn closed_form_equivalence() -> Check {
    let mut rng = StdRng::seed_from_u64(0x7ee5);
    for i in 0..100 {
        let n = rng.random_range(2..=30);
        let t = random_tree(&mut rng, n);
        let direct = steinerberger_curvature(&t).unwrap().curvature;
        ensure(tree_curvature(&t).unwrap() == direct, || format!("tree {i}: degree formula differs"))?;
        ensure(block_graph_curvature(&t).unwrap() == direct, || format!("tree {i}: block formula differs"))?;
    }
    for i in 0..100 {
        let g = random_block_graph(&mut rng, 20);
        let direct = steinerberger_curvature(&g).unwrap();
        ensure(direct.regime == Regime::Unique, || format!("block graph {i} is singular"))?;
        ensure(block_graph_curvature(&g).unwrap() == direct.curvature, || format!("block graph {i} differs"))?;
    }
    Ok("100 random trees (n <= 30) and 100 random block graphs (n <= 20) match the solver exactly".into())
}

fn bonnet_myers_properties() -> Check {
    let (mut nonneg, mut positive, mut sharp, mut equal) = (0, 0, 0, 0);
    for n in 2..=7 {
        for g in connected_graphs(n).unwrap() {
            let r = analyze(&g).map_err(|e| e.to_string())?;
            let k0 = &r.min_curvature;
            if !r.regime().has_solution() || k0.is_negative() {
                continue;
            }
            nonneg += 1;
            let g6 = curvlab::io::emit_graph6(&g);
            let l = int(r.diameter as i64);
            let middle = int(2 * n as i64) / &r.total;
            ensure(l <= middle, || format!("{g6}: L > 2n/total"))?;
            if k0.is_positive() {
                positive += 1;
                ensure(middle <= int(2) / k0, || format!("{g6}: 2n/total > 2/K0"))?;
                let bound: Rational = int(1) / k0;
                ensure(r.average_distance <= bound, || format!("{g6}: average distance above 1/K0"))?;
                let eq = r.average_distance == bound;
                equal += eq as usize;
                ensure(eq == r.constant_curvature, || format!("{g6}: equality does not match constancy"))?;
            }
            if *k0 == frac(2, r.diameter as i64) {
                sharp += 1;
                ensure(r.constant_curvature && r.solution.is_constant(), || format!("{g6}: sharp but not constant"))?;
            }
        }
    }
    Ok(format!(
        "{nonneg} nonnegative graphs (n <= 7), {positive} with K0 > 0, {sharp} sharp, {equal} average-distance \
         equalities; 0 exceptions"
    ))
}

fn leaf_counts() -> (Status, String) {
    let targets = [("path(6)", families::path(6).unwrap(), 7usize), ("cycle(6)", families::cycle(6).unwrap(), 6)];
    let readings = [
        ("recorded: any leaves on original vertices, original vertices negative", false),
        ("alternative: every original vertex receives at least one leaf", true),
    ];
    let mut report = Vec::new();
    let mut recorded_ok = true;
    for (label, every_vertex) in readings {
        for (name, g, expected) in &targets {
            let opts = LeafSearchOptions { every_vertex, ..Default::default() };
            let entry = match min_leaves_negative_with(g, 12, opts) {
                Ok(r) => {
                    let reverified = r.reverify().unwrap_or(false);
                    if !every_vertex && (r.minimum_leaves != *expected || !reverified) {
                        recorded_ok = false;
                    }
                    json!({
                        "reading": label, "graph": name, "expected": expected, "found": r.minimum_leaves,
                        "attachment": r.attachment, "regime": r.regime.as_str(), "reverified": reverified,
                    })
                }
                Err(e) => {
                    if !every_vertex {
                        recorded_ok = false;
                    }
                    json!({ "reading": label, "graph": name, "expected": expected, "error": e.to_string() })
                }
            };
            report.push(entry);
        }
    }
    let p5 = min_leaves_negative_with(&families::path(5).unwrap(), 12, LeafSearchOptions::default())
        .map(|r| r.minimum_leaves)
        .ok();
    if recorded_ok {
        return (Status::Pass, "path(6) needs 7 leaves, cycle(6) needs 6".into());
    }
    let doc = json!({
        "discrepancy": "leaf counts",
        "note": "a 6-vertex path provably needs 8 leaves (tree degree formula); 7 is the count for the 5-vertex path",
        "path(5)": p5,
        "results": report,
    });
    (Status::SoftFail, format!("discrepancy report: {doc}"))
}

fn scan_report() -> Check {
    let mut lines = Vec::new();
    for p in [Predicate::ZeroTotal, Predicate::NegativeTotal, Predicate::InconsistentSystem] {
        let r = scan_graphs(2, 8, p, Source::Enumerated).map_err(|e| e.to_string())?;
        ensure(r.reverify().map_err(|e| e.to_string())?, || format!("{p}: a match failed to re-verify"))?;
        if p == Predicate::ZeroTotal {
            let a4 = families::book_of_triangles(4).unwrap();
            let found = r.matches.iter().any(|m| {
                m.n == 6 && are_isomorphic(&curvlab::io::parse_graph6(&m.graph6).unwrap(), &a4).unwrap()
            });
            ensure(found, || "A(4) missing from zero-total matches".into())?;
        }
        lines.push(r.summary());
    }
    Ok(format!("reported, not asserted (A(4) present at n = 6; all matches re-verify): {}", lines.join("; ")))
}

fn main() {
    let mut suite = Suite { hard_failures: 0 };
    let exact = "exact rational equality";
    suite.hard("block-graph example", exact, Some(Duration::from_secs(1)), block_graph_example);
    suite.hard("triangle", exact, None, triangle);
    suite.hard("book graphs A(n)", "exact integer coefficients", Some(Duration::from_secs(5)), book_graphs);
    suite.hard("Handa graph", exact, None, handa);
    suite.hard("antipodal characterization, n <= 7", "zero exceptions", None, antipodal_characterization);
    suite.hard("diameter-2 sharpness, n <= 8", "zero exceptions", None, diameter_two_sharp);
    suite.hard("composition oracles", exact, None, composition_oracles);
    suite.hard("closed-form equivalence", exact, None, closed_form_equivalence);
    suite.hard("Bonnet-Myers properties, n <= 7", "zero exceptions", None, bonnet_myers_properties);
    suite.run("leaf counts (soft)", "exact counts, budget 12", None, leaf_counts);
    suite.hard("open-problem scans, n <= 8", "re-verification only", None, scan_report);
    println!("acceptance: {} hard failure(s)", suite.hard_failures);
    if suite.hard_failures > 0 {
        std::process::exit(1);
    }
}
