//! Integer checks of capture-time identities and inequalities against
//! solver values.
//!
//! Every check yields a [`BoundReport`]: a list of claims, each an exact
//! comparison of two integers. Claims whose hypothesis has no witness in
//! the instance are reported as vacuous rather than passed.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::product::ProductGraph;
use crate::solver::SolveResult;
use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: Value, rhs: Value) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "==",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Vacuous => "VACUOUS",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    /// `None` for vacuous claims.
    pub sides: Option<(Value, Value)>,
    pub relation: Relation,
    pub verdict: Verdict,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sides {
            Some((l, r)) => write!(f, "CLAIM {} {l} {} {r} {}", self.id, self.relation, self.verdict),
            None => write!(f, "CLAIM {} - {} - {}", self.id, self.relation, self.verdict),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundReport {
    pub instance: String,
    pub claims: Vec<Claim>,
    /// Solver values the claims were computed from, by name.
    pub provenance: Vec<(String, Value)>,
}

impl BoundReport {
    pub fn new(instance: impl Into<String>) -> Self {
        BoundReport { instance: instance.into(), ..Default::default() }
    }

    pub fn check(&mut self, id: impl Into<String>, lhs: u64, relation: Relation, rhs: u64) -> bool {
        let round = |x: u64| Value::Capture(u32::try_from(x).expect("claim sides fit in u32"));
        self.check_values(id, round(lhs), relation, round(rhs))
    }

    /// Like [`check`](Self::check) but the sides may be escape, which
    /// compares above every round count.
    pub fn check_values(&mut self, id: impl Into<String>, lhs: Value, relation: Relation, rhs: Value) -> bool {
        let ok = relation.holds(lhs, rhs);
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        self.claims.push(Claim { id: id.into(), sides: Some((lhs, rhs)), relation, verdict });
        ok
    }

    pub fn vacuous(&mut self, id: impl Into<String>, relation: Relation) {
        self.claims.push(Claim { id: id.into(), sides: None, relation, verdict: Verdict::Vacuous });
    }

    pub fn record(&mut self, name: impl Into<String>, value: Value) {
        self.provenance.push((name.into(), value));
    }

    pub fn extend(&mut self, other: BoundReport) {
        self.claims.extend(other.claims);
        self.provenance.extend(other.provenance);
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.claims.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn all_pass(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    /// One `CLAIM` line per claim.
    pub fn to_text(&self) -> String {
        self.claims.iter().map(|c| format!("{c}\n")).collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("capture time is infinite, nothing to bound")]
    Escape,
    #[error("expected a table for {expected} cops, got {got}")]
    CopCount { expected: usize, got: usize },
    #[error("value table does not belong to this instance")]
    GraphMismatch,
}

fn finite(result: &SolveResult, cops: usize) -> Result<u64, BoundError> {
    if result.table.cops() != cops {
        return Err(BoundError::CopCount { expected: cops, got: result.table.cops() });
    }
    result.capture_time.rounds().map(u64::from).ok_or(BoundError::Escape)
}

/// `∃ v ≠ u` with `N[u] ⊆ N[v]`.
pub fn is_corner(g: &Graph, u: Vertex) -> bool {
    let nu = g.closed_neighbors(u);
    (0..g.vertex_count()).any(|v| v != u && nu.iter().all(|&w| w == v || g.is_adjacent(w, v)))
}

/// Vertices on an induced 4-cycle `C` such that no vertex of `g` has more
/// than two neighbours on `C`, each with its lexicographically smallest
/// such cycle (listed in cycle order from its smallest vertex). Sorted by
/// vertex.
pub fn qualifying_c4_vertices(g: &Graph) -> Vec<(Vertex, [Vertex; 4])> {
    let n = g.vertex_count();
    let mut witness: Vec<Option<[Vertex; 4]>> = vec![None; n];
    let mut hits = vec![0u8; n];
    // a is the smallest vertex of the cycle a-b-c-d-a, with b < d
    for a in 0..n {
        let na = g.neighbors(a);
        for (i, &b) in na.iter().enumerate() {
            for &d in &na[i + 1..] {
                if b < a || d < a || g.is_adjacent(b, d) {
                    continue;
                }
                for &c in g.neighbors(b) {
                    if c <= a || c == d || !g.is_adjacent(c, d) || g.is_adjacent(a, c) {
                        continue;
                    }
                    let cycle = [a, b, c, d];
                    let mut ok = true;
                    let mut touched = Vec::new();
                    for &x in &cycle {
                        for &w in g.neighbors(x) {
                            hits[w] += 1;
                            touched.push(w);
                            if hits[w] > 2 {
                                ok = false;
                            }
                        }
                    }
                    for w in touched {
                        hits[w] = 0;
                    }
                    if !ok {
                        continue;
                    }
                    for &x in &cycle {
                        if witness[x].is_none_or(|w| cycle < w) {
                            witness[x] = Some(cycle);
                        }
                    }
                }
            }
        }
    }
    witness.into_iter().enumerate().filter_map(|(u, w)| w.map(|c| (u, c))).collect()
}

/// `d(u, c1) + d(u, c2) ≤ 2·capt_2 + 1` for every central pair and every
/// qualifying `u`.
pub fn check_lemma3(g: &Graph, result: &SolveResult) -> Result<BoundReport, BoundError> {
    if result.table.graph() != g {
        return Err(BoundError::GraphMismatch);
    }
    let t = finite(result, 2)?;
    let mut report = BoundReport::new(format!("n={} m={}", g.vertex_count(), g.edge_count()));
    report.record("capt2", result.capture_time);
    let qualifying = qualifying_c4_vertices(g);
    if qualifying.is_empty() {
        report.vacuous("lemma3", Relation::Le);
        return Ok(report);
    }
    for tuple in &result.central_tuples {
        let (c1, c2) = (tuple[0], tuple[1]);
        let (d1, d2) = (g.bfs_distances(c1), g.bfs_distances(c2));
        for &(u, _) in &qualifying {
            report.check(format!("lemma3[u={u},c={c1}+{c2}]"), (d1[u] + d2[u]) as u64, Relation::Le, 2 * t + 1);
        }
    }
    Ok(report)
}

/// Equality `capt_2(T1□T2) = ⌊diam/2⌋`, plus the chain through the two
/// opposite corners `u`, `v` of a longest path pair:
/// `2·diam ≤ Σ d(·, c_i) ≤ 4·capt_2 + 2` for every central pair.
pub fn check_theorem2(t1: &Graph, t2: &Graph, result: &SolveResult) -> Result<BoundReport, BoundError> {
    let product = ProductGraph::new(t1, t2);
    let g = product.flat();
    if result.table.graph() != g {
        return Err(BoundError::GraphMismatch);
    }
    let t = finite(result, 2)?;
    let mut report = BoundReport::new(format!("T1(n={}) x T2(n={})", t1.vertex_count(), t2.vertex_count()));
    report.record("capt2", result.capture_time);
    let diam = g.diameter() as u64;
    report.check("product-diameter", diam, Relation::Eq, (t1.diameter() + t2.diameter()) as u64);
    report.check("theorem2", t, Relation::Eq, diam / 2);

    let (Ok(p1), Ok(p2)) = (t1.diametral_path(), t2.diametral_path()) else {
        report.vacuous("lemma4", Relation::Le);
        return Ok(report);
    };
    let u = product.flat_of(p1[0], p2[0]);
    let v = product.flat_of(p1[p1.len() - 1], p2[p2.len() - 1]);
    let qualifying = qualifying_c4_vertices(g);
    let qualifies = |x: Vertex| qualifying.iter().any(|&(y, _)| y == x);
    if !(qualifies(u) && qualifies(v)) {
        report.vacuous("lemma4", Relation::Le);
        return Ok(report);
    }
    let (du, dv) = (g.bfs_distances(u), g.bfs_distances(v));
    report.check("lemma4-corners", du[v] as u64, Relation::Eq, diam);
    for tuple in &result.central_tuples {
        let (c1, c2) = (tuple[0], tuple[1]);
        let sum = (du[c1] + dv[c1] + du[c2] + dv[c2]) as u64;
        report.check(format!("lemma4-triangle[c={c1}+{c2}]"), 2 * diam, Relation::Le, sum);
        report.check(format!("lemma4-lemma3[c={c1}+{c2}]"), sum, Relation::Le, 4 * t + 2);
    }
    report.check("lemma4", 2 * diam, Relation::Le, 4 * t + 2);
    Ok(report)
}

fn is_path(g: &Graph) -> bool {
    g.is_tree() && (0..g.vertex_count()).all(|v| g.degree(v) <= 2)
}

/// `capt_1(T1) + capt_1(T2) − 1 ≤ capt_2(T1□T2) ≤ capt_1(T1) + capt_1(T2)`,
/// and for two paths on `m` and `n` vertices `capt_2 = ⌊(m+n)/2⌋ − 1`.
pub fn check_corollaries(
    t1: &Graph,
    t2: &Graph,
    product: &SolveResult,
    factor1: &SolveResult,
    factor2: &SolveResult,
) -> Result<BoundReport, BoundError> {
    if factor1.table.graph() != t1 || factor2.table.graph() != t2 {
        return Err(BoundError::GraphMismatch);
    }
    let t = finite(product, 2)?;
    let (a, b) = (finite(factor1, 1)?, finite(factor2, 1)?);
    let mut report = BoundReport::new(format!("T1(n={}) x T2(n={})", t1.vertex_count(), t2.vertex_count()));
    report.record("capt2(T1xT2)", product.capture_time);
    report.record("capt1(T1)", factor1.capture_time);
    report.record("capt1(T2)", factor2.capture_time);
    // a + b >= 1 for non-trivial factors; written as a + b <= t + 1
    report.check("sandwich-lower", a + b, Relation::Le, t + 1);
    report.check("sandwich-upper", t, Relation::Le, a + b);
    if is_path(t1) && is_path(t2) {
        let (m, n) = (t1.vertex_count() as u64, t2.vertex_count() as u64);
        report.check("grid", t + 1, Relation::Eq, (m + n) / 2);
    }
    Ok(report)
}

/// Cops needed on a product of `n` trees: `⌈(n+1)/2⌉`.
pub fn cops_for_tree_product(n: usize) -> usize {
    (n + 1).div_ceil(2)
}

/// `Σ_i (2^⌈i/2⌉ − 1)·d_i` over diameters `d_1, d_2, …`.
pub fn n_tree_bound(diameters: &[usize]) -> u64 {
    diameters.iter().enumerate().map(|(i, &d)| ((1u64 << (i + 1).div_ceil(2)) - 1) * d as u64).sum()
}

/// Bounds for products of several trees. With a solve result, three
/// factors get `⌊Σd/2⌋ ≤ capt ≤ 1 + Σd` and any count gets the general
/// formula; without one only the formula value is recorded.
pub fn check_section4_bounds(trees: &[Graph], result: Option<&SolveResult>) -> Result<BoundReport, BoundError> {
    let diameters: Vec<usize> = trees.iter().map(Graph::diameter).collect();
    let sum: u64 = diameters.iter().map(|&d| d as u64).sum();
    let formula = n_tree_bound(&diameters);
    let mut report = BoundReport::new(format!("product of {} trees, diameters {diameters:?}", trees.len()));
    let Some(result) = result else {
        report.check("ntree-formula", formula, Relation::Eq, formula);
        return Ok(report);
    };
    let capt = finite(result, cops_for_tree_product(trees.len()))?;
    report.record("capt", result.capture_time);
    if trees.len() == 3 {
        report.check("three-lower", sum / 2, Relation::Le, capt);
        report.check("three-upper", capt, Relation::Le, 1 + sum);
    }
    report.check("ntree-upper", capt, Relation::Le, formula);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::MoveOrder;
    use crate::generators::{cycle_graph, grid_graph, path_graph};
    use crate::solver::solve;

    #[test]
    fn corners() {
        let p3 = path_graph(3).unwrap();
        assert!(is_corner(&p3, 0));
        assert!(!is_corner(&p3, 1));
        let grid = grid_graph(3, 3).unwrap();
        assert!((0..9).all(|u| !is_corner(&grid, u)));
        let c4 = cycle_graph(4).unwrap();
        assert!((0..4).all(|u| !is_corner(&c4, u)));
    }

    #[test]
    fn c4_witnesses() {
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(qualifying_c4_vertices(&c4).len(), 4);
        assert!(qualifying_c4_vertices(&path_graph(5).unwrap()).is_empty());
        let grid = grid_graph(3, 3).unwrap();
        let q = qualifying_c4_vertices(&grid);
        assert_eq!(q.len(), 9);
        assert_eq!(q[0], (0, [0, 1, 4, 3]));
        // K4 minus nothing: every 4-cycle has chords
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(qualifying_c4_vertices(&k4).is_empty());
        // K_{2,3}: the third vertex of the big side sees both of the small side only
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(qualifying_c4_vertices(&k23).len(), 5);
        // wheel-like: a hub adjacent to all four cycle vertices disqualifies it
        let w = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert!(qualifying_c4_vertices(&w).is_empty());
    }

    #[test]
    fn lemma3_examples() {
        let grid = grid_graph(3, 3).unwrap();
        let res = solve(&grid, 2, MoveOrder::RobberFirst).unwrap();
        let r = check_lemma3(&grid, &res).unwrap();
        assert!(r.all_pass() && r.count(Verdict::Pass) > 0);
        let c4 = cycle_graph(4).unwrap();
        let res = solve(&c4, 2, MoveOrder::RobberFirst).unwrap();
        assert!(check_lemma3(&c4, &res).unwrap().all_pass());
        let p = path_graph(5).unwrap();
        let res = solve(&p, 2, MoveOrder::RobberFirst).unwrap();
        let r = check_lemma3(&p, &res).unwrap();
        assert_eq!(r.count(Verdict::Vacuous), 1);
        assert_eq!(r.to_text(), "CLAIM lemma3 - <= - VACUOUS\n");
    }

    #[test]
    fn theorem2_and_corollaries() {
        let (t1, t2) = (path_graph(4).unwrap(), path_graph(3).unwrap());
        let g = ProductGraph::new(&t1, &t2).into_flat();
        let res = solve(&g, 2, MoveOrder::RobberFirst).unwrap();
        let r = check_theorem2(&t1, &t2, &res).unwrap();
        assert!(r.all_pass(), "{}", r.to_text());
        assert!(r.to_text().contains("CLAIM theorem2 2 == 2 PASS"));
        let f1 = solve(&t1, 1, MoveOrder::RobberFirst).unwrap();
        let f2 = solve(&t2, 1, MoveOrder::RobberFirst).unwrap();
        let r = check_corollaries(&t1, &t2, &res, &f1, &f2).unwrap();
        assert!(r.all_pass(), "{}", r.to_text());
        assert!(r.to_text().contains("CLAIM grid 3 == 3 PASS"));
    }

    #[test]
    fn failing_claims_are_reported() {
        let mut r = BoundReport::new("x");
        assert!(!r.check("bad", 3, Relation::Le, 2));
        assert_eq!(r.to_text(), "CLAIM bad 3 <= 2 FAIL\n");
        assert!(!r.all_pass());
    }

    #[test]
    fn formula_values() {
        assert_eq!(n_tree_bound(&[1, 1, 1, 1]), 8);
        assert_eq!(n_tree_bound(&[1, 1, 2]), 1 + 1 + 6);
        assert_eq!(cops_for_tree_product(3), 2);
        assert_eq!(cops_for_tree_product(4), 3);
        assert_eq!(cops_for_tree_product(2), 2);
    }

    #[test]
    fn escape_is_rejected() {
        let c4 = cycle_graph(4).unwrap();
        let res = solve(&c4, 1, MoveOrder::RobberFirst).unwrap();
        assert_eq!(check_lemma3(&c4, &res).unwrap_err(), BoundError::CopCount { expected: 2, got: 1 });
    }
}
