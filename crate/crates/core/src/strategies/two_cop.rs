//! Two cops on the Cartesian product of two trees.
//!
//! Work in coordinates `(x, y)` where `x` lives in a tree `A` of odd
//! diameter `2m+1` with longest path `a_1 … a_{2m+2}` and `y` in a tree `B` of
//! even diameter `2n` with longest path `b_1 … b_{2n+1}`. The cops start on
//! `(a_{m+1}, b_{n+1})` and `(a_{m+2}, b_{n+1})`.
//!
//! Once the robber has a position, the cop whose `A` coordinate is nearer to
//! hers becomes `C1 = (u1, u2)`, the other `C2 = (v1, v2)`; `A` is rooted at
//! `v1` and `B` at `b_{n+1}`. The cops first equalise: while `d(u2, r2)` is
//! below `d(u1, r1)` both descend in `A` toward `r1`, while it is above
//! `d(v1, r1)` both descend in `B` toward `r2`. When `d(u2, r2)` hits
//! `{d(u1, r1), d(v1, r1)}` they switch for good to the endgame responder,
//! which answers each robber step with one of five replies and keeps
//!
//! * `r1` below `u1` and `v1`, `r2` below `u2` and `v2`,
//! * `d(v1, r1) = 1 + d(u1, r1)`,
//! * `u2 = v2`,
//! * `d(u2, r2) ∈ {d(u1, r1), d(v1, r1)}`,
//!
//! while `h(u1) + h(v1) + h(u2) + h(v2)` drops by at least two per cop move.
//! Every one of these is checked at run time; a violation is an error, never
//! a silent repair.
//!
//! Factors whose diameters do not have opposite parity are normalised first:
//! swapped if needed, and otherwise extended by one virtual leaf at the end
//! of a longest path. The virtual leaf only shifts placements and heights;
//! the game is played on the real product, and a prescribed move onto a
//! virtual vertex is reported as [`StrategyError::VirtualMove`].

use crate::game::{CopStrategy, GameState, StrategyError};
use crate::graph::{Graph, GraphError, Vertex};
use crate::product::ProductGraph;
use crate::tree::RootedTree;

/// `(A coordinate, B coordinate)`.
pub type Coord = (Vertex, Vertex);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Augmentation {
    None,
    /// `vertex` was appended to tree `factor` (0 = `A`, 1 = `B`) as a leaf
    /// hanging off `attached_to`.
    Leaf {
        factor: usize,
        attached_to: Vertex,
        vertex: Vertex,
    },
}

/// Factors rearranged so that `A` has odd and `B` even diameter.
#[derive(Debug, Clone)]
pub struct ParityNormalized {
    pub a: Graph,
    pub b: Graph,
    /// `A` is the real second factor.
    pub swapped: bool,
    pub augmentation: Augmentation,
    /// Longest path of `A`, `a_1 … a_{2m+2}`.
    pub a_path: Vec<Vertex>,
    /// Longest path of `B`, `b_1 … b_{2n+1}`.
    pub b_path: Vec<Vertex>,
}

impl ParityNormalized {
    pub fn m(&self) -> usize {
        (self.a_path.len() - 2) / 2
    }

    pub fn n(&self) -> usize {
        (self.b_path.len() - 1) / 2
    }

    /// `⌊(d1 + d2) / 2⌋` of the real factors, which equals `m + n`.
    pub fn capture_bound(&self) -> usize {
        self.m() + self.n()
    }
}

fn add_leaf(tree: &Graph, path: &mut Vec<Vertex>) -> (Graph, Vertex, Vertex) {
    let n = tree.vertex_count();
    let end = *path.last().expect("non-empty path");
    let g = Graph::new(n + 1, tree.edges().chain([(end, n)])).expect("adding a leaf keeps a tree");
    path.push(n);
    (g, end, n)
}

pub fn normalize_parity(t1: &Graph, t2: &Graph) -> Result<ParityNormalized, GraphError> {
    let mut p1 = t1.diametral_path()?;
    let mut p2 = t2.diametral_path()?;
    let (d1, d2) = (p1.len() - 1, p2.len() - 1);
    Ok(match (d1 % 2, d2 % 2) {
        (1, 0) => ParityNormalized {
            a: t1.clone(),
            b: t2.clone(),
            swapped: false,
            augmentation: Augmentation::None,
            a_path: p1,
            b_path: p2,
        },
        (0, 1) => ParityNormalized {
            a: t2.clone(),
            b: t1.clone(),
            swapped: true,
            augmentation: Augmentation::None,
            a_path: p2,
            b_path: p1,
        },
        (0, 0) => {
            let (a, attached_to, vertex) = add_leaf(t1, &mut p1);
            ParityNormalized {
                a,
                b: t2.clone(),
                swapped: false,
                augmentation: Augmentation::Leaf { factor: 0, attached_to, vertex },
                a_path: p1,
                b_path: p2,
            }
        }
        _ => {
            let (b, attached_to, vertex) = add_leaf(t2, &mut p2);
            ParityNormalized {
                a: t1.clone(),
                b,
                swapped: false,
                augmentation: Augmentation::Leaf { factor: 1, attached_to, vertex },
                a_path: p1,
                b_path: p2,
            }
        }
    })
}

/// Cop and robber coordinates in the endgame frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LemmaState {
    pub u1: Vertex,
    pub u2: Vertex,
    pub v1: Vertex,
    pub v2: Vertex,
    pub r1: Vertex,
    pub r2: Vertex,
}

impl LemmaState {
    pub fn new(c1: Coord, c2: Coord, robber: Coord) -> Self {
        LemmaState { u1: c1.0, u2: c1.1, v1: c2.0, v2: c2.1, r1: robber.0, r2: robber.1 }
    }

    pub fn c1(&self) -> Coord {
        (self.u1, self.u2)
    }

    pub fn c2(&self) -> Coord {
        (self.v1, self.v2)
    }

    pub fn robber(&self) -> Coord {
        (self.r1, self.r2)
    }

    pub fn is_capture(&self) -> bool {
        self.robber() == self.c1() || self.robber() == self.c2()
    }

    pub fn height_sum(&self, a: &RootedTree, b: &RootedTree) -> usize {
        a.height(self.u1) + a.height(self.v1) + b.height(self.u2) + b.height(self.v2)
    }

    /// `⌊(h(u1) + h(v1) + h(u2) + h(v2)) / 2⌋`, the endgame round bound.
    pub fn potential(&self, a: &RootedTree, b: &RootedTree) -> usize {
        self.height_sum(a, b) / 2
    }

    /// `d(u2, r2) ∈ {d(u1, r1), d(v1, r1)}`.
    pub fn gap_closed(&self, a: &RootedTree, b: &RootedTree) -> bool {
        let d2 = b.distance(self.u2, self.r2);
        d2 == a.distance(self.u1, self.r1) || d2 == a.distance(self.v1, self.r1)
    }

    /// The four endgame conditions.
    pub fn check(&self, a: &RootedTree, b: &RootedTree) -> Result<(), StrategyError> {
        let fail = |what: &str| Err(StrategyError::Invariant(format!("{what} fails at {self:?}")));
        if !(a.is_descendant(self.u1, self.r1) && a.is_descendant(self.v1, self.r1)) {
            return fail("r1 below u1 and v1");
        }
        if !(b.is_descendant(self.u2, self.r2) && b.is_descendant(self.v2, self.r2)) {
            return fail("r2 below u2 and v2");
        }
        if a.distance(self.v1, self.r1) != 1 + a.distance(self.u1, self.r1) {
            return fail("d(v1,r1) = 1 + d(u1,r1)");
        }
        if self.u2 != self.v2 {
            return fail("u2 = v2");
        }
        if !self.gap_closed(a, b) {
            return fail("d(u2,r2) ∈ {d(u1,r1), d(v1,r1)}");
        }
        Ok(())
    }

    fn step(tree: &RootedTree, from: Vertex, to: Vertex, state: &LemmaState) -> Result<Vertex, StrategyError> {
        tree.step_toward(from, to).map_err(|e| StrategyError::Invariant(format!("cannot descend ({e}) at {state:?}")))
    }

    /// Both cops step their `A` coordinate toward `r1`; `v1` lands on `u1`.
    fn descend_a(&self, a: &RootedTree) -> Result<LemmaState, StrategyError> {
        let u1 = Self::step(a, self.u1, self.r1, self)?;
        let v1 = Self::step(a, self.v1, self.r1, self)?;
        if v1 != self.u1 {
            return Err(StrategyError::Invariant(format!("v1 does not follow u1 when descending A at {self:?}")));
        }
        Ok(LemmaState { u1, v1, ..*self })
    }

    /// Both cops step their shared `B` coordinate toward `r2`.
    fn descend_b(&self, b: &RootedTree) -> Result<LemmaState, StrategyError> {
        let u2 = Self::step(b, self.u2, self.r2, self)?;
        let v2 = Self::step(b, self.v2, self.r2, self)?;
        Ok(LemmaState { u2, v2, ..*self })
    }
}

/// One equalising move.
pub fn phase1_move(a: &RootedTree, b: &RootedTree, s: &LemmaState) -> Result<LemmaState, StrategyError> {
    let d2 = b.distance(s.u2, s.r2);
    if d2 < a.distance(s.u1, s.r1) {
        s.descend_a(a)
    } else if d2 > a.distance(s.v1, s.r1) {
        s.descend_b(b)
    } else {
        Err(StrategyError::Invariant(format!("equalising move requested with the gap already closed at {s:?}")))
    }
}

/// The endgame reply after the robber moved from `prev` to `s.robber()`.
/// `s` holds the cop positions that were in force when she moved.
pub fn lemma1_responder(
    a: &RootedTree,
    b: &RootedTree,
    prev: Coord,
    s: &LemmaState,
) -> Result<LemmaState, StrategyError> {
    let (p1, p2) = prev;
    let robber = s.robber();
    if robber == prev {
        // robber stayed
        return if b.distance(s.u2, s.r2) == a.distance(s.v1, s.r1) { s.descend_b(b) } else { s.descend_a(a) };
    }
    if s.r2 == p2 {
        if a.parent(p1) == Some(s.r1) {
            // up in A
            if p1 == s.u1 {
                let c2 = capture_step(s.c2(), robber, s)?;
                return Ok(LemmaState { v1: c2.0, v2: c2.1, ..*s });
            }
            return s.descend_b(b);
        }
        if a.parent(s.r1) == Some(p1) {
            // down in A
            return s.descend_a(a);
        }
    } else if s.r1 == p1 {
        if b.parent(p2) == Some(s.r2) {
            // up in B
            if s.r2 == s.u2 {
                let c1 = capture_step(s.c1(), robber, s)?;
                return Ok(LemmaState { u1: c1.0, u2: c1.1, ..*s });
            }
            return s.descend_a(a);
        }
        if b.parent(s.r2) == Some(p2) {
            // down in B
            return s.descend_b(b);
        }
    }
    Err(StrategyError::Invariant(format!("robber move {prev:?} -> {robber:?} is not a single product step")))
}

/// A cop adjacent to the robber in the product steps onto her.
fn capture_step(cop: Coord, robber: Coord, s: &LemmaState) -> Result<Coord, StrategyError> {
    let differing = usize::from(cop.0 != robber.0) + usize::from(cop.1 != robber.1);
    if differing == 1 {
        Ok(robber)
    } else {
        Err(StrategyError::Invariant(format!("capturing cop {cop:?} is not adjacent to the robber at {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    /// Placed, robber position not yet seen.
    Unoriented,
    Equalize,
    Endgame,
}

/// How the `C1`/`C2` roles are assigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    /// Roles fixed at the first cop move and never revisited.
    Fixed,
    /// Roles re-chosen at every equalising move while the `A` coordinates
    /// are still on their starting vertices (the two choices are mirror
    /// images there, so the height potential is unchanged).
    #[default]
    Adaptive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoPhaseMemory {
    pub phase: Phase,
    /// Engine index (0 or 1) of the cop playing `C1`.
    pub c1: usize,
    /// Root of `A`: the `A` coordinate of `C2` when roles were assigned.
    pub root_a: Vertex,
    /// Robber vertex (flat id) when the cops last moved.
    pub last_robber: Vertex,
}

#[derive(Debug, Clone)]
pub struct TwoCopStrategy {
    product: ProductGraph,
    norm: ParityNormalized,
    orientation: Orientation,
    /// `A` rooted at `a_{m+1}` and at `a_{m+2}`
    rooted_a: [RootedTree; 2],
    rooted_b: RootedTree,
    start: [Coord; 2],
}

impl TwoCopStrategy {
    pub fn new(t1: &Graph, t2: &Graph) -> Result<Self, GraphError> {
        Self::with_orientation(t1, t2, Orientation::default())
    }

    pub fn with_orientation(t1: &Graph, t2: &Graph, orientation: Orientation) -> Result<Self, GraphError> {
        t1.require_tree()?;
        t2.require_tree()?;
        let norm = normalize_parity(t1, t2)?;
        let (m, n) = (norm.m(), norm.n());
        let a_lo = norm.a_path[m];
        let a_hi = norm.a_path[m + 1];
        let b_mid = norm.b_path[n];
        let rooted_a = [RootedTree::new(&norm.a, a_lo)?, RootedTree::new(&norm.a, a_hi)?];
        let rooted_b = RootedTree::new(&norm.b, b_mid)?;
        Ok(TwoCopStrategy {
            product: ProductGraph::new(t1, t2),
            norm,
            orientation,
            rooted_a,
            rooted_b,
            start: [(a_lo, b_mid), (a_hi, b_mid)],
        })
    }

    pub fn product(&self) -> &ProductGraph {
        &self.product
    }

    pub fn normalized(&self) -> &ParityNormalized {
        &self.norm
    }

    /// Guaranteed capture time `⌊(diam T1 + diam T2) / 2⌋`.
    pub fn capture_bound(&self) -> usize {
        self.norm.capture_bound()
    }

    /// Starting coordinates `(a_{m+1}, b_{n+1})`, `(a_{m+2}, b_{n+1})`.
    pub fn initial_placement(&self) -> [Coord; 2] {
        self.start
    }

    pub fn coords(&self, v: Vertex) -> Coord {
        let (x, y) = self.product.pair_of(v);
        if self.norm.swapped {
            (y, x)
        } else {
            (x, y)
        }
    }

    /// Flat id of real coordinates; virtual coordinates are an error.
    pub fn flat(&self, c: Coord) -> Result<Vertex, StrategyError> {
        let (na, nb) = if self.norm.swapped {
            (self.product.factor2().vertex_count(), self.product.factor1().vertex_count())
        } else {
            (self.product.factor1().vertex_count(), self.product.factor2().vertex_count())
        };
        if c.0 >= na {
            return Err(StrategyError::VirtualMove { factor: 0, vertex: c.0 });
        }
        if c.1 >= nb {
            return Err(StrategyError::VirtualMove { factor: 1, vertex: c.1 });
        }
        Ok(if self.norm.swapped { self.product.flat_of(c.1, c.0) } else { self.product.flat_of(c.0, c.1) })
    }

    pub fn rooted_a(&self, root: Vertex) -> &RootedTree {
        if root == self.start[0].0 {
            &self.rooted_a[0]
        } else {
            debug_assert_eq!(root, self.start[1].0);
            &self.rooted_a[1]
        }
    }

    pub fn rooted_b(&self) -> &RootedTree {
        &self.rooted_b
    }

    /// Assigns the `C1`/`C2` roles for the robber at `robber` and roots `A`
    /// at `C2`'s `A` coordinate. Returns the resulting endgame-frame state.
    pub fn orient_and_root(
        &self,
        memory: &mut TwoPhaseMemory,
        cops: [Coord; 2],
        robber: Coord,
    ) -> Result<LemmaState, StrategyError> {
        let a = &self.rooted_a[0];
        let d0 = a.distance(cops[0].0, robber.0);
        let d1 = a.distance(cops[1].0, robber.0);
        if d0 == d1 {
            return Err(StrategyError::Invariant(format!(
                "cops' A coordinates are equidistant from the robber: {cops:?}"
            )));
        }
        let c1 = if d0 < d1 { 0 } else { 1 };
        memory.c1 = c1;
        memory.root_a = cops[1 - c1].0;
        if memory.phase == Phase::Unoriented {
            memory.phase = Phase::Equalize;
        }
        Ok(LemmaState::new(cops[c1], cops[1 - c1], robber))
    }

    fn a_at_start(&self, cops: [Coord; 2]) -> bool {
        let mut now = [cops[0].0, cops[1].0];
        let mut start = [self.start[0].0, self.start[1].0];
        now.sort_unstable();
        start.sort_unstable();
        now == start
    }
}

impl CopStrategy for TwoCopStrategy {
    type Memory = TwoPhaseMemory;

    fn place(&self, g: &Graph, cops: usize) -> Result<(Vec<Vertex>, TwoPhaseMemory), StrategyError> {
        if g != self.product.flat() {
            return Err(StrategyError::Mismatch("two-cop strategy is bound to a different product".into()));
        }
        if cops != 2 {
            return Err(StrategyError::Mismatch(format!("two-cop strategy plays with 2 cops, not {cops}")));
        }
        let placement = vec![self.flat(self.start[0])?, self.flat(self.start[1])?];
        let memory = TwoPhaseMemory { phase: Phase::Unoriented, c1: 0, root_a: self.start[1].0, last_robber: 0 };
        Ok((placement, memory))
    }

    fn respond(&self, _: &Graph, state: &GameState, memory: &mut TwoPhaseMemory) -> Result<Vec<Vertex>, StrategyError> {
        let robber = self.coords(state.robber());
        let cops = [self.coords(state.cops[0]), self.coords(state.cops[1])];
        let reorient = match memory.phase {
            Phase::Unoriented => true,
            Phase::Equalize => self.orientation == Orientation::Adaptive && self.a_at_start(cops),
            Phase::Endgame => false,
        };
        let s = if reorient {
            self.orient_and_root(memory, cops, robber)?
        } else {
            LemmaState::new(cops[memory.c1], cops[1 - memory.c1], robber)
        };
        let a = self.rooted_a(memory.root_a);
        let b = &self.rooted_b;
        let before = s.height_sum(a, b);

        let next = match memory.phase {
            Phase::Equalize if s.gap_closed(a, b) => {
                // the robber's own move closed the gap: enter the endgame
                // as if she had stood still in a conforming position
                s.check(a, b)?;
                memory.phase = Phase::Endgame;
                lemma1_responder(a, b, robber, &s)?
            }
            Phase::Equalize => phase1_move(a, b, &s)?,
            Phase::Endgame => lemma1_responder(a, b, self.coords(memory.last_robber), &s)?,
            Phase::Unoriented => unreachable!("oriented above"),
        };
        if !next.is_capture() {
            let after = next.height_sum(a, b);
            if after + 2 > before {
                return Err(StrategyError::Invariant(format!(
                    "height sum went {before} -> {after} (needs a drop of 2) at {s:?} -> {next:?}"
                )));
            }
            match memory.phase {
                Phase::Equalize if next.gap_closed(a, b) => {
                    next.check(a, b)?;
                    memory.phase = Phase::Endgame;
                }
                Phase::Endgame => next.check(a, b)?,
                _ => {}
            }
        }
        memory.last_robber = state.robber();
        let mut out = vec![0; 2];
        out[memory.c1] = self.flat(next.c1())?;
        out[1 - memory.c1] = self.flat(next.c2())?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{best_response_length, GameConfig, MoveOrder};
    use crate::generators::path_graph;
    use crate::value::Value;

    fn path(n: usize) -> Graph {
        path_graph(n).unwrap()
    }

    #[test]
    fn parity_cases() {
        let n = normalize_parity(&path(4), &path(3)).unwrap();
        assert!(!n.swapped && n.augmentation == Augmentation::None);
        let n = normalize_parity(&path(3), &path(4)).unwrap();
        assert!(n.swapped && n.augmentation == Augmentation::None);
        let n = normalize_parity(&path(3), &path(3)).unwrap();
        assert_eq!(n.a.vertex_count(), 4);
        assert_eq!(n.a.diameter(), 3);
        assert!(matches!(n.augmentation, Augmentation::Leaf { factor: 0, vertex: 3, .. }));
        // ⌊(3 + 2) / 2⌋ = 2 = ⌊(2 + 2) / 2⌋
        assert_eq!(n.capture_bound(), 2);
        let n = normalize_parity(&path(2), &path(4)).unwrap();
        assert!(matches!(n.augmentation, Augmentation::Leaf { factor: 1, .. }));
        assert_eq!(n.b.diameter(), 4);
        assert_eq!(n.capture_bound(), 2);
    }

    #[test]
    fn initial_placements() {
        // path(4) (m = 1) x path(3) (n = 1): (a2, b2), (a3, b2)
        let s = TwoCopStrategy::new(&path(4), &path(3)).unwrap();
        let p = s.normalized();
        let [c0, c1] = s.initial_placement();
        assert_eq!(c0, (p.a_path[1], p.b_path[1]));
        assert_eq!(c1, (p.a_path[2], p.b_path[1]));
        // path(2) (m = 0) x path(3): (a1, b2), (a2, b2)
        let s = TwoCopStrategy::new(&path(2), &path(3)).unwrap();
        let p = s.normalized();
        assert_eq!(s.initial_placement(), [(p.a_path[0], p.b_path[1]), (p.a_path[1], p.b_path[1])]);
    }

    #[test]
    fn orientation_follows_the_robber() {
        let s = TwoCopStrategy::new(&path(4), &path(3)).unwrap();
        let a_path = s.normalized().a_path.clone();
        let start = s.initial_placement();
        let mut mem = TwoPhaseMemory { phase: Phase::Unoriented, c1: 0, root_a: 0, last_robber: 0 };
        let st = s.orient_and_root(&mut mem, start, (a_path[0], 0)).unwrap();
        assert_eq!(st.u1, a_path[1]);
        assert_eq!(mem.root_a, a_path[2]);
        let st = s.orient_and_root(&mut mem, start, (a_path[3], 0)).unwrap();
        assert_eq!(st.u1, a_path[2]);
        assert_eq!(mem.c1, 1);
        assert_eq!(mem.phase, Phase::Equalize);
    }

    /// A: path 0..=7 (d = 7, m = 3) rooted at 4 (v1); B: path 0..=8 (d = 8) rooted at 4.
    fn long_frame() -> (RootedTree, RootedTree) {
        (RootedTree::new(&path(8), 4).unwrap(), RootedTree::new(&path(9), 4).unwrap())
    }

    #[test]
    fn equalising_moves() {
        let (a, b) = long_frame();
        // d(u1,r1) = 3, d(u2,r2) = 1: descend in A
        let s = LemmaState { u1: 3, v1: 4, u2: 4, v2: 4, r1: 0, r2: 3 };
        let t = phase1_move(&a, &b, &s).unwrap();
        assert_eq!((t.u1, t.v1, t.u2), (2, 3, 4));
        assert!(t.height_sum(&a, &b) + 2 <= s.height_sum(&a, &b));
        // d(v1,r1) = 1, d(u2,r2) = 4: descend in B
        let s = LemmaState { u1: 3, v1: 4, u2: 4, v2: 4, r1: 3, r2: 0 };
        let t = phase1_move(&a, &b, &s).unwrap();
        assert_eq!((t.u1, t.u2, t.v2), (3, 3, 3));
        // closed gap is a contract violation
        let s = LemmaState { u1: 3, v1: 4, u2: 4, v2: 4, r1: 2, r2: 3 };
        assert!(phase1_move(&a, &b, &s).is_err());
    }

    #[test]
    fn responder_cases() {
        let (a, b) = long_frame();
        // conforming state: d(u1,r1) = 1, d(v1,r1) = 2, d(u2,r2) = 2
        let s0 = LemmaState { u1: 3, v1: 4, u2: 4, v2: 4, r1: 2, r2: 2 };
        s0.check(&a, &b).unwrap();
        let prev = s0.robber();
        // (b) robber steps down in A
        let t = lemma1_responder(&a, &b, prev, &LemmaState { r1: 1, ..s0 }).unwrap();
        assert_eq!((t.u1, t.v1), (2, 3));
        t.check(&a, &b).unwrap();
        // (d) robber steps down in B
        let t = lemma1_responder(&a, &b, prev, &LemmaState { r2: 1, ..s0 }).unwrap();
        assert_eq!(t.u2, 3);
        t.check(&a, &b).unwrap();
        // (c) robber steps up in B but not onto u2: descend in A
        let t = lemma1_responder(&a, &b, prev, &LemmaState { r2: 3, ..s0 }).unwrap();
        assert_eq!((t.u1, t.v1), (2, 3));
        t.check(&a, &b).unwrap();
        // (e) robber stays with d(u2,r2) = d(v1,r1): descend in B
        let t = lemma1_responder(&a, &b, prev, &s0).unwrap();
        assert_eq!(t.u2, 3);
        t.check(&a, &b).unwrap();
        // (a) robber steps up in A off r1 = u1: C2 captures
        let s1 = LemmaState { u1: 3, v1: 4, u2: 4, v2: 4, r1: 3, r2: 3 };
        s1.check(&a, &b).unwrap();
        let t = lemma1_responder(&a, &b, s1.robber(), &LemmaState { r1: 4, ..s1 }).unwrap();
        assert!(t.is_capture());
        assert_eq!(t.c2(), (4, 3));
        // (c) robber steps up in B onto u2: C1 captures
        let s2 = LemmaState { u1: 3, v1: 4, u2: 4, v2: 4, r1: 2, r2: 3 };
        s2.check(&a, &b).unwrap();
        let t = lemma1_responder(&a, &b, s2.robber(), &LemmaState { r2: 4, ..s2 }).unwrap();
        assert!(t.is_capture());
        assert_eq!(t.c1(), (2, 4));
    }

    #[test]
    fn zero_potential_means_capture() {
        // every conforming state with potential 0 is already a capture
        let trees = [(path(2), 1), (path(3), 1), (path(4), 2), (crate::generators::star_graph(3).unwrap(), 0)];
        let mut seen = 0;
        for (ta, ra) in &trees {
            for (tb, rb) in &trees {
                let a = RootedTree::new(ta, *ra).unwrap();
                let b = RootedTree::new(tb, *rb).unwrap();
                let (na, nb) = (ta.vertex_count(), tb.vertex_count());
                for (u1, v1, r1) in (0..na).flat_map(|x| (0..na).flat_map(move |y| (0..na).map(move |z| (x, y, z)))) {
                    for (u2, r2) in (0..nb).flat_map(|x| (0..nb).map(move |y| (x, y))) {
                        let s = LemmaState { u1, v1, u2, v2: u2, r1, r2 };
                        if s.check(&a, &b).is_ok() && s.potential(&a, &b) == 0 {
                            seen += 1;
                            assert!(s.is_capture(), "{s:?}");
                        }
                    }
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn small_grid_lengths() {
        for (m, n, expect) in [(2, 2, 1), (4, 3, 2), (3, 3, 2), (2, 5, 2)] {
            let (t1, t2) = (path(m), path(n));
            let s = TwoCopStrategy::new(&t1, &t2).unwrap();
            let g = s.product().flat().clone();
            for order in [MoveOrder::RobberFirst, MoveOrder::CopsFirst] {
                let config = GameConfig::for_graph(&g, 2, order).unwrap();
                assert_eq!(best_response_length(&g, &config, &s).unwrap(), Value::Capture(expect), "{m}x{n} {order}");
            }
        }
    }

    #[test]
    fn endgame_potential_bounds_remaining_rounds() {
        use crate::game::{advance_round, GameState, RobberStrategy, Side};
        use crate::solver::{solve, OptimalRobber};

        for (m, n) in [(4, 3), (5, 5), (6, 3), (2, 7)] {
            let s = TwoCopStrategy::new(&path(m), &path(n)).unwrap();
            let g = s.product().flat().clone();
            let config = GameConfig::for_graph(&g, 2, MoveOrder::RobberFirst).unwrap();
            let res = solve(&g, 2, MoveOrder::RobberFirst).unwrap();
            let robber = OptimalRobber::new(&res);
            let (cops, mut mem) = s.place(&g, 2).unwrap();
            let (r, mut rmem) = robber.place(&g, &cops).unwrap();
            let mut state = GameState { cops, robber: Some(r), round: 0, to_move: Side::Robber };
            // (round, potential) at every endgame position with the robber to move
            let mut marks = Vec::new();
            while !state.is_captured() {
                advance_round(&g, &config, &mut state, &s, &mut mem, &robber, &mut rmem).unwrap();
                if !state.is_captured() && mem.phase == Phase::Endgame {
                    let c = [s.coords(state.cops[0]), s.coords(state.cops[1])];
                    let st = LemmaState::new(c[mem.c1], c[1 - mem.c1], s.coords(state.robber()));
                    marks.push((state.round, st.potential(s.rooted_a(mem.root_a), s.rooted_b())));
                }
            }
            assert!(state.round <= s.capture_bound());
            assert!(!marks.is_empty(), "{m}x{n}: endgame never reached");
            for (t, p) in marks {
                assert!(state.round - t <= p, "{m}x{n}: caught at {}, potential {p} at round {t}", state.round);
            }
        }
    }
}
