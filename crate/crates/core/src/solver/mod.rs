//! Exact k-capture time by retrograde analysis.
//!
//! Positions are keyed by a sorted cop multiset and the robber vertex (the
//! cops are interchangeable). Two layers are stored for every uncaptured
//! position `(c, r)`:
//!
//! * robber layer `R(c, r) = max over r' ∈ N[r] \ c of K(c, r')`
//! * cop layer `K(c, r) = min over c' ∈ Π N[c_i] of (1 if r ∈ c' else 1 + R(c', r))`
//!
//! Under robber-first play `R` is the number of rounds left with the robber
//! about to open a round, and the capture time is `min_c max_r R(c, r)`.
//! Under cops-first play `K` is the number of rounds left with the cops about
//! to open a round, and the capture time is `min_c max_r K(c, r)`; `R` is then
//! the robber-to-move value at the end of a round, counting the rounds still
//! to come.
//!
//! The computation seeds every position where a cop is adjacent to the
//! robber (`K = 1`), then propagates backwards through a FIFO queue, which
//! visits positions in nondecreasing value order. A robber position resolves
//! when its last successor resolves (that successor carries the maximum); a
//! cop position resolves at its first resolved successor (the minimum).
//! Anything never resolved is escape.

mod naive;
mod players;

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use crate::game::MoveOrder;
use crate::graph::{Graph, Vertex};
pub use crate::value::Value;

pub use naive::{naive_value_iteration, naive_value_iteration_with_budget, OrderedValues};
pub use players::{OptimalCops, OptimalRobber};

/// Default cap on state-successor pairs examined by [`solve`].
pub const DEFAULT_STATE_BUDGET: usize = 50_000_000;

const UNRESOLVED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("at least one cop is required")]
    NoCops,
    #[error("state budget exceeded: {required} state-successor pairs needed, budget {budget}")]
    Budget { required: usize, budget: usize },
    #[error("the robber escapes with {cops} cop(s); there is no capturing strategy")]
    NoStrategy { cops: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: usize,
    /// Keep the value of every position in the order it was resolved.
    pub record_order: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_STATE_BUDGET, record_order: false }
    }
}

/// Sorted k-multisets of `0..n` with dense ids in lexicographic order.
#[derive(Debug, Clone)]
pub(crate) struct CopSets {
    n: usize,
    k: usize,
    tuples: Vec<Vertex>,
    /// mixed-radix index of any ordered tuple -> id of its sorted multiset
    rank: Vec<u32>,
}

impl CopSets {
    fn new(n: usize, k: usize) -> Self {
        let mut tuples = Vec::new();
        let mut current = vec![0; k];
        loop {
            tuples.extend_from_slice(&current);
            // next nondecreasing tuple
            let Some(pos) = (0..k).rev().find(|&i| current[i] + 1 < n) else { break };
            let v = current[pos] + 1;
            current[pos..].iter_mut().for_each(|x| *x = v);
        }
        let count = tuples.len() / k;
        let mut rank = vec![0u32; n.pow(k as u32)];
        let mut sets = CopSets { n, k, tuples, rank: Vec::new() };
        let ids: Vec<(usize, u32)> = (0..count).map(|id| (sets.index_of(sets.tuple(id)), id as u32)).collect();
        for (idx, id) in ids {
            rank[idx] = id;
        }
        // fill non-sorted ordered tuples
        let mut buf = vec![0; k];
        for idx in 0..rank.len() {
            let mut rest = idx;
            for slot in buf.iter_mut().rev() {
                *slot = rest % n;
                rest /= n;
            }
            let mut sorted = buf.clone();
            sorted.sort_unstable();
            rank[idx] = rank[sets.index_of(&sorted)];
        }
        sets.rank = rank;
        sets
    }

    fn index_of(&self, tuple: &[Vertex]) -> usize {
        tuple.iter().fold(0, |acc, &v| acc * self.n + v)
    }

    pub(crate) fn count(&self) -> usize {
        self.tuples.len() / self.k
    }

    pub(crate) fn tuple(&self, id: usize) -> &[Vertex] {
        &self.tuples[id * self.k..(id + 1) * self.k]
    }

    /// Id of the multiset of `cops`, in any order.
    pub(crate) fn id_of(&self, cops: &[Vertex]) -> usize {
        self.rank[self.index_of(cops)] as usize
    }
}

/// Values of every uncaptured position, both layers.
#[derive(Debug, Clone)]
pub struct ValueTable {
    graph: Graph,
    order: MoveOrder,
    sets: CopSets,
    robber_layer: Vec<u32>,
    cop_layer: Vec<u32>,
}

fn decode(raw: u32) -> Value {
    if raw == UNRESOLVED {
        Value::Escape
    } else {
        Value::Capture(raw)
    }
}

impl ValueTable {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cops(&self) -> usize {
        self.sets.k
    }

    pub fn order(&self) -> MoveOrder {
        self.order
    }

    fn slot(&self, cops: &[Vertex], r: Vertex) -> usize {
        self.sets.id_of(cops) * self.sets.n + r
    }

    /// Rounds left with the robber to move at `(cops, r)`; 0 if she is caught.
    pub fn robber_to_move(&self, cops: &[Vertex], r: Vertex) -> Value {
        if cops.contains(&r) {
            Value::Capture(0)
        } else {
            decode(self.robber_layer[self.slot(cops, r)])
        }
    }

    /// Rounds left with the cops to move at `(cops, r)`; 0 if she is caught.
    pub fn cops_to_move(&self, cops: &[Vertex], r: Vertex) -> Value {
        if cops.contains(&r) {
            Value::Capture(0)
        } else {
            decode(self.cop_layer[self.slot(cops, r)])
        }
    }

    /// Value of the game right after placement at `(cops, r)`.
    pub fn after_placement(&self, cops: &[Vertex], r: Vertex) -> Value {
        match self.order {
            MoveOrder::RobberFirst => self.robber_to_move(cops, r),
            MoveOrder::CopsFirst => self.cops_to_move(cops, r),
        }
    }

    /// Robber-to-move entries `(sorted cops, r, value)` of uncaptured
    /// positions, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&[Vertex], Vertex, Value)> + '_ {
        let n = self.sets.n;
        (0..self.sets.count()).flat_map(move |id| {
            let cops = self.sets.tuple(id);
            (0..n).filter(move |r| !cops.contains(r)).map(move |r| (cops, r, decode(self.robber_layer[id * n + r])))
        })
    }

    /// Lines `c1 … ck r v` with `v` a round count or `ESC`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (cops, r, v) in self.entries() {
            for c in cops {
                write!(out, "{c} ").unwrap();
            }
            writeln!(out, "{r} {v}").unwrap();
        }
        out
    }

    /// First position where the two tables disagree in either layer, if any.
    pub fn first_difference(&self, other: &ValueTable) -> Option<String> {
        if self.graph != other.graph || self.sets.k != other.sets.k || self.order != other.order {
            return Some("tables are for different games".into());
        }
        let n = self.sets.n;
        for id in 0..self.sets.count() {
            let cops = self.sets.tuple(id);
            for r in (0..n).filter(|r| !cops.contains(r)) {
                let (a, b) = (self.robber_to_move(cops, r), other.robber_to_move(cops, r));
                if a != b {
                    return Some(format!("robber to move at cops {cops:?}, robber {r}: {a} vs {b}"));
                }
                let (a, b) = (self.cops_to_move(cops, r), other.cops_to_move(cops, r));
                if a != b {
                    return Some(format!("cops to move at cops {cops:?}, robber {r}: {a} vs {b}"));
                }
            }
        }
        None
    }

    /// min over placements of max over robber replies, and the argmin set.
    fn placement_optimum(&self) -> (Value, Vec<Vec<Vertex>>) {
        let n = self.sets.n;
        let mut best = Value::Escape;
        let mut central = Vec::new();
        for id in 0..self.sets.count() {
            let cops = self.sets.tuple(id);
            let score = (0..n).map(|r| self.after_placement(cops, r)).max().unwrap_or(Value::Capture(0));
            if score < best {
                best = score;
                central.clear();
            }
            if score == best && best.is_finite() {
                central.push(cops.to_vec());
            }
        }
        (best, central)
    }
}

#[derive(Debug, Clone, Default)]
pub struct SolveStats {
    /// Uncaptured positions per layer.
    pub states: usize,
    /// State-successor pairs the propagation may touch.
    pub pairs: usize,
    /// Values in resolution order, when requested.
    pub order_log: Option<Vec<u32>>,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub capture_time: Value,
    /// Sorted cop tuples achieving `capture_time`, lexicographic; empty on escape.
    pub central_tuples: Vec<Vec<Vertex>>,
    pub table: ValueTable,
    pub stats: SolveStats,
}

impl SolveResult {
    pub(crate) fn from_table(table: ValueTable, stats: SolveStats) -> Self {
        let (capture_time, central_tuples) = table.placement_optimum();
        SolveResult { capture_time, central_tuples, table, stats }
    }
}

pub fn solve(g: &Graph, cops: usize, order: MoveOrder) -> Result<SolveResult, SolveError> {
    solve_with(g, cops, order, SolveOptions::default())
}

pub fn solve_with(g: &Graph, k: usize, order: MoveOrder, options: SolveOptions) -> Result<SolveResult, SolveError> {
    if k == 0 {
        return Err(SolveError::NoCops);
    }
    let n = g.vertex_count();
    let raw_states = n.checked_pow(k as u32 + 1).unwrap_or(usize::MAX);
    if raw_states > options.budget {
        return Err(SolveError::Budget { required: raw_states, budget: options.budget });
    }
    let sets = CopSets::new(n, k);
    let set_count = sets.count();
    let closed: Vec<Vec<Vertex>> = (0..n).map(|v| g.closed_neighbors(v)).collect();

    // one-move neighbourhoods of cop multisets; the relation is symmetric,
    // so these double as predecessor lists
    let mut moves: Vec<Vec<u32>> = Vec::with_capacity(set_count);
    let mut buf = vec![0; k];
    for id in 0..set_count {
        let tuple = sets.tuple(id).to_vec();
        let mut out = Vec::new();
        let mut digits = vec![0usize; k];
        'outer: loop {
            for i in 0..k {
                buf[i] = closed[tuple[i]][digits[i]];
            }
            out.push(sets.id_of(&buf) as u32);
            for i in (0..k).rev() {
                digits[i] += 1;
                if digits[i] < closed[tuple[i]].len() {
                    continue 'outer;
                }
                digits[i] = 0;
            }
            break;
        }
        out.sort_unstable();
        out.dedup();
        moves.push(out);
    }
    let closed_total: usize = closed.iter().map(Vec::len).sum();
    let pairs = moves.iter().map(Vec::len).sum::<usize>() * n + set_count * closed_total;
    if pairs > options.budget {
        return Err(SolveError::Budget { required: pairs, budget: options.budget });
    }

    let mut robber_layer = vec![UNRESOLVED; set_count * n];
    let mut cop_layer = vec![UNRESOLVED; set_count * n];
    let mut open = vec![0u32; set_count * n];
    let mut queue: VecDeque<(bool, usize)> = VecDeque::new();
    let mut states = 0;
    for id in 0..set_count {
        let cops = sets.tuple(id);
        for r in 0..n {
            if cops.contains(&r) {
                continue;
            }
            states += 1;
            let slot = id * n + r;
            open[slot] = closed[r].iter().filter(|v| !cops.contains(v)).count() as u32;
            if cops.iter().any(|&c| g.is_adjacent(c, r)) {
                cop_layer[slot] = 1;
                queue.push_back((true, slot));
            }
        }
    }

    let mut log = options.record_order.then(Vec::new);
    while let Some((is_cop_layer, slot)) = queue.pop_front() {
        let (id, r) = (slot / n, slot % n);
        let cops = sets.tuple(id);
        if is_cop_layer {
            let t = cop_layer[slot];
            if let Some(log) = log.as_mut() {
                log.push(t);
            }
            for &prev in &closed[r] {
                if cops.contains(&prev) {
                    continue;
                }
                let p = id * n + prev;
                open[p] -= 1;
                if open[p] == 0 {
                    robber_layer[p] = t;
                    queue.push_back((false, p));
                }
            }
        } else {
            let t = robber_layer[slot];
            if let Some(log) = log.as_mut() {
                log.push(t);
            }
            for &prev in &moves[id] {
                let prev = prev as usize;
                if sets.tuple(prev).contains(&r) {
                    continue;
                }
                let p = prev * n + r;
                if cop_layer[p] == UNRESOLVED {
                    cop_layer[p] = t + 1;
                    queue.push_back((true, p));
                }
            }
        }
    }

    let table = ValueTable { graph: g.clone(), order, sets, robber_layer, cop_layer };
    Ok(SolveResult::from_table(table, SolveStats { states, pairs, order_log: log }))
}

/// Capture times under both move orders: `(robber-first, cops-first)`.
pub fn capture_time_both_orders(g: &Graph, cops: usize) -> Result<(Value, Value), SolveError> {
    Ok((solve(g, cops, MoveOrder::RobberFirst)?.capture_time, solve(g, cops, MoveOrder::CopsFirst)?.capture_time))
}
