//! Reference solver: plain value iteration over ordered cop tuples.
//!
//! Every value starts at escape and the move-order recurrence is re-applied
//! to all positions until a full pass changes nothing. Cop tuples are not
//! canonicalised, so permutation invariance can be checked on the output.

use super::{CopSets, SolveError, SolveResult, SolveStats, ValueTable, UNRESOLVED};
use crate::game::{legal_cop_moves, MoveOrder};
use crate::graph::{Graph, Vertex};
use crate::value::Value;

/// Default cap on ordered positions `|V|^(k+1)` for the reference solver.
pub const NAIVE_STATE_BUDGET: usize = 500_000;

/// Values over ordered cop tuples, indexed by the mixed-radix tuple index.
#[derive(Debug, Clone)]
pub struct OrderedValues {
    n: usize,
    k: usize,
    /// Robber-first: value with the robber to move. Cops-first: value with
    /// the cops to move.
    values: Vec<Value>,
}

impl OrderedValues {
    fn index(&self, cops: &[Vertex], r: Vertex) -> usize {
        cops.iter().fold(0, |acc, &c| acc * self.n + c) * self.n + r
    }

    pub fn get(&self, cops: &[Vertex], r: Vertex) -> Value {
        if cops.contains(&r) {
            Value::Capture(0)
        } else {
            self.values[self.index(cops, r)]
        }
    }

    pub fn cops(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

fn one_more(v: Value) -> Value {
    match v {
        Value::Escape => Value::Escape,
        v => v.delayed(1),
    }
}

fn ordered_tuples(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    (0..n.pow(k as u32))
        .map(|mut idx| {
            let mut t = vec![0; k];
            for slot in t.iter_mut().rev() {
                *slot = idx % n;
                idx /= n;
            }
            t
        })
        .collect()
}

pub fn naive_value_iteration(
    g: &Graph,
    cops: usize,
    order: MoveOrder,
) -> Result<(SolveResult, OrderedValues), SolveError> {
    naive_value_iteration_with_budget(g, cops, order, NAIVE_STATE_BUDGET)
}

pub fn naive_value_iteration_with_budget(
    g: &Graph,
    k: usize,
    order: MoveOrder,
    budget: usize,
) -> Result<(SolveResult, OrderedValues), SolveError> {
    if k == 0 {
        return Err(SolveError::NoCops);
    }
    let n = g.vertex_count();
    let required = n.checked_pow(k as u32 + 1).unwrap_or(usize::MAX);
    if required > budget {
        return Err(SolveError::Budget { required, budget });
    }
    let tuples = ordered_tuples(n, k);
    let moves: Vec<Vec<Vec<Vertex>>> = tuples.iter().map(|t| legal_cop_moves(g, t)).collect();
    let closed: Vec<Vec<Vertex>> = (0..n).map(|v| g.closed_neighbors(v)).collect();
    let mut current = OrderedValues { n, k, values: vec![Value::Escape; n * tuples.len()] };

    loop {
        let mut next = current.clone();
        for (ti, cops) in tuples.iter().enumerate() {
            for r in 0..n {
                if cops.contains(&r) {
                    continue;
                }
                let value =
                    match order {
                        // V(c,r) = max_{r'} min_{c'} {1 if r' ∈ c' else 1 + V(c',r')}
                        MoveOrder::RobberFirst => closed[r]
                            .iter()
                            .filter(|v| !cops.contains(v))
                            .map(|&r2| {
                                moves[ti]
                                    .iter()
                                    .map(|c2| {
                                        if c2.contains(&r2) {
                                            Value::Capture(1)
                                        } else {
                                            one_more(current.get(c2, r2))
                                        }
                                    })
                                    .min()
                                    .expect("staying is always a move")
                            })
                            .max()
                            .expect("staying is always a move"),
                        // W(c,r) = min_{c'} {1 if r ∈ c' else 1 + max_{r'} W(c',r')}
                        MoveOrder::CopsFirst => moves[ti]
                            .iter()
                            .map(|c2| {
                                if c2.contains(&r) {
                                    Value::Capture(1)
                                } else {
                                    one_more(
                                        closed[r]
                                            .iter()
                                            .filter(|v| !c2.contains(v))
                                            .map(|&r2| current.get(c2, r2))
                                            .max()
                                            .expect("staying is always a move"),
                                    )
                                }
                            })
                            .min()
                            .expect("staying is always a move"),
                    };
                let idx = ti * n + r;
                next.values[idx] = value;
            }
        }
        if next.values == current.values {
            break;
        }
        current = next;
    }

    // capture time straight from the ordered values
    let mut best = Value::Escape;
    let mut central: Vec<Vec<Vertex>> = Vec::new();
    for cops in &tuples {
        let score = (0..n).map(|r| current.get(cops, r)).max().unwrap_or(Value::Capture(0));
        if score < best {
            best = score;
            central.clear();
        }
        if score == best && best.is_finite() {
            let mut sorted = cops.clone();
            sorted.sort_unstable();
            central.push(sorted);
        }
    }
    central.sort();
    central.dedup();

    let table = project(g, k, order, &current, &moves, &tuples, &closed);
    let mut result = SolveResult::from_table(table, SolveStats { states: tuples.len() * n, pairs: 0, order_log: None });
    result.capture_time = best;
    result.central_tuples = central;
    Ok((result, current))
}

/// Both layers over sorted multisets, derived from the ordered values.
fn project(
    g: &Graph,
    k: usize,
    order: MoveOrder,
    values: &OrderedValues,
    moves: &[Vec<Vec<Vertex>>],
    tuples: &[Vec<Vertex>],
    closed: &[Vec<Vertex>],
) -> ValueTable {
    let n = values.n;
    let sets = CopSets::new(n, k);
    let encode = |v: Value| v.rounds().unwrap_or(UNRESOLVED);
    let mut robber_layer = vec![UNRESOLVED; sets.count() * n];
    let mut cop_layer = vec![UNRESOLVED; sets.count() * n];
    for id in 0..sets.count() {
        let cops = sets.tuple(id);
        // `tuples` is in mixed-radix order
        let ti = cops.iter().fold(0, |acc, &c| acc * n + c);
        debug_assert_eq!(tuples[ti], cops);
        for r in 0..n {
            if cops.contains(&r) {
                continue;
            }
            let (robber, cop) = match order {
                MoveOrder::RobberFirst => {
                    let cop = moves[ti]
                        .iter()
                        .map(|c2| if c2.contains(&r) { Value::Capture(1) } else { one_more(values.get(c2, r)) })
                        .min()
                        .expect("staying is always a move");
                    (values.get(cops, r), cop)
                }
                MoveOrder::CopsFirst => {
                    let robber = closed[r]
                        .iter()
                        .filter(|v| !cops.contains(v))
                        .map(|&r2| values.get(cops, r2))
                        .max()
                        .expect("staying is always a move");
                    (robber, values.get(cops, r))
                }
            };
            robber_layer[id * n + r] = encode(robber);
            cop_layer[id * n + r] = encode(cop);
        }
    }
    ValueTable { graph: g.clone(), order, sets, robber_layer, cop_layer }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_graph, path_graph};

    #[test]
    fn small_examples() {
        let (res, _) = naive_value_iteration(&path_graph(4).unwrap(), 1, MoveOrder::RobberFirst).unwrap();
        assert_eq!(res.capture_time, Value::Capture(2));
        let (res, _) = naive_value_iteration(&path_graph(2).unwrap(), 1, MoveOrder::RobberFirst).unwrap();
        assert_eq!(res.capture_time, Value::Capture(1));
        let (res, _) = naive_value_iteration(&cycle_graph(4).unwrap(), 1, MoveOrder::CopsFirst).unwrap();
        assert_eq!(res.capture_time, Value::Escape);
    }

    #[test]
    fn permutation_invariant_on_ordered_tuples() {
        let g = cycle_graph(5).unwrap();
        let (_, values) = naive_value_iteration(&g, 2, MoveOrder::RobberFirst).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                for r in 0..5 {
                    assert_eq!(values.get(&[a, b], r), values.get(&[b, a], r));
                }
            }
        }
    }

    #[test]
    fn budget() {
        let g = path_graph(10).unwrap();
        assert!(matches!(
            naive_value_iteration_with_budget(&g, 2, MoveOrder::RobberFirst, 999),
            Err(SolveError::Budget { .. })
        ));
    }
}
