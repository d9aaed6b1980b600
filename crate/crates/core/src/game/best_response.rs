//! Longest game a robber can force against a fixed cop strategy.
//!
//! With the cops deterministic, the robber faces a one-player longest-path
//! problem over (cop positions, robber position, cop memory). An iterative
//! DFS with memoisation evaluates it; reaching a node that is still on the
//! DFS stack means the robber can cycle forever, which is escape.

use std::collections::HashMap;

use super::{check_cops, CopStrategy, GameConfig, GameError, GameState, MoveOrder, Side};
use crate::graph::{Graph, Vertex};
use crate::solver::DEFAULT_STATE_BUDGET;
use crate::value::Value;

type Node<M> = (Vec<Vertex>, Vertex, M);

enum Mark {
    OnStack,
    Done(Value),
}

enum Step<M> {
    /// Game over after this many more rounds.
    Over(u32),
    /// Continue from `node` after `rounds` more rounds.
    Next(u32, Node<M>),
}

struct Frame<M> {
    node: Node<M>,
    choices: Vec<Vertex>,
    next_choice: usize,
    best: Value,
    pending: u32,
}

pub fn best_response_length<C: CopStrategy>(g: &Graph, config: &GameConfig, cops: &C) -> Result<Value, GameError> {
    best_response_length_with_budget(g, config, cops, DEFAULT_STATE_BUDGET)
}

/// [`best_response_length`] with an explicit cap on explored nodes.
pub fn best_response_length_with_budget<C: CopStrategy>(
    g: &Graph,
    config: &GameConfig,
    cops: &C,
    budget: usize,
) -> Result<Value, GameError> {
    let strategy_err = |source| GameError::Strategy { side: Side::Cops, source };
    let (start, memory) = cops.place(g, config.cops).map_err(strategy_err)?;
    if start.len() != config.cops {
        return Err(GameError::WrongCopCount { expected: config.cops, got: start.len() });
    }
    let mut search = Search { g, cops, order: config.order, memo: HashMap::new(), budget };
    let mut worst = Value::Capture(0);
    for r in 0..g.vertex_count() {
        if start.contains(&r) {
            continue;
        }
        let value = match config.order {
            MoveOrder::RobberFirst => search.value((start.clone(), r, memory.clone()))?,
            MoveOrder::CopsFirst => match search.cops_reply(&start, r, memory.clone())? {
                Step::Over(t) => Value::Capture(t),
                Step::Next(t, node) => match search.value(node)? {
                    Value::Escape => Value::Escape,
                    v => v.delayed(t),
                },
            },
        };
        worst = worst.max(value);
        if worst == Value::Escape {
            break;
        }
    }
    Ok(worst)
}

struct Search<'a, C: CopStrategy> {
    g: &'a Graph,
    cops: &'a C,
    order: MoveOrder,
    memo: HashMap<Node<C::Memory>, Mark>,
    budget: usize,
}

impl<C: CopStrategy> Search<'_, C> {
    /// Cops answer a robber now standing on `robber`; one round elapses.
    fn cops_reply(&self, cops: &[Vertex], robber: Vertex, mut memory: C::Memory) -> Result<Step<C::Memory>, GameError> {
        let state = GameState { cops: cops.to_vec(), robber: Some(robber), round: 1, to_move: Side::Cops };
        let next = self
            .cops
            .respond(self.g, &state, &mut memory)
            .map_err(|source| GameError::Strategy { side: Side::Cops, source })?;
        check_cops(self.g, state.round, cops, &next)?;
        if next.contains(&robber) {
            Ok(Step::Over(1))
        } else {
            Ok(Step::Next(1, (next, robber, memory)))
        }
    }

    /// The robber (to move at `node`) steps to `target`.
    fn transition(&self, node: &Node<C::Memory>, target: Vertex) -> Result<Step<C::Memory>, GameError> {
        let (cops, _, memory) = node;
        if cops.contains(&target) {
            // robber-first: the step opens a round; cops-first: it closes one
            return Ok(Step::Over(match self.order {
                MoveOrder::RobberFirst => 1,
                MoveOrder::CopsFirst => 0,
            }));
        }
        self.cops_reply(cops, target, memory.clone())
    }

    fn value(&mut self, root: Node<C::Memory>) -> Result<Value, GameError> {
        if let Some(Mark::Done(v)) = self.memo.get(&root) {
            return Ok(*v);
        }
        let mut stack = vec![self.open(root)?];
        loop {
            let frame = stack.last_mut().expect("loop exits when the root closes");
            if frame.best != Value::Escape && frame.next_choice < frame.choices.len() {
                let target = frame.choices[frame.next_choice];
                frame.next_choice += 1;
                match self.transition(&frame.node, target)? {
                    Step::Over(t) => frame.best = frame.best.max(Value::Capture(t)),
                    Step::Next(t, child) => match self.memo.get(&child) {
                        Some(Mark::Done(Value::Escape)) | Some(Mark::OnStack) => frame.best = Value::Escape,
                        Some(Mark::Done(v)) => frame.best = frame.best.max(v.delayed(t)),
                        None => {
                            frame.pending = t;
                            let child = self.open(child)?;
                            stack.push(child);
                        }
                    },
                }
                continue;
            }
            let done = stack.pop().expect("non-empty");
            self.memo.insert(done.node, Mark::Done(done.best));
            match stack.last_mut() {
                Some(parent) => {
                    parent.best = match done.best {
                        Value::Escape => Value::Escape,
                        v => parent.best.max(v.delayed(parent.pending)),
                    }
                }
                None => return Ok(done.best),
            }
        }
    }

    fn open(&mut self, node: Node<C::Memory>) -> Result<Frame<C::Memory>, GameError> {
        if self.memo.len() >= self.budget {
            return Err(GameError::Budget { states: self.memo.len(), budget: self.budget });
        }
        self.memo.insert(node.clone(), Mark::OnStack);
        let choices = self.g.closed_neighbors(node.1);
        Ok(Frame { node, choices, next_choice: 0, best: Value::Capture(0), pending: 0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_graph, path_graph};
    use crate::strategies::simple::{GreedyCops, StationaryCops};

    #[test]
    fn stationary_cop_at_path_end_never_wins() {
        let g = path_graph(3).unwrap();
        let config = GameConfig::for_graph(&g, 1, MoveOrder::RobberFirst).unwrap();
        assert_eq!(best_response_length(&g, &config, &StationaryCops::new(vec![0])).unwrap(), Value::Escape);
    }

    #[test]
    fn greedy_chase_on_paths() {
        // a greedy cop from one end of path(n) needs n-1 rounds against a
        // robber hiding at the far end
        for n in 2..8 {
            let g = path_graph(n).unwrap();
            for order in [MoveOrder::RobberFirst, MoveOrder::CopsFirst] {
                let config = GameConfig::for_graph(&g, 1, order).unwrap();
                let value = best_response_length(&g, &config, &GreedyCops::new(vec![0])).unwrap();
                assert_eq!(value, Value::Capture(n as u32 - 1), "n={n} {order}");
            }
        }
    }

    #[test]
    fn greedy_cop_cannot_win_on_a_cycle() {
        let g = cycle_graph(4).unwrap();
        let config = GameConfig::for_graph(&g, 1, MoveOrder::RobberFirst).unwrap();
        assert_eq!(best_response_length(&g, &config, &GreedyCops::new(vec![0])).unwrap(), Value::Escape);
    }

    #[test]
    fn budget_is_enforced() {
        let g = path_graph(8).unwrap();
        let config = GameConfig::for_graph(&g, 1, MoveOrder::RobberFirst).unwrap();
        let err = best_response_length_with_budget(&g, &config, &GreedyCops::new(vec![0]), 3).unwrap_err();
        assert!(matches!(err, GameError::Budget { budget: 3, .. }));
    }
}
