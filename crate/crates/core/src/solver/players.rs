//! Optimal players read off a solved value table.

use super::{SolveError, SolveResult, ValueTable};
use crate::game::{legal_cop_moves, CopStrategy, GameState, RobberStrategy, StrategyError};
use crate::graph::{Graph, Vertex};
use crate::value::Value;

fn check_table(table: &ValueTable, g: &Graph) -> Result<(), StrategyError> {
    if table.graph() != g {
        return Err(StrategyError::Mismatch("value table was solved for a different graph".into()));
    }
    Ok(())
}

/// Cops that start on the lexicographically smallest central tuple and
/// always move to a position of minimal remaining value (lexicographically
/// smallest move on ties).
#[derive(Debug, Clone, Copy)]
pub struct OptimalCops<'a> {
    result: &'a SolveResult,
}

impl<'a> OptimalCops<'a> {
    pub fn new(result: &'a SolveResult) -> Result<Self, SolveError> {
        if result.central_tuples.is_empty() {
            return Err(SolveError::NoStrategy { cops: result.table.cops() });
        }
        Ok(OptimalCops { result })
    }
}

impl CopStrategy for OptimalCops<'_> {
    type Memory = ();

    fn place(&self, g: &Graph, cops: usize) -> Result<(Vec<Vertex>, ()), StrategyError> {
        check_table(&self.result.table, g)?;
        if cops != self.result.table.cops() {
            return Err(StrategyError::Mismatch(format!(
                "table is for {} cops, game has {cops}",
                self.result.table.cops()
            )));
        }
        Ok((self.result.central_tuples[0].clone(), ()))
    }

    fn respond(&self, g: &Graph, state: &GameState, _: &mut ()) -> Result<Vec<Vertex>, StrategyError> {
        let r = state.robber();
        let table = &self.result.table;
        let score = |next: &Vec<Vertex>| {
            if next.contains(&r) {
                Value::Capture(1)
            } else {
                match table.robber_to_move(next, r) {
                    Value::Escape => Value::Escape,
                    v => v.delayed(1),
                }
            }
        };
        // legal_cop_moves is lexicographic, and min_by_key keeps the first minimum
        Ok(legal_cop_moves(g, &state.cops).into_iter().min_by_key(score).expect("staying is always legal"))
    }
}

/// A robber that always moves to a position of maximal remaining value
/// (smallest vertex id on ties). Escape beats every finite value.
#[derive(Debug, Clone, Copy)]
pub struct OptimalRobber<'a> {
    table: &'a ValueTable,
}

impl<'a> OptimalRobber<'a> {
    pub fn new(result: &'a SolveResult) -> Self {
        OptimalRobber { table: &result.table }
    }
}

fn argmax_smallest(options: impl Iterator<Item = Vertex>, value: impl Fn(Vertex) -> Value) -> Option<Vertex> {
    options
        .fold(None, |best: Option<(Vertex, Value)>, v| {
            let val = value(v);
            match best {
                Some((_, b)) if b >= val => best,
                _ => Some((v, val)),
            }
        })
        .map(|(v, _)| v)
}

impl RobberStrategy for OptimalRobber<'_> {
    type Memory = ();

    fn place(&self, g: &Graph, cops: &[Vertex]) -> Result<(Vertex, ()), StrategyError> {
        check_table(self.table, g)?;
        let v =
            argmax_smallest(0..g.vertex_count(), |r| self.table.after_placement(cops, r)).expect("graph is non-empty");
        Ok((v, ()))
    }

    fn respond(&self, g: &Graph, state: &GameState, _: &mut ()) -> Result<Vertex, StrategyError> {
        let options = g.closed_neighbors(state.robber());
        let v = argmax_smallest(options.into_iter().filter(|v| !state.cops.contains(v)), |r| {
            self.table.cops_to_move(&state.cops, r)
        })
        .expect("the robber may always stay");
        Ok(v)
    }
}
