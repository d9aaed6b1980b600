//! Baseline players: stationary, greedy, random and scripted.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{CopStrategy, GameState, RobberStrategy, StrategyError};
use crate::graph::{Graph, Vertex};

fn check_positions(g: &Graph, positions: &[Vertex], cops: usize) -> Result<(), StrategyError> {
    if positions.len() != cops {
        return Err(StrategyError::Mismatch(format!("{} start positions for {cops} cops", positions.len())));
    }
    if let Some(v) = positions.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(StrategyError::Mismatch(format!("start vertex {v} is outside the graph")));
    }
    Ok(())
}

/// Cops that never move.
#[derive(Debug, Clone)]
pub struct StationaryCops {
    positions: Vec<Vertex>,
}

impl StationaryCops {
    pub fn new(positions: Vec<Vertex>) -> Self {
        StationaryCops { positions }
    }
}

impl CopStrategy for StationaryCops {
    type Memory = ();

    fn place(&self, g: &Graph, cops: usize) -> Result<(Vec<Vertex>, ()), StrategyError> {
        check_positions(g, &self.positions, cops)?;
        Ok((self.positions.clone(), ()))
    }

    fn respond(&self, _: &Graph, state: &GameState, _: &mut ()) -> Result<Vec<Vertex>, StrategyError> {
        Ok(state.cops.clone())
    }
}

/// Every cop takes a shortest-path step toward the robber.
#[derive(Debug, Clone)]
pub struct GreedyCops {
    positions: Vec<Vertex>,
}

impl GreedyCops {
    pub fn new(positions: Vec<Vertex>) -> Self {
        GreedyCops { positions }
    }
}

impl CopStrategy for GreedyCops {
    type Memory = ();

    fn place(&self, g: &Graph, cops: usize) -> Result<(Vec<Vertex>, ()), StrategyError> {
        check_positions(g, &self.positions, cops)?;
        Ok((self.positions.clone(), ()))
    }

    fn respond(&self, g: &Graph, state: &GameState, _: &mut ()) -> Result<Vec<Vertex>, StrategyError> {
        let r = state.robber();
        let dist = g.bfs_distances(r);
        Ok(state
            .cops
            .iter()
            .map(
                |&c| {
                    if c == r {
                        c
                    } else {
                        *g.neighbors(c).iter().find(|&&w| dist[w] + 1 == dist[c]).expect("connected")
                    }
                },
            )
            .collect())
    }
}

/// Cops placed and moved uniformly at random. Memory counts moves so the
/// sequence depends only on the seed.
#[derive(Debug, Clone)]
pub struct RandomCops {
    seed: u64,
}

impl RandomCops {
    pub fn new(seed: u64) -> Self {
        RandomCops { seed }
    }

    fn rng(&self, step: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(step.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
    }
}

impl CopStrategy for RandomCops {
    type Memory = u64;

    fn place(&self, g: &Graph, cops: usize) -> Result<(Vec<Vertex>, u64), StrategyError> {
        let mut rng = self.rng(0);
        Ok(((0..cops).map(|_| rng.random_range(0..g.vertex_count())).collect(), 1))
    }

    fn respond(&self, g: &Graph, state: &GameState, step: &mut u64) -> Result<Vec<Vertex>, StrategyError> {
        let mut rng = self.rng(*step);
        *step += 1;
        Ok(state.cops.iter().map(|&c| *g.closed_neighbors(c).choose(&mut rng).expect("N[c] contains c")).collect())
    }
}

/// Cops replaying a fixed script; `moves[t-1]` are the positions for round `t`.
#[derive(Debug, Clone)]
pub struct ScriptedCops {
    start: Vec<Vertex>,
    moves: Vec<Vec<Vertex>>,
}

impl ScriptedCops {
    pub fn new(start: Vec<Vertex>, moves: Vec<Vec<Vertex>>) -> Self {
        ScriptedCops { start, moves }
    }
}

impl CopStrategy for ScriptedCops {
    type Memory = ();

    fn place(&self, g: &Graph, cops: usize) -> Result<(Vec<Vertex>, ()), StrategyError> {
        check_positions(g, &self.start, cops)?;
        Ok((self.start.clone(), ()))
    }

    fn respond(&self, _: &Graph, state: &GameState, _: &mut ()) -> Result<Vec<Vertex>, StrategyError> {
        self.moves
            .get(state.round.wrapping_sub(1))
            .cloned()
            .ok_or_else(|| StrategyError::Mismatch(format!("cop script has no move for round {}", state.round)))
    }
}

/// A robber that never moves. Without a fixed vertex she starts as far from
/// the nearest cop as possible (smallest id on ties).
#[derive(Debug, Clone, Default)]
pub struct StationaryRobber {
    at: Option<Vertex>,
}

impl StationaryRobber {
    pub fn at(v: Vertex) -> Self {
        StationaryRobber { at: Some(v) }
    }

    pub fn farthest() -> Self {
        StationaryRobber { at: None }
    }
}

/// Vertex maximising the distance to the nearest cop; smallest id on ties.
pub fn farthest_from(g: &Graph, cops: &[Vertex]) -> Vertex {
    let per_cop: Vec<Vec<usize>> = cops.iter().map(|&c| g.bfs_distances(c)).collect();
    (0..g.vertex_count())
        .max_by_key(|&v| (per_cop.iter().map(|d| d[v]).min().unwrap_or(0), std::cmp::Reverse(v)))
        .expect("graph is non-empty")
}

impl RobberStrategy for StationaryRobber {
    type Memory = ();

    fn place(&self, g: &Graph, cops: &[Vertex]) -> Result<(Vertex, ()), StrategyError> {
        match self.at {
            Some(v) if v >= g.vertex_count() => {
                Err(StrategyError::Mismatch(format!("vertex {v} is outside the graph")))
            }
            Some(v) => Ok((v, ())),
            None => Ok((farthest_from(g, cops), ())),
        }
    }

    fn respond(&self, _: &Graph, state: &GameState, _: &mut ()) -> Result<Vertex, StrategyError> {
        Ok(state.robber())
    }
}

/// A random walker that avoids stepping onto cops when it can.
#[derive(Debug, Clone)]
pub struct RandomRobber {
    seed: u64,
}

impl RandomRobber {
    pub fn new(seed: u64) -> Self {
        RandomRobber { seed }
    }
}

impl RobberStrategy for RandomRobber {
    type Memory = ChaCha8Rng;

    fn place(&self, g: &Graph, cops: &[Vertex]) -> Result<(Vertex, ChaCha8Rng), StrategyError> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let free: Vec<Vertex> = (0..g.vertex_count()).filter(|v| !cops.contains(v)).collect();
        let v = match free.choose(&mut rng) {
            Some(&v) => v,
            None => rng.random_range(0..g.vertex_count()),
        };
        Ok((v, rng))
    }

    fn respond(&self, g: &Graph, state: &GameState, rng: &mut ChaCha8Rng) -> Result<Vertex, StrategyError> {
        let options = g.closed_neighbors(state.robber());
        let safe: Vec<Vertex> = options.iter().copied().filter(|v| !state.cops.contains(v)).collect();
        let pool = if safe.is_empty() { &options } else { &safe };
        Ok(*pool.choose(rng).expect("N[r] contains r"))
    }
}

/// A robber replaying a fixed script; `moves[t-1]` is her vertex after round `t`.
#[derive(Debug, Clone)]
pub struct ScriptedRobber {
    start: Vertex,
    moves: Vec<Vertex>,
}

impl ScriptedRobber {
    pub fn new(start: Vertex, moves: Vec<Vertex>) -> Self {
        ScriptedRobber { start, moves }
    }
}

impl RobberStrategy for ScriptedRobber {
    type Memory = ();

    fn place(&self, _: &Graph, _: &[Vertex]) -> Result<(Vertex, ()), StrategyError> {
        Ok((self.start, ()))
    }

    fn respond(&self, _: &Graph, state: &GameState, _: &mut ()) -> Result<Vertex, StrategyError> {
        self.moves
            .get(state.round.wrapping_sub(1))
            .copied()
            .ok_or_else(|| StrategyError::Mismatch(format!("robber script has no move for round {}", state.round)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{simulate, GameConfig, MoveOrder};
    use crate::generators::grid_graph;

    #[test]
    fn random_players_are_reproducible() {
        let g = grid_graph(4, 4).unwrap();
        let config = GameConfig::new(2, MoveOrder::RobberFirst, 30).unwrap();
        let a = simulate(&g, &config, &RandomCops::new(3), &RandomRobber::new(9)).unwrap();
        let b = simulate(&g, &config, &RandomCops::new(3), &RandomRobber::new(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn farthest_placement() {
        let g = grid_graph(3, 3).unwrap();
        assert_eq!(farthest_from(&g, &[0]), 8);
        assert_eq!(farthest_from(&g, &[4]), 0);
    }
}
