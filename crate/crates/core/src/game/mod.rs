//! The pursuit game as a state machine.
//!
//! Round 0 is placement: the cops choose their vertices, then the robber
//! chooses hers. Every later round is two half-moves, robber first under
//! [`MoveOrder::RobberFirst`] and cops first under [`MoveOrder::CopsFirst`].
//! A move is either staying put or stepping to a neighbour. Capture is
//! checked after every half-move; the round in which it happens is the
//! length of the game.

mod best_response;
mod trace;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

pub use best_response::{best_response_length, best_response_length_with_budget};
pub use trace::{replay, RoundRecord, Trace, TraceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MoveOrder {
    #[default]
    RobberFirst,
    CopsFirst,
}

impl fmt::Display for MoveOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveOrder::RobberFirst => "robber-first",
            MoveOrder::CopsFirst => "cops-first",
        })
    }
}

impl FromStr for MoveOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "robber-first" => Ok(MoveOrder::RobberFirst),
            "cops-first" => Ok(MoveOrder::CopsFirst),
            other => Err(format!("unknown move order {other:?} (expected robber-first or cops-first)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Cops,
    Robber,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Cops => "cops",
            Side::Robber => "robber",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameConfig {
    pub cops: usize,
    pub order: MoveOrder,
    pub max_rounds: usize,
}

impl GameConfig {
    pub fn new(cops: usize, order: MoveOrder, max_rounds: usize) -> Result<Self, GameError> {
        if cops == 0 {
            return Err(GameError::InvalidConfig("at least one cop is required".into()));
        }
        if max_rounds == 0 {
            return Err(GameError::InvalidConfig("max_rounds must be positive".into()));
        }
        Ok(GameConfig { cops, order, max_rounds })
    }

    /// Config with the default round cutoff `4·|V|²`.
    pub fn for_graph(g: &Graph, cops: usize, order: MoveOrder) -> Result<Self, GameError> {
        let n = g.vertex_count();
        GameConfig::new(cops, order, 4 * n * n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cops: Vec<Vertex>,
    /// `None` until the robber has placed herself.
    pub robber: Option<Vertex>,
    /// 0 during placement.
    pub round: usize,
    pub to_move: Side,
}

impl GameState {
    pub fn is_captured(&self) -> bool {
        self.robber.is_some_and(|r| self.cops.contains(&r))
    }

    pub fn robber(&self) -> Vertex {
        self.robber.expect("robber has been placed")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("strategy does not apply: {0}")]
    Mismatch(String),
    #[error("strategy invariant violated: {0}")]
    Invariant(String),
    #[error("strategy prescribed a move onto virtual vertex {vertex} of factor {factor}")]
    VirtualMove { factor: usize, vertex: Vertex },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("invalid game configuration: {0}")]
    InvalidConfig(String),
    #[error("round {round}: cop {cop} made an illegal move {from} -> {to}")]
    IllegalCopMove { round: usize, cop: usize, from: Vertex, to: Vertex },
    #[error("round {round}: robber made an illegal move {from} -> {to}")]
    IllegalRobberMove { round: usize, from: Vertex, to: Vertex },
    #[error("{side} placed on vertex {vertex}, outside the graph")]
    BadPlacement { side: Side, vertex: Vertex },
    #[error("cop strategy produced {got} positions for {expected} cops")]
    WrongCopCount { expected: usize, got: usize },
    #[error("game is not in progress (placement incomplete or robber captured)")]
    NotInProgress,
    #[error("{side} strategy failed: {source}")]
    Strategy { side: Side, source: StrategyError },
    #[error("search exceeded its budget: {states} states explored, budget {budget}")]
    Budget { states: usize, budget: usize },
}

/// The cop side of a strategy.
///
/// Strategies are immutable templates; per-game memory is threaded through
/// `respond`. Exhaustive analysis ([`best_response_length`]) clones and
/// hashes that memory, and assumes responses do not depend on `state.round`.
pub trait CopStrategy {
    type Memory: Clone + Eq + Hash + fmt::Debug;

    fn place(&self, g: &Graph, cops: usize) -> Result<(Vec<Vertex>, Self::Memory), StrategyError>;

    /// New cop positions, one per cop, each in the closed neighbourhood of
    /// the old one.
    fn respond(&self, g: &Graph, state: &GameState, memory: &mut Self::Memory) -> Result<Vec<Vertex>, StrategyError>;
}

/// The robber side of a strategy.
pub trait RobberStrategy {
    type Memory: Clone + fmt::Debug;

    fn place(&self, g: &Graph, cops: &[Vertex]) -> Result<(Vertex, Self::Memory), StrategyError>;

    fn respond(&self, g: &Graph, state: &GameState, memory: &mut Self::Memory) -> Result<Vertex, StrategyError>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Captured(usize),
    Survived(usize),
}

impl Outcome {
    pub fn capture_round(self) -> Option<usize> {
        match self {
            Outcome::Captured(t) => Some(t),
            Outcome::Survived(_) => None,
        }
    }
}

/// Every way the cops can move together: the product of `N[c_i]`, in
/// lexicographic order.
pub fn legal_cop_moves(g: &Graph, cops: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut out: Vec<Vec<Vertex>> = vec![Vec::with_capacity(cops.len())];
    for &c in cops {
        let options = g.closed_neighbors(c);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&o| {
                    let mut next = prefix.clone();
                    next.push(o);
                    next
                })
            })
            .collect();
    }
    out
}

fn check_cops(g: &Graph, round: usize, old: &[Vertex], new: &[Vertex]) -> Result<(), GameError> {
    if new.len() != old.len() {
        return Err(GameError::WrongCopCount { expected: old.len(), got: new.len() });
    }
    for (cop, (&from, &to)) in old.iter().zip(new).enumerate() {
        if to >= g.vertex_count() || !g.is_legal_step(from, to) {
            return Err(GameError::IllegalCopMove { round, cop, from, to });
        }
    }
    Ok(())
}

fn cop_half<C: CopStrategy>(
    g: &Graph,
    state: &mut GameState,
    cops: &C,
    memory: &mut C::Memory,
) -> Result<(), GameError> {
    state.to_move = Side::Cops;
    let next = cops.respond(g, state, memory).map_err(|source| GameError::Strategy { side: Side::Cops, source })?;
    check_cops(g, state.round, &state.cops, &next)?;
    state.cops = next;
    Ok(())
}

fn robber_half<R: RobberStrategy>(
    g: &Graph,
    state: &mut GameState,
    robber: &R,
    memory: &mut R::Memory,
) -> Result<(), GameError> {
    state.to_move = Side::Robber;
    let from = state.robber();
    let to = robber.respond(g, state, memory).map_err(|source| GameError::Strategy { side: Side::Robber, source })?;
    if to >= g.vertex_count() || !g.is_legal_step(from, to) {
        return Err(GameError::IllegalRobberMove { round: state.round, from, to });
    }
    state.robber = Some(to);
    Ok(())
}

/// Plays one full round from a placed, uncaptured state. A capture on the
/// first half-move ends the round immediately.
pub fn advance_round<C: CopStrategy, R: RobberStrategy>(
    g: &Graph,
    config: &GameConfig,
    state: &mut GameState,
    cops: &C,
    cop_memory: &mut C::Memory,
    robber: &R,
    robber_memory: &mut R::Memory,
) -> Result<RoundRecord, GameError> {
    if state.robber.is_none() || state.is_captured() {
        return Err(GameError::NotInProgress);
    }
    state.round += 1;
    match config.order {
        MoveOrder::RobberFirst => {
            robber_half(g, state, robber, robber_memory)?;
            if !state.is_captured() {
                cop_half(g, state, cops, cop_memory)?;
            }
            state.to_move = Side::Robber;
        }
        MoveOrder::CopsFirst => {
            cop_half(g, state, cops, cop_memory)?;
            if !state.is_captured() {
                robber_half(g, state, robber, robber_memory)?;
            }
            state.to_move = Side::Cops;
        }
    }
    Ok(RoundRecord { round: state.round, robber: state.robber(), cops: state.cops.clone() })
}

/// Places both sides and plays until capture or `config.max_rounds`.
pub fn simulate<C: CopStrategy, R: RobberStrategy>(
    g: &Graph,
    config: &GameConfig,
    cops: &C,
    robber: &R,
) -> Result<Trace, GameError> {
    let (cop_start, mut cop_memory) =
        cops.place(g, config.cops).map_err(|source| GameError::Strategy { side: Side::Cops, source })?;
    if cop_start.len() != config.cops {
        return Err(GameError::WrongCopCount { expected: config.cops, got: cop_start.len() });
    }
    if let Some(&bad) = cop_start.iter().find(|&&c| c >= g.vertex_count()) {
        return Err(GameError::BadPlacement { side: Side::Cops, vertex: bad });
    }
    let (robber_start, mut robber_memory) =
        robber.place(g, &cop_start).map_err(|source| GameError::Strategy { side: Side::Robber, source })?;
    if robber_start >= g.vertex_count() {
        return Err(GameError::BadPlacement { side: Side::Robber, vertex: robber_start });
    }
    let first = match config.order {
        MoveOrder::RobberFirst => Side::Robber,
        MoveOrder::CopsFirst => Side::Cops,
    };
    let mut state = GameState { cops: cop_start.clone(), robber: Some(robber_start), round: 0, to_move: first };
    let mut trace = Trace {
        order: config.order,
        placement: RoundRecord { round: 0, robber: robber_start, cops: cop_start },
        rounds: Vec::new(),
        outcome: Outcome::Captured(0),
    };
    if state.is_captured() {
        return Ok(trace);
    }
    while state.round < config.max_rounds {
        let record = advance_round(g, config, &mut state, cops, &mut cop_memory, robber, &mut robber_memory)?;
        trace.rounds.push(record);
        if state.is_captured() {
            trace.outcome = Outcome::Captured(state.round);
            return Ok(trace);
        }
    }
    trace.outcome = Outcome::Survived(state.round);
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_graph, path_graph};
    use crate::strategies::simple::{GreedyCops, StationaryCops, StationaryRobber};

    #[test]
    fn cop_move_counts() {
        let p = path_graph(4).unwrap();
        assert_eq!(legal_cop_moves(&p, &[1]).len(), 3);
        let star = crate::generators::star_graph(3).unwrap();
        // degrees 2 and 3 -> 3 * 4
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(legal_cop_moves(&g, &[1, 2]).len(), 12);
        assert_eq!(legal_cop_moves(&path_graph(2).unwrap(), &[0]), vec![vec![0], vec![1]]);
        assert_eq!(legal_cop_moves(&star, &[0]).len(), 4);
    }

    #[test]
    fn greedy_cop_catches_stationary_robber_on_an_edge() {
        let g = path_graph(2).unwrap();
        let config = GameConfig::for_graph(&g, 1, MoveOrder::RobberFirst).unwrap();
        let trace = simulate(&g, &config, &GreedyCops::new(vec![0]), &StationaryRobber::at(1)).unwrap();
        assert_eq!(trace.outcome, Outcome::Captured(1));
    }

    #[test]
    fn placement_on_a_cop_ends_at_round_zero() {
        let g = path_graph(3).unwrap();
        let config = GameConfig::for_graph(&g, 1, MoveOrder::RobberFirst).unwrap();
        let trace = simulate(&g, &config, &StationaryCops::new(vec![1]), &StationaryRobber::at(1)).unwrap();
        assert_eq!(trace.outcome, Outcome::Captured(0));
        assert!(trace.rounds.is_empty());
    }

    #[test]
    fn robber_stepping_onto_a_cop_is_captured_that_round() {
        let g = path_graph(3).unwrap();
        let config = GameConfig::new(1, MoveOrder::RobberFirst, 10).unwrap();
        let cops = StationaryCops::new(vec![1]);
        let (mut cm, mut rm) = ((), ());
        let mut state = GameState { cops: vec![1], robber: Some(0), round: 0, to_move: Side::Robber };
        let walker = crate::strategies::simple::ScriptedRobber::new(0, vec![1]);
        let rec = advance_round(&g, &config, &mut state, &cops, &mut cm, &walker, &mut rm).unwrap();
        assert!(state.is_captured());
        assert_eq!(rec.round, 1);
        assert_eq!(rec.cops, vec![1]);
    }

    #[test]
    fn quiet_round_advances_counter() {
        let g = path_graph(4).unwrap();
        let config = GameConfig::new(1, MoveOrder::RobberFirst, 10).unwrap();
        let cops = StationaryCops::new(vec![0]);
        let mut state = GameState { cops: vec![0], robber: Some(3), round: 0, to_move: Side::Robber };
        let robber = StationaryRobber::at(3);
        advance_round(&g, &config, &mut state, &cops, &mut (), &robber, &mut ()).unwrap();
        assert!(!state.is_captured());
        assert_eq!(state.round, 1);
    }

    #[test]
    fn cops_first_capture_skips_robber_half() {
        let g = path_graph(3).unwrap();
        let config = GameConfig::new(1, MoveOrder::CopsFirst, 10).unwrap();
        let cops = GreedyCops::new(vec![0]);
        let robber = crate::strategies::simple::ScriptedRobber::new(1, vec![]);
        let mut state = GameState { cops: vec![0], robber: Some(1), round: 0, to_move: Side::Cops };
        let rec = advance_round(&g, &config, &mut state, &cops, &mut (), &robber, &mut ()).unwrap();
        assert!(state.is_captured());
        assert_eq!((rec.round, rec.robber), (1, 1));
        // the scripted robber has no moves left; it was never consulted
    }

    #[test]
    fn illegal_moves_are_reported() {
        let g = cycle_graph(5).unwrap();
        let config = GameConfig::new(1, MoveOrder::RobberFirst, 10).unwrap();
        let cops = StationaryCops::new(vec![0]);
        let jumper = crate::strategies::simple::ScriptedRobber::new(2, vec![4]);
        let mut state = GameState { cops: vec![0], robber: Some(2), round: 0, to_move: Side::Robber };
        let err = advance_round(&g, &config, &mut state, &cops, &mut (), &jumper, &mut ()).unwrap_err();
        assert_eq!(err, GameError::IllegalRobberMove { round: 1, from: 2, to: 4 });

        let bad_cops = crate::strategies::simple::ScriptedCops::new(vec![0], vec![vec![2]]);
        let stay = StationaryRobber::at(3);
        let mut state = GameState { cops: vec![0], robber: Some(3), round: 0, to_move: Side::Robber };
        let err = advance_round(&g, &config, &mut state, &bad_cops, &mut (), &stay, &mut ()).unwrap_err();
        assert_eq!(err, GameError::IllegalCopMove { round: 1, cop: 0, from: 0, to: 2 });
    }

    #[test]
    fn survives_until_cutoff() {
        let g = cycle_graph(4).unwrap();
        let config = GameConfig::new(1, MoveOrder::RobberFirst, 7).unwrap();
        let trace = simulate(&g, &config, &StationaryCops::new(vec![0]), &StationaryRobber::at(2)).unwrap();
        assert_eq!(trace.outcome, Outcome::Survived(7));
        assert_eq!(trace.rounds.len(), 7);
    }

    #[test]
    fn config_validation() {
        assert!(GameConfig::new(0, MoveOrder::RobberFirst, 3).is_err());
        assert!(GameConfig::new(1, MoveOrder::RobberFirst, 0).is_err());
        assert_eq!("cops-first".parse::<MoveOrder>().unwrap(), MoveOrder::CopsFirst);
        assert_eq!(MoveOrder::default().to_string(), "robber-first");
    }
}
