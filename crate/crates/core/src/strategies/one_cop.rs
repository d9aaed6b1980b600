//! One cop on a tree: start at the centre of a longest path, then walk
//! toward the robber every round.

use crate::game::{CopStrategy, GameState, StrategyError};
use crate::graph::{DistanceMatrix, Graph, GraphError, Vertex};

/// Vertex `a_{1+⌈d/2⌉}` of a longest path `a_1, …, a_{d+1}`; every vertex of
/// the tree lies within `⌈d/2⌉` of it.
pub fn center_start(tree: &Graph) -> Result<Vertex, GraphError> {
    let path = tree.diametral_path()?;
    let d = path.len() - 1;
    Ok(path[d.div_ceil(2)])
}

#[derive(Debug, Clone)]
pub struct OneCopChase {
    tree: Graph,
    start: Vertex,
    metric: DistanceMatrix,
}

impl OneCopChase {
    pub fn new(tree: &Graph) -> Result<Self, GraphError> {
        let start = center_start(tree)?;
        Ok(OneCopChase { tree: tree.clone(), start, metric: DistanceMatrix::new(tree) })
    }

    pub fn start(&self) -> Vertex {
        self.start
    }
}

impl CopStrategy for OneCopChase {
    type Memory = ();

    fn place(&self, g: &Graph, cops: usize) -> Result<(Vec<Vertex>, ()), StrategyError> {
        if g != &self.tree {
            return Err(StrategyError::Mismatch("one-cop chase is bound to a different tree".into()));
        }
        if cops != 1 {
            return Err(StrategyError::Mismatch(format!("one-cop chase plays with 1 cop, not {cops}")));
        }
        Ok((vec![self.start], ()))
    }

    fn respond(&self, _: &Graph, state: &GameState, _: &mut ()) -> Result<Vec<Vertex>, StrategyError> {
        Ok(vec![self.metric.next_hop(state.cops[0], state.robber())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{best_response_length, GameConfig, MoveOrder};
    use crate::generators::{path_graph, star_graph};
    use crate::value::Value;

    #[test]
    fn centre_examples() {
        assert_eq!(center_start(&path_graph(5).unwrap()).unwrap(), 2);
        // path(4): a3 is 1 or 2 depending on the direction of the longest path
        let g = path_graph(4).unwrap();
        let path = g.diametral_path().unwrap();
        assert_eq!(center_start(&g).unwrap(), path[2]);
        assert_eq!(g.eccentricity(path[2]), 2);
        assert_eq!(center_start(&star_graph(4).unwrap()).unwrap(), 0);
    }

    #[test]
    fn chase_on_paths() {
        for (n, expect) in [(2, 1), (5, 2), (6, 3)] {
            let g = path_graph(n).unwrap();
            let config = GameConfig::for_graph(&g, 1, MoveOrder::RobberFirst).unwrap();
            let v = best_response_length(&g, &config, &OneCopChase::new(&g).unwrap()).unwrap();
            assert_eq!(v, Value::Capture(expect));
        }
    }
}
