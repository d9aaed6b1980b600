//! Cops and Robber on finite graphs.
//!
//! * [`graph`], [`tree`], [`product`], [`generators`]: the arenas.
//! * [`game`]: rules, strategies and simulation.
//! * [`solver`]: exact k-capture time by retrograde analysis.
//! * [`strategies`]: constructive cop strategies on trees and products of two trees.
//! * [`bounds`]: integer checks of capture-time identities and inequalities.
//! * [`corpus`]: seeded instance sets shared by the CLI and the test suites.

pub mod bounds;
pub mod corpus;
pub mod game;
pub mod generators;
pub mod graph;
pub mod product;
pub mod solver;
pub mod strategies;
pub mod tree;
pub mod value;

pub use game::{CopStrategy, GameConfig, GameState, MoveOrder, Outcome, RobberStrategy, Trace};
pub use graph::{DistanceMatrix, Graph, GraphError, Vertex};
pub use product::{cartesian_product, ProductGraph};
pub use solver::{solve, SolveResult};
pub use tree::RootedTree;
pub use value::Value;
