//! Seeded instance sets. The same seed always yields the same instances in
//! the same order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::generators::{cycle_graph, grid_graph, path_graph, random_tree, star_graph};
use crate::graph::Graph;
use crate::product::ProductGraph;

#[derive(Debug, Clone)]
pub struct TreePair {
    pub t1: Graph,
    pub t2: Graph,
    /// Generator seeds of the two factors.
    pub seeds: (u64, u64),
}

impl TreePair {
    pub fn product(&self) -> ProductGraph {
        ProductGraph::new(&self.t1, &self.t2)
    }

    pub fn label(&self) -> String {
        format!(
            "random-tree({},{}) x random-tree({},{})",
            self.t1.vertex_count(),
            self.seeds.0,
            self.t2.vertex_count(),
            self.seeds.1
        )
    }
}

/// `count` pairs of random trees, each factor with a uniform size in
/// `min..=max` (`min ≥ 2`).
pub fn random_tree_pairs(seed: u64, count: usize, min: usize, max: usize) -> Vec<TreePair> {
    assert!(2 <= min && min <= max, "sizes must satisfy 2 <= min <= max");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (n1, n2) = (rng.random_range(min..=max), rng.random_range(min..=max));
            let seeds = (rng.random::<u64>(), rng.random::<u64>());
            TreePair {
                t1: random_tree(n1, seeds.0).expect("n >= 2"),
                t2: random_tree(n2, seeds.1).expect("n >= 2"),
                seeds,
            }
        })
        .collect()
}

/// `count` random trees with sizes uniform in `min..=max`.
pub fn random_trees(seed: u64, count: usize, min: usize, max: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(min..=max);
            random_tree(n, rng.random()).expect("n >= 2")
        })
        .collect()
}

/// `(m, n)` for `2 ≤ m, n ≤ max`, as pairs of path factors.
pub fn grid_factors(max: usize) -> Vec<(usize, usize, Graph, Graph)> {
    (2..=max)
        .flat_map(|m| (2..=max).map(move |n| (m, n)))
        .map(|(m, n)| (m, n, path_graph(m).expect("m >= 2"), path_graph(n).expect("n >= 2")))
        .collect()
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub graph: Graph,
    pub cops: usize,
}

/// A mix of trees (one cop), grids, tree products and small non-tree
/// graphs (two cops). The first few are fixed; the rest are drawn from the
/// seed. Every instance has at most 36 vertices.
pub fn mixed_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut out = vec![
        Instance { label: "cycle(4)".into(), graph: cycle_graph(4).expect("n >= 3"), cops: 2 },
        Instance { label: "cycle(5)".into(), graph: cycle_graph(5).expect("n >= 3"), cops: 2 },
        Instance { label: "grid(3,3)".into(), graph: grid_graph(3, 3).expect("non-empty"), cops: 2 },
        Instance { label: "star(4)".into(), graph: star_graph(4).expect("non-empty"), cops: 1 },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        let inst = match out.len() % 4 {
            0 => {
                let n = rng.random_range(2..=9);
                let s = rng.random();
                Instance { label: format!("random-tree({n},{s})"), graph: random_tree(n, s).expect("n >= 2"), cops: 1 }
            }
            1 => {
                let (m, n) = (rng.random_range(2..=5), rng.random_range(2..=5));
                Instance { label: format!("grid({m},{n})"), graph: grid_graph(m, n).expect("non-empty"), cops: 2 }
            }
            2 => {
                let (n1, n2) = (rng.random_range(2..=6), rng.random_range(2..=6));
                let (s1, s2) = (rng.random(), rng.random());
                let g = ProductGraph::new(&random_tree(n1, s1).expect("n >= 2"), &random_tree(n2, s2).expect("n >= 2"));
                Instance {
                    label: format!("random-tree({n1},{s1}) x random-tree({n2},{s2})"),
                    graph: g.into_flat(),
                    cops: 2,
                }
            }
            _ => {
                let n = rng.random_range(3..=8);
                let cops = rng.random_range(1..=2);
                Instance { label: format!("cycle({n})"), graph: cycle_graph(n).expect("n >= 3"), cops }
            }
        };
        out.push(inst);
    }
    out.truncate(count);
    out
}
