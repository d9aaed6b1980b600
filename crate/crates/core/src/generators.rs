//! Paths, grids, stars and random labelled trees.
//!
//! Random trees decode a uniformly random Prüfer sequence drawn from
//! `ChaCha8Rng::seed_from_u64(seed)`, so a seed fixes the tree on every
//! platform.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError, Vertex};
use crate::product::cartesian_product;

pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooSmall { kind: "path", min: 2, n });
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// The `m × n` grid, i.e. `path(m) □ path(n)` with row-major ids.
pub fn grid_graph(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::TooSmall { kind: "grid side", min: 1, n: m.min(n) });
    }
    let id = |i: usize, j: usize| i * n + j;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if j + 1 < n {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < m {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Graph::new(m * n, edges)
}

/// Star with centre 0 and `leaves` leaves.
pub fn star_graph(leaves: usize) -> Result<Graph, GraphError> {
    if leaves < 1 {
        return Err(GraphError::TooSmall { kind: "star", min: 2, n: leaves + 1 });
    }
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall { kind: "cycle", min: 3, n });
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into the edges of
/// the corresponding labelled tree. The smallest available leaf is always
/// removed first.
pub fn prufer_decode(seq: &[Vertex], n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooSmall { kind: "tree", min: 2, n });
    }
    assert_eq!(seq.len(), n - 2, "Prüfer sequence for {n} vertices has length {}", n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        if v >= n {
            return Err(GraphError::OutOfRange { u: v, v, n });
        }
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Graph::new(n, edges)
}

/// Uniformly random labelled tree on `n ≥ 2` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooSmall { kind: "tree", min: 2, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(&seq, n)
}

/// Every Prüfer sequence of length `n - 2` over `0..n`, in lexicographic
/// order; `n^(n-2)` items.
pub fn prufer_sequences(n: usize) -> impl Iterator<Item = Vec<Vertex>> {
    let len = n.saturating_sub(2);
    let total = if n < 2 { 0 } else { n.pow(len as u32) };
    (0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        seq
    })
}

/// All labelled trees on `n ≥ 2` vertices (Cayley: `n^(n-2)` of them).
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    prufer_sequences(n).map(move |seq| prufer_decode(&seq, n).expect("valid sequence"))
}

/// All connected labelled graphs on `n` vertices, by filtering the `2^(n(n-1)/2)`
/// edge subsets. Practical up to `n = 6`.
pub fn all_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let subsets = 1u64 << pairs.len();
    (0..subsets).filter_map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).ok()
    })
}

/// Random connected graph on `n ≥ 1` vertices: a random spanning tree plus
/// each remaining pair independently with probability `extra`.
pub fn random_connected_graph(n: usize, extra: f64, seed: u64) -> Result<Graph, GraphError> {
    if n == 1 {
        return Graph::new(1, []);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree(n, rng.random())?;
    let more: Vec<(Vertex, Vertex)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(extra)).collect();
    Graph::new(n, tree.edges().chain(more))
}

/// Iterated Cartesian product of the given factors, row-major in factor order.
pub fn product_of(factors: &[Graph]) -> Graph {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter().fold(first.clone(), |acc, g| cartesian_product(&acc, g).into_flat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_trees() {
        for seed in 0..5 {
            assert_eq!(random_tree(2, seed).unwrap(), Graph::new(2, [(0, 1)]).unwrap());
        }
        assert!(random_tree(1, 0).is_err());
        assert!(path_graph(1).is_err());
    }

    #[test]
    fn random_trees_are_trees_and_reproducible() {
        for n in 2..12 {
            for seed in 0..20 {
                let t = random_tree(n, seed).unwrap();
                assert_eq!(t.edge_count(), n - 1);
                assert_eq!(t, random_tree(n, seed).unwrap());
            }
        }
    }

    #[test]
    fn grid_and_star_shapes() {
        let g = grid_graph(3, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.diameter()), (9, 12, 4));
        assert_eq!(grid_graph(1, 1).unwrap().vertex_count(), 1);
        let s = star_graph(3).unwrap();
        assert_eq!(s.degree(0), 3);
        assert_eq!(cycle_graph(4).unwrap().edge_count(), 4);
    }

    #[test]
    fn cayley_counts() {
        for n in 2..=6 {
            let trees: HashSet<Graph> = all_labeled_trees(n).collect();
            assert_eq!(trees.len(), n.pow(n as u32 - 2), "Prüfer decoding is a bijection");
        }
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A001187: connected labelled graphs
        let expected = [1, 1, 4, 38, 728];
        for (n, &count) in (1..=5).zip(expected.iter()) {
            assert_eq!(all_connected_graphs(n).count(), count);
        }
    }

    #[test]
    fn known_prufer_decoding() {
        // sequence [3, 3, 3] on 5 vertices is the star centred at 3
        let t = prufer_decode(&[3, 3, 3], 5).unwrap();
        assert_eq!(t.degree(3), 4);
    }

    #[test]
    fn iterated_product() {
        let p2 = path_graph(2).unwrap();
        let cube = product_of(&[p2.clone(), p2.clone(), p2]);
        assert_eq!((cube.vertex_count(), cube.edge_count(), cube.diameter()), (8, 12, 3));
    }
}
