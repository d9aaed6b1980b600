//! Cartesian products `G □ H`.

use crate::graph::{Graph, Vertex};

/// `G □ H` with its flat vertex numbering. Flat ids are row-major:
/// `(i, j) ↦ i·|V(H)| + j`.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    factor1: Graph,
    factor2: Graph,
    flat: Graph,
}

impl ProductGraph {
    pub fn new(g: &Graph, h: &Graph) -> Self {
        let (n1, n2) = (g.vertex_count(), h.vertex_count());
        let id = |i: Vertex, j: Vertex| i * n2 + j;
        let mut edges = Vec::with_capacity(n1 * h.edge_count() + n2 * g.edge_count());
        for i in 0..n1 {
            for j in 0..n2 {
                for &j2 in h.neighbors(j).iter().filter(|&&j2| j2 > j) {
                    edges.push((id(i, j), id(i, j2)));
                }
                for &i2 in g.neighbors(i).iter().filter(|&&i2| i2 > i) {
                    edges.push((id(i, j), id(i2, j)));
                }
            }
        }
        let flat = Graph::new(n1 * n2, edges).expect("product of connected graphs is connected");
        ProductGraph { factor1: g.clone(), factor2: h.clone(), flat }
    }

    pub fn factor1(&self) -> &Graph {
        &self.factor1
    }

    pub fn factor2(&self) -> &Graph {
        &self.factor2
    }

    pub fn flat(&self) -> &Graph {
        &self.flat
    }

    pub fn into_flat(self) -> Graph {
        self.flat
    }

    pub fn pair_of(&self, v: Vertex) -> (Vertex, Vertex) {
        let n2 = self.factor2.vertex_count();
        (v / n2, v % n2)
    }

    pub fn flat_of(&self, i: Vertex, j: Vertex) -> Vertex {
        i * self.factor2.vertex_count() + j
    }
}

/// Shorthand for [`ProductGraph::new`].
pub fn cartesian_product(g: &Graph, h: &Graph) -> ProductGraph {
    ProductGraph::new(g, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::path_graph;

    #[test]
    fn two_paths_of_two_make_a_four_cycle() {
        let p = cartesian_product(&path_graph(2).unwrap(), &path_graph(2).unwrap());
        let c4 = Graph::new(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        assert_eq!(p.flat(), &c4);
        assert!(p.flat().edges().count() == 4 && (0..4).all(|v| p.flat().degree(v) == 2));
    }

    #[test]
    fn grid_counts() {
        for m in 2..6 {
            for n in 2..6 {
                let p = cartesian_product(&path_graph(m).unwrap(), &path_graph(n).unwrap());
                assert_eq!(p.flat().vertex_count(), m * n);
                assert_eq!(p.flat().edge_count(), m * (n - 1) + n * (m - 1));
            }
        }
    }

    #[test]
    fn diameter_is_additive_on_small_paths() {
        let p = cartesian_product(&path_graph(3).unwrap(), &path_graph(4).unwrap());
        assert_eq!(p.flat().diameter(), 5);
    }

    #[test]
    fn ids_and_pairs_are_inverse() {
        let p = cartesian_product(&path_graph(3).unwrap(), &path_graph(4).unwrap());
        for v in 0..12 {
            let (i, j) = p.pair_of(v);
            assert_eq!(p.flat_of(i, j), v);
        }
        assert_eq!(p.pair_of(5), (1, 1));
    }
}
