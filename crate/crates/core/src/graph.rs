//! Undirected simple connected graphs in adjacency-list form.
//!
//! Every game in this crate is played on a [`Graph`]. Construction validates
//! the graph (no self-loops, ids in range, connected), so the rest of the
//! crate can assume those properties without re-checking them.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

/// Vertex ids are dense indices `0..vertex_count`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("graph is disconnected: vertex {unreached} is not reachable from vertex 0")]
    Disconnected { unreached: Vertex },
    #[error("graph is not a tree ({edges} edges on {vertices} vertices)")]
    NotATree { vertices: usize, edges: usize },
    #[error("{kind} needs at least {min} vertices, got {n}")]
    TooSmall { kind: &'static str, min: usize, n: usize },
    #[error("tree has diameter 0; a single vertex has no longest path")]
    TrivialTree,
    #[error("cannot step from vertex {0} toward itself")]
    StepToSelf(Vertex),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a validated graph on `n` vertices. Duplicate edges (in either
    /// orientation) are merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let graph = Graph { adjacency };
        let dist = graph.bfs_distances(0);
        if let Some(unreached) = dist.iter().position(|&d| d == usize::MAX) {
            return Err(GraphError::Disconnected { unreached });
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// N(u), sorted ascending.
    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adjacency[u]
    }

    /// N[u] = N(u) ∪ {u}, sorted ascending.
    pub fn closed_neighbors(&self, u: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.adjacency[u].len() + 1);
        let split = self.adjacency[u].partition_point(|&w| w < u);
        out.extend_from_slice(&self.adjacency[u][..split]);
        out.push(u);
        out.extend_from_slice(&self.adjacency[u][split..]);
        out
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adjacency[u].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// True when `to` is `from` or one of its neighbours, i.e. a legal move.
    pub fn is_legal_step(&self, from: Vertex, to: Vertex) -> bool {
        from == to || self.is_adjacent(from, to)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.vertex_count()
    }

    /// Shortest-path distances from `s`. Unreachable vertices (impossible
    /// for a validated graph) would read `usize::MAX`.
    pub fn bfs_distances(&self, s: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        self.bfs_distances(u)[v]
    }

    pub fn eccentricity(&self, u: Vertex) -> usize {
        self.bfs_distances(u).into_iter().max().unwrap_or(0)
    }

    /// Exact diameter by BFS from every vertex.
    pub fn diameter(&self) -> usize {
        (0..self.vertex_count()).map(|u| self.eccentricity(u)).max().unwrap_or(0)
    }

    /// Tree diameter by double BFS. Agrees with [`Graph::diameter`] on trees.
    pub fn tree_diameter(&self) -> Result<usize, GraphError> {
        self.require_tree()?;
        let (far, _) = farthest(&self.bfs_distances(0));
        Ok(farthest(&self.bfs_distances(far)).1)
    }

    /// A longest path `a_1, …, a_{d+1}` of a tree, found by double BFS.
    /// Ties between equally far vertices go to the smallest id.
    pub fn diametral_path(&self) -> Result<Vec<Vertex>, GraphError> {
        self.require_tree()?;
        if self.vertex_count() < 2 {
            return Err(GraphError::TrivialTree);
        }
        let (start, _) = farthest(&self.bfs_distances(0));
        let from_start = self.bfs_distances(start);
        let (end, d) = farthest(&from_start);
        let mut path = Vec::with_capacity(d + 1);
        let mut cur = end;
        path.push(cur);
        while cur != start {
            cur = *self.adjacency[cur]
                .iter()
                .find(|&&w| from_start[w] + 1 == from_start[cur])
                .expect("BFS layers are contiguous");
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    /// The neighbour of `from` on a shortest `(from, to)` path. On a tree this
    /// is the unique next vertex of the path; elsewhere the smallest id wins.
    pub fn step_toward(&self, from: Vertex, to: Vertex) -> Result<Vertex, GraphError> {
        if from == to {
            return Err(GraphError::StepToSelf(from));
        }
        let dist = self.bfs_distances(to);
        Ok(*self.adjacency[from]
            .iter()
            .find(|&&w| dist[w] + 1 == dist[from])
            .expect("connected graph has a shortest path"))
    }

    pub(crate) fn require_tree(&self) -> Result<(), GraphError> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(GraphError::NotATree { vertices: self.vertex_count(), edges: self.edge_count() })
        }
    }

    /// Parses the line format `n m` followed by `m` lines of `u v`.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(GraphError::Parse { line: 0, message: "missing header".into() })?;
        let [n, m] = parse_pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            let [u, v] = parse_pair(line, body)?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 1,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], GraphError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Parse { line, message: format!("expected two integers, got {text:?}") });
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|e| GraphError::Parse { line, message: format!("{s:?}: {e}") });
    Ok([parse(fields[0])?, parse(fields[1])?])
}

/// (vertex, distance) of the farthest vertex; smallest id on ties.
fn farthest(dist: &[usize]) -> (Vertex, usize) {
    dist.iter().enumerate().fold((0, 0), |best, (v, &d)| if d > best.1 { (v, d) } else { best })
}

/// All-pairs distances with shortest-path next hops, for graphs small enough
/// to afford `|V|²` entries.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    next: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut dist = vec![0u32; n * n];
        for s in 0..n {
            for (t, d) in g.bfs_distances(s).into_iter().enumerate() {
                dist[s * n + t] = d as u32;
            }
        }
        let mut next = vec![0u32; n * n];
        for from in 0..n {
            for to in 0..n {
                next[from * n + to] = if from == to {
                    from as u32
                } else {
                    *g.neighbors(from)
                        .iter()
                        .find(|&&w| dist[w * n + to] + 1 == dist[from * n + to])
                        .expect("shortest path exists") as u32
                };
            }
        }
        DistanceMatrix { n, dist, next }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// Smallest-id neighbour of `from` one step closer to `to`; `from` itself
    /// when `from == to`.
    pub fn next_hop(&self, from: Vertex, to: Vertex) -> Vertex {
        self.next[from * self.n + to] as usize
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn builds_single_edge_and_cycle() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.neighbors(0) == [1, 3]);
        assert!(!c4.is_tree());
    }

    #[test]
    fn rejects_defects() {
        assert_eq!(Graph::new(3, [(0, 1)]), Err(GraphError::Disconnected { unreached: 2 }));
        assert_eq!(Graph::new(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(GraphError::OutOfRange { .. })));
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn deduplicates_edges() {
        let g = Graph::new(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(path(4).bfs_distances(0), vec![0, 1, 2, 3]);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.bfs_distances(0), vec![0, 1, 2, 1]);
    }

    #[test]
    fn diameters() {
        for n in 1..8 {
            assert_eq!(path(n).diameter(), n - 1);
        }
        assert_eq!(path(2).tree_diameter().unwrap(), 1);
        assert!(Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap().tree_diameter().is_err());
    }

    #[test]
    fn diametral_path_examples() {
        let p = path(3).diametral_path().unwrap();
        assert!(p == [0, 1, 2] || p == [2, 1, 0]);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = star.diametral_path().unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p[1], 0);
        assert_ne!(p[0], p[2]);
        assert_eq!(Graph::new(1, []).unwrap().diametral_path(), Err(GraphError::TrivialTree));
    }

    #[test]
    fn closed_neighbourhood_is_sorted() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.closed_neighbors(0), vec![0, 1, 2, 3]);
        assert_eq!(star.closed_neighbors(2), vec![0, 2]);
    }

    #[test]
    fn step_toward_examples() {
        let p = path(4);
        assert_eq!(p.step_toward(0, 3).unwrap(), 1);
        assert_eq!(p.step_toward(2, 1).unwrap(), 1);
        assert_eq!(p.step_toward(2, 2), Err(GraphError::StepToSelf(2)));
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.step_toward(1, 2).unwrap(), 0);
    }

    #[test]
    fn distance_matrix_matches_bfs() {
        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let m = DistanceMatrix::new(&c5);
        for u in 0..5 {
            let d = c5.bfs_distances(u);
            for v in 0..5 {
                assert_eq!(m.get(u, v), d[v]);
                if u != v {
                    let w = m.next_hop(u, v);
                    assert!(c5.is_adjacent(u, w));
                    assert_eq!(m.get(w, v) + 1, m.get(u, v));
                }
            }
        }
        assert_eq!(m.diameter(), 2);
    }

    #[test]
    fn text_round_trip_and_comments() {
        let text = "# a path\n3 2\n0 1\n\n# middle\n1 2\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(g.to_text(), "3 2\n0 1\n1 2\n");
        assert!(matches!(Graph::parse("3 2\n0 1\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(Graph::parse("2 1\n0 x\n"), Err(GraphError::Parse { line: 2, .. })));
    }
}
