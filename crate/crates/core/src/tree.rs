//! Rooted trees: parents, depths, heights and the descendant relation.

use crate::graph::{Graph, GraphError, Vertex};

/// A tree with a designated root.
///
/// `height[v]` is the largest distance from `v` to a childless descendant of
/// `v`. "Leaf" here always means childless in the rooted sense, so the root of
/// a path counts as internal even though it has degree one; heights therefore
/// strictly decrease along every parent-to-child edge.
#[derive(Debug, Clone)]
pub struct RootedTree {
    base: Graph,
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    depth: Vec<usize>,
    height: Vec<usize>,
    // Entry/exit times of a DFS from the root: anc is an ancestor of v iff
    // enter[anc] <= enter[v] && exit[v] <= exit[anc].
    enter: Vec<usize>,
    exit: Vec<usize>,
}

impl RootedTree {
    pub fn new(tree: &Graph, root: Vertex) -> Result<Self, GraphError> {
        tree.require_tree()?;
        let n = tree.vertex_count();
        if root >= n {
            return Err(GraphError::OutOfRange { u: root, v: root, n });
        }
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut enter = vec![0; n];
        let mut exit = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut clock = 0;
        // (vertex, next neighbour index)
        let mut stack = vec![(root, 0usize)];
        enter[root] = clock;
        clock += 1;
        order.push(root);
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            if let Some(&w) = tree.neighbors(u).get(*idx) {
                *idx += 1;
                if Some(w) == parent[u] {
                    continue;
                }
                parent[w] = Some(u);
                children[u].push(w);
                depth[w] = depth[u] + 1;
                enter[w] = clock;
                clock += 1;
                order.push(w);
                stack.push((w, 0));
            } else {
                exit[u] = clock;
                clock += 1;
                stack.pop();
            }
        }
        let mut height = vec![0; n];
        for &u in order.iter().rev() {
            if let Some(p) = parent[u] {
                height[p] = height[p].max(height[u] + 1);
            }
        }
        Ok(RootedTree { base: tree.clone(), root, parent, children, depth, height, enter, exit })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    pub fn height(&self, v: Vertex) -> usize {
        self.height[v]
    }

    /// True iff `anc` lies on the path from the root to `v` (inclusive).
    pub fn is_descendant(&self, anc: Vertex, v: Vertex) -> bool {
        self.enter[anc] <= self.enter[v] && self.exit[v] <= self.exit[anc]
    }

    /// Tree distance via depths and the ancestor test; no BFS.
    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        let mut lca = u;
        while !self.is_descendant(lca, v) {
            lca = self.parent[lca].expect("root is an ancestor of everything");
        }
        self.depth[u] + self.depth[v] - 2 * self.depth[lca]
    }

    /// Next vertex on the unique `(from, to)` path.
    pub fn step_toward(&self, from: Vertex, to: Vertex) -> Result<Vertex, GraphError> {
        if from == to {
            return Err(GraphError::StepToSelf(from));
        }
        if self.is_descendant(from, to) {
            // go down: the child of `from` whose subtree holds `to`
            Ok(*self.children[from]
                .iter()
                .find(|&&c| self.is_descendant(c, to))
                .expect("a proper descendant sits below some child"))
        } else {
            Ok(self.parent[from].expect("non-ancestor has a parent"))
        }
    }
}
