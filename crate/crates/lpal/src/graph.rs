use crate::error::{Error, Result};

/// An undirected simple graph with vertices `0..n`.
///
/// Edges are identified by their index in insertion order; endpoints are
/// stored with the smaller vertex first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<[usize; 2]>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut g = Graph {
            n: vertex_count,
            edges: Vec::new(),
            adj: vec![Vec::new(); vertex_count],
        };
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if g.edge_between(u, v).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            let e = g.edges.len();
            g.edges.push([u.min(v), u.max(v)]);
            g.adj[u].push((v, e));
            g.adj[v].push((u, e));
        }
        Ok(g)
    }

    /// A path graph `0 - 1 - ... - (n-1)`.
    pub fn path(vertex_count: usize) -> Graph {
        Graph::new(vertex_count, (1..vertex_count).map(|v| (v - 1, v))).unwrap()
    }

    /// A star with center `0` and leaves `1..=leaf_count`.
    pub fn star(leaf_count: usize) -> Graph {
        Graph::new(leaf_count + 1, (1..=leaf_count).map(|v| (0, v))).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, edge: usize) -> [usize; 2] {
        self.edges[edge]
    }

    pub fn edges(&self) -> impl Iterator<Item = [usize; 2]> + '_ {
        self.edges.iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` as `(neighbor, edge index)` pairs, in insertion order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// The center of a star `K_{1,m}` with `m >= 1` leaves. For a single
    /// edge both vertices qualify; the smaller index wins.
    pub fn star_center(&self) -> Option<usize> {
        if !self.is_tree() || self.n < 2 {
            return None;
        }
        (0..self.n).find(|&v| self.degree(v) == self.n - 1)
    }

    /// The unique path between two vertices of a tree, as a vertex sequence.
    ///
    /// Uses BFS, so on a non-tree graph it returns some shortest path.
    pub fn tree_path(&self, from: usize, to: usize) -> Vec<usize> {
        if from == to {
            return vec![from];
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::from([from]);
        parent[from] = from;
        'bfs: while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    if w == to {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        assert_ne!(parent[to], usize::MAX, "vertices in different components");
        let mut path = vec![to];
        while *path.last().unwrap() != from {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn star_and_tree_recognition() {
        assert_eq!(Graph::star(4).star_center(), Some(0));
        assert_eq!(Graph::new(2, [(0, 1)]).unwrap().star_center(), Some(0));
        assert_eq!(Graph::path(4).star_center(), None);
        assert!(Graph::path(6).is_tree());
        let disconnected = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!disconnected.is_tree());
        let cycle = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!cycle.is_tree());
    }

    #[test]
    fn tree_path_endpoints() {
        let g = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.tree_path(2, 4), vec![2, 1, 3, 4]);
        assert_eq!(g.tree_path(0, 0), vec![0]);
    }
}
