//! Immutable simple undirected graphs and structural queries.
//!
//! Nodes are the indices `0..n`. Edges are stored both as a sorted list of
//! `(u, v)` pairs with `u < v` and as per-node ascending adjacency lists.
//! Values are immutable after construction and safe to share across threads.

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build a graph on `n` nodes from an edge list.
    ///
    /// Duplicate edges collapse silently; self-loops and out-of-range
    /// endpoints are errors. `n = 0` is rejected.
    pub fn build(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency, edges })
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Whether `u` and `v` are adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`] order, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Maximum degree Δ; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether the graph consists of a single connected component.
    /// Vacuously true for a single node.
    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Whether the graph is Eulerian: connected with every degree even.
    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.adjacency.iter().all(|a| a.len() % 2 == 0)
    }

    /// Two-colour the nodes if possible. Within each connected component the
    /// lowest-index node goes on side 0.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.node_count();
        let mut side = vec![usize::MAX; n];
        for start in 0..n {
            if side[start] != usize::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbours(v) {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition {
            side: side.into_iter().map(|s| s as u8).collect(),
        })
    }

    /// A maximal-by-inclusion clique via deterministic multi-start greedy
    /// extension: every node seeds one run, candidates are tried in
    /// (descending degree, ascending index) order, and the largest result
    /// wins. O(n·Δ²) overall.
    pub fn greedy_clique(&self) -> CliqueResult {
        let n = self.node_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let rank: Vec<usize> = {
            let mut r = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                r[v] = i;
            }
            r
        };

        let mut best: Vec<usize> = Vec::new();
        for seed in 0..n {
            let mut clique = vec![seed];
            let mut candidates: Vec<usize> = self.neighbours(seed).to_vec();
            candidates.sort_by_key(|&v| rank[v]);
            for u in candidates {
                if clique.iter().all(|&c| self.has_edge(u, c)) {
                    clique.push(u);
                }
            }
            if clique.len() > best.len() {
                best = clique;
            }
        }
        best.sort_unstable();
        CliqueResult { members: best }
    }
}

/// A two-sided node partition witnessing bipartiteness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    /// Per-node side label, 0 or 1. Every edge joins side 0 to side 1.
    pub side: Vec<u8>,
}

/// A clique found by the greedy multi-start heuristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    /// Node indices, ascending; all pairs adjacent in the host graph.
    pub members: Vec<usize>,
}

impl CliqueResult {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}
