//! Undirected communication graph.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-round communication graph: which agents exchange messages.
///
/// Edges are symmetric and self-loops are rejected, so a node's neighbor
/// set never contains the node itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommGraph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl CommGraph {
    /// An edgeless graph on `n` nodes.
    pub fn new(n: usize) -> Self {
        Self {
            adjacency: vec![BTreeSet::new(); n],
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut graph = Self::new(n);
        for &(a, b) in edges {
            graph.add_edge(a, b)?;
        }
        Ok(graph)
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        let mut graph = Self::new(n);
        for a in 0..n {
            for b in (a + 1)..n {
                graph.add_edge(a, b).expect("distinct in-range nodes");
            }
        }
        graph
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.node_count();
        if a == b {
            return Err(Error::InvalidTopology(format!("self-loop at node {a}")));
        }
        if a >= n || b >= n {
            return Err(Error::InvalidTopology(format!(
                "edge ({a}, {b}) out of range for {n} nodes"
            )));
        }
        self.adjacency[a].insert(b);
        self.adjacency[b].insert(a);
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    /// Neighbors of `node` in ascending id order; never contains `node`.
    pub fn neighbors(&self, node: usize) -> &BTreeSet<usize> {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency.get(a).is_some_and(|s| s.contains(&b))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }
}
