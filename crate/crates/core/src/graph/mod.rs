//! Canonical undirected graphs, unit-disk graph generation and the
//! (connected) dominating set predicates.

mod file;
mod geo;

pub use file::GraphFile;
pub use geo::{generate_connected_udg, generate_udg, mix64, GeoGraph};

use crate::{Error, Result};

/// Node identifier, dense in `0..n`. Id order is used for every tie-break.
pub type NodeId = u32;

/// A simple undirected graph with sorted, deduplicated adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds the canonical graph on `n` nodes. Duplicate edges (in either
    /// orientation) collapse into one; the input order does not matter.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::NodeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        let mut twice_edges = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice_edges += list.len();
        }
        Ok(Self {
            adjacency,
            edge_count: twice_edges / 2,
        })
    }

    /// Graph on `n` nodes without edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn nodes(&self) -> impl DoubleEndedIterator<Item = NodeId> + ExactSizeIterator + '_ {
        (0..self.adjacency.len()).map(|v| v as NodeId)
    }

    pub fn contains_node(&self, v: NodeId) -> bool {
        (v as usize) < self.adjacency.len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.contains_node(u) && self.contains_node(v) && self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as NodeId;
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() <= 1
    }
}

/// Canonicalizes an edge list into a [`Graph`].
pub fn build_graph(n: usize, edges: &[(NodeId, NodeId)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

/// Maximal connected node sets, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<NodeId>> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    let mut stack = Vec::new();
    for start in g.nodes() {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        stack.push(start);
        let mut block = Vec::new();
        while let Some(u) = stack.pop() {
            block.push(u);
            for &v in g.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    blocks
}

fn membership(g: &Graph, s: &[NodeId]) -> Option<Vec<bool>> {
    let mut member = vec![false; g.node_count()];
    for &v in s {
        if !g.contains_node(v) {
            return None;
        }
        member[v as usize] = true;
    }
    Some(member)
}

fn dominates(g: &Graph, member: &[bool]) -> bool {
    g.nodes()
        .all(|v| member[v as usize] || g.neighbors(v).iter().any(|&u| member[u as usize]))
}

/// Number of blocks of the subgraph induced by `member`.
fn induced_block_count(g: &Graph, member: &[bool]) -> usize {
    let mut seen = vec![false; g.node_count()];
    let mut stack = Vec::new();
    let mut blocks = 0;
    for start in g.nodes() {
        if !member[start as usize] || seen[start as usize] {
            continue;
        }
        blocks += 1;
        seen[start as usize] = true;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if member[v as usize] && !seen[v as usize] {
                    seen[v as usize] = true;
                    stack.push(v);
                }
            }
        }
    }
    blocks
}

/// True iff every node is in `s` or adjacent to a node of `s`.
/// Ids outside the graph make the set invalid.
pub fn is_dominating_set(g: &Graph, s: &[NodeId]) -> bool {
    membership(g, s).is_some_and(|member| dominates(g, &member))
}

/// True iff `s` dominates `g` and induces a connected subgraph. Sets with at
/// most one node count as connected.
pub fn is_connected_dominating_set(g: &Graph, s: &[NodeId]) -> bool {
    match membership(g, s) {
        Some(member) => dominates(g, &member) && induced_block_count(g, &member) <= 1,
        None => false,
    }
}

/// The per-component form of [`is_connected_dominating_set`]: `s` dominates
/// `g` and, within every connected component, `s` restricted to that
/// component is nonempty and induces a connected subgraph.
///
/// On a connected graph this is the same as [`is_connected_dominating_set`].
pub fn is_cds_per_component(g: &Graph, s: &[NodeId]) -> bool {
    let Some(member) = membership(g, s) else {
        return false;
    };
    if !dominates(g, &member) {
        return false;
    }
    // Every component holds a member (domination) and induced blocks never
    // span components, so equal counts mean one block per component.
    induced_block_count(g, &member) == connected_components(g).len()
}
