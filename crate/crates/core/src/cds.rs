//! Turning a dominating set into a connected dominating set by growing a
//! tree from the smallest dominator and splicing in the cheapest connectors.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::graph::{connected_components, is_dominating_set, Graph, NodeId};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCds {
    /// Component members, sorted.
    pub nodes: Vec<NodeId>,
    pub root: NodeId,
    /// The component's share of the CDS, sorted.
    pub cds: Vec<NodeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CdsResult {
    /// Sorted CDS, a superset of the input dominating set.
    pub cds: Vec<NodeId>,
    /// Nodes added to connect the input set, sorted.
    pub connectors: Vec<NodeId>,
    /// One root per component, in component order.
    pub roots: Vec<NodeId>,
    pub per_component: Vec<ComponentCds>,
}

/// Path cost: nodes outside the augmented set entered, then hop count.
type Cost = (u32, u32);

/// Cheapest path from `from` into `target_tree`.
///
/// Entering a node of `in_set` is free and entering any other node costs one.
/// Among paths of minimum cost the one with fewest hops wins, then the
/// lexicographically smallest id sequence. The returned path omits `from` and
/// ends at the first tree node it reaches.
pub fn connector_path(g: &Graph, in_set: &[bool], from: NodeId, target_tree: &[bool]) -> Result<Vec<NodeId>> {
    let n = g.node_count();
    if in_set.len() != n || target_tree.len() != n {
        return Err(Error::InvalidParameter(format!(
            "node masks must have length {n}"
        )));
    }
    if !g.contains_node(from) {
        return Err(Error::UnknownNode(from, n));
    }
    if target_tree[from as usize] {
        return Ok(Vec::new());
    }
    let entry = |v: NodeId| -> Cost { (u32::from(!in_set[v as usize]), 1) };

    // Remaining cost from every node to the tree, multi-source from the tree.
    let mut to_tree: Vec<Option<Cost>> = vec![None; n];
    let mut heap = BinaryHeap::new();
    for v in g.nodes().filter(|&v| target_tree[v as usize]) {
        to_tree[v as usize] = Some((0, 0));
        heap.push(Reverse(((0, 0), v)));
    }
    while let Some(Reverse((cost, w))) = heap.pop() {
        if to_tree[w as usize] != Some(cost) {
            continue;
        }
        // stepping v -> w pays to enter w
        let step = entry(w);
        let via = (cost.0 + step.0, cost.1 + step.1);
        for &v in g.neighbors(w) {
            if to_tree[v as usize].is_none_or(|c| via < c) {
                to_tree[v as usize] = Some(via);
                heap.push(Reverse((via, v)));
            }
        }
    }

    let Some(mut remaining) = to_tree[from as usize] else {
        return Err(Error::NoPath(from));
    };
    // Walk forward along the smallest id that stays on an optimal path.
    let mut path = Vec::new();
    let mut at = from;
    while !target_tree[at as usize] {
        let next = g
            .neighbors(at)
            .iter()
            .copied()
            .find(|&w| {
                to_tree[w as usize].is_some_and(|c| {
                    let e = entry(w);
                    (c.0 + e.0, c.1 + e.1) == remaining
                })
            })
            .expect("an optimal successor exists");
        remaining = to_tree[next as usize].unwrap();
        path.push(next);
        at = next;
    }
    Ok(path)
}

/// Nodes connected to `root` inside the subgraph induced by `in_set`.
fn grow_tree(g: &Graph, in_set: &[bool], root: NodeId, tree: &mut [bool]) {
    let mut stack = vec![root];
    tree[root as usize] = true;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if in_set[v as usize] && !tree[v as usize] {
                tree[v as usize] = true;
                stack.push(v);
            }
        }
    }
}

/// Connects the dominating set `ds` within every component of `g`.
///
/// Each component is rooted at its smallest dominator. The remaining
/// dominators are visited in ascending id order; one that is not yet joined to
/// the root's tree through the current set gets a [`connector_path`] to the
/// tree, and the path's new nodes join the set as connectors. Paths stop at
/// the first tree node, so the connectors never close a loop.
pub fn edc_cds(g: &Graph, ds: &[NodeId]) -> Result<CdsResult> {
    if !is_dominating_set(g, ds) {
        return Err(Error::NotDominating);
    }
    let n = g.node_count();
    let mut in_set = vec![false; n];
    for &v in ds {
        in_set[v as usize] = true;
    }
    let mut roots = Vec::new();
    let mut per_component = Vec::new();
    let mut tree = vec![false; n];
    for nodes in connected_components(g) {
        let members: Vec<NodeId> = nodes.iter().copied().filter(|&v| in_set[v as usize]).collect();
        let Some(&root) = members.first() else {
            return Err(Error::ComponentWithoutDominator(nodes[0]));
        };
        grow_tree(g, &in_set, root, &mut tree);
        for &v in &members[1..] {
            if tree[v as usize] {
                continue;
            }
            for w in connector_path(g, &in_set, v, &tree)? {
                in_set[w as usize] = true;
            }
            // the path links v's block to the tree
            grow_tree(g, &in_set, root, &mut tree);
        }
        roots.push(root);
        per_component.push(ComponentCds {
            cds: nodes.iter().copied().filter(|&v| in_set[v as usize]).collect(),
            nodes,
            root,
        });
    }
    let mut original = vec![false; n];
    for &v in ds {
        original[v as usize] = true;
    }
    let cds: Vec<NodeId> = g.nodes().filter(|&v| in_set[v as usize]).collect();
    let connectors = cds.iter().copied().filter(|&v| !original[v as usize]).collect();
    Ok(CdsResult {
        cds,
        connectors,
        roots,
        per_component,
    })
}
