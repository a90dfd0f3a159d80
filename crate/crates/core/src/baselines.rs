//! Comparison algorithms: greedy max-coverage DS, Wu–Li marking with pruning
//! rules 1 and 2, and greedy connected growth.
//!
//! These are the textbook members of each family. All three work per
//! connected component and break ties by the smaller id.

use crate::graph::{connected_components, Graph, NodeId};

#[cfg(debug_assertions)]
use crate::graph::is_cds_per_component;

/// Closed neighborhood `N[v]`, in ascending order.
fn closed_neighbors(g: &Graph, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
    let list = g.neighbors(v);
    let split = list.partition_point(|&u| u < v);
    list[..split]
        .iter()
        .copied()
        .chain(std::iter::once(v))
        .chain(list[split..].iter().copied())
}

/// Repeatedly picks the node covering the most still-uncovered nodes of its
/// closed neighborhood.
pub fn greedy_ds(g: &Graph) -> Vec<NodeId> {
    let n = g.node_count();
    let mut covered = vec![false; n];
    let mut chosen = Vec::new();
    let mut left = n;
    while left > 0 {
        let gain = |v: NodeId| closed_neighbors(g, v).filter(|&u| !covered[u as usize]).count();
        // max_by_key keeps the last maximum; scan ids in reverse to keep the first
        let best = g.nodes().rev().max_by_key(|&v| gain(v)).expect("nodes remain");
        for u in closed_neighbors(g, best) {
            if !covered[u as usize] {
                covered[u as usize] = true;
                left -= 1;
            }
        }
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

fn is_subset(small: &[NodeId], big: &[NodeId]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

/// Wu–Li marking process with the two id-priority pruning rules.
///
/// A node is marked when two of its neighbors are not adjacent to each
/// other. Marked nodes are then visited in ascending id order:
///
/// * Rule 1 unmarks `v` if a marked neighbor `u > v` has `N[v] ⊆ N[u]`.
/// * Rule 2 unmarks `v` if two adjacent marked neighbors `u, w > v` have
///   `N(v) ⊆ N(u) ∪ N(w)`.
///
/// A component where nothing gets marked (a clique, or a single node) is
/// represented by its smallest node.
pub fn wu_li_cds(g: &Graph) -> Vec<NodeId> {
    let mut marked: Vec<bool> = g
        .nodes()
        .map(|v| {
            let nb = g.neighbors(v);
            nb.iter()
                .enumerate()
                .any(|(i, &a)| nb[i + 1..].iter().any(|&b| !g.has_edge(a, b)))
        })
        .collect();

    let closed: Vec<Vec<NodeId>> = g.nodes().map(|v| closed_neighbors(g, v).collect()).collect();
    for v in g.nodes() {
        if !marked[v as usize] {
            continue;
        }
        let higher: Vec<NodeId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| u > v && marked[u as usize])
            .collect();
        let rule1 = higher
            .iter()
            .any(|&u| is_subset(&closed[v as usize], &closed[u as usize]));
        let rule2 = || {
            higher.iter().enumerate().any(|(i, &u)| {
                higher[i + 1..].iter().any(|&w| {
                    g.has_edge(u, w)
                        && g.neighbors(v)
                            .iter()
                            .all(|&x| x == u || x == w || g.has_edge(x, u) || g.has_edge(x, w))
                })
            })
        };
        if rule1 || rule2() {
            marked[v as usize] = false;
            #[cfg(debug_assertions)]
            debug_assert!(
                is_cds_per_component(g, &with_fallback(g, &marked)),
                "pruning node {v} broke the backbone"
            );
        }
    }
    with_fallback(g, &marked)
}

fn with_fallback(g: &Graph, marked: &[bool]) -> Vec<NodeId> {
    let mut out = Vec::new();
    for block in connected_components(g) {
        let before = out.len();
        out.extend(block.iter().copied().filter(|&v| marked[v as usize]));
        if out.len() == before {
            out.push(block[0]);
        }
    }
    out.sort_unstable();
    out
}

/// Greedy connected growth: start at the highest-degree node of each
/// component and keep adding the frontier node that covers the most
/// uncovered nodes until the component is dominated.
pub fn das_cds(g: &Graph) -> Vec<NodeId> {
    let n = g.node_count();
    let mut covered = vec![false; n];
    let mut in_set = vec![false; n];
    let mut out = Vec::new();
    for block in connected_components(g) {
        let start = block
            .iter()
            .copied()
            .rev()
            .max_by_key(|&v| g.degree(v))
            .expect("components are nonempty");
        let mut left = block.len();
        let mut add = |v: NodeId, covered: &mut [bool], in_set: &mut [bool]| {
            in_set[v as usize] = true;
            for u in closed_neighbors(g, v) {
                if !covered[u as usize] {
                    covered[u as usize] = true;
                    left -= 1;
                }
            }
            left
        };
        let mut remaining = add(start, &mut covered, &mut in_set);
        out.push(start);
        while remaining > 0 {
            // frontier = covered non-members; they are exactly the neighbors of the set
            let best = block
                .iter()
                .copied()
                .rev()
                .filter(|&v| covered[v as usize] && !in_set[v as usize])
                .max_by_key(|&v| closed_neighbors(g, v).filter(|&u| !covered[u as usize]).count())
                .expect("a connected component always has a frontier");
            remaining = add(best, &mut covered, &mut in_set);
            out.push(best);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n as NodeId).map(|v| (v - 1, v))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves as NodeId).map(|v| (0, v))).unwrap()
    }

    fn triangle() -> Graph {
        build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn closed_neighborhood_is_sorted() {
        let g = star(3);
        assert_eq!(closed_neighbors(&g, 2).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(closed_neighbors(&g, 0).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn greedy_ds_examples() {
        assert_eq!(greedy_ds(&star(4)), vec![0]);
        assert_eq!(greedy_ds(&path(3)), vec![1]);
        // 0 covers {3, 0, 1}; 1, 2 and 3 then each cover only node 2, so the
        // smallest id wins
        let c4 = build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(greedy_ds(&c4), vec![0, 1]);
        assert_eq!(greedy_ds(&Graph::empty(2)), vec![0, 1]);
    }

    #[test]
    fn wu_li_examples() {
        assert_eq!(wu_li_cds(&path(4)), vec![1, 2]);
        assert_eq!(wu_li_cds(&star(4)), vec![0]);
        assert_eq!(wu_li_cds(&triangle()), vec![0]);
        assert_eq!(wu_li_cds(&Graph::empty(2)), vec![0, 1]);
    }

    #[test]
    fn wu_li_marking_and_rule1() {
        // only 1 has a non-adjacent neighbor pair (0, 3)
        let g = build_graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3)]).unwrap();
        assert_eq!(wu_li_cds(&g), vec![1]);
        // square with a diagonal: 0 and 2 are marked, N[0] = N[2], 0 yields to 2
        let g = build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(wu_li_cds(&g), vec![2]);
    }

    #[test]
    fn wu_li_rule2_prunes() {
        // v=0 adjacent to 1,2,3,4; 1-2 connected; 1 covers 3, 2 covers 4;
        // 1 ~ 5 and 2 ~ 6 keep 1 and 2 marked.
        let g = build_graph(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (2, 4),
                (1, 5),
                (2, 6),
            ],
        )
        .unwrap();
        let s = wu_li_cds(&g);
        assert!(!s.contains(&0));
        assert!(crate::graph::is_connected_dominating_set(&g, &s));
    }

    #[test]
    fn das_examples() {
        assert_eq!(das_cds(&star(4)), vec![0]);
        assert_eq!(das_cds(&path(5)), vec![1, 2, 3]);
        assert_eq!(das_cds(&triangle()), vec![0]);
        assert_eq!(das_cds(&Graph::empty(3)), vec![0, 1, 2]);
    }
}
