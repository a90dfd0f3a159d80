//! Edge dominating capability weights and the EDC dominating-set algorithms.
//!
//! An edge `(u, v)` dominates each endpoint fractionally: a node of degree
//! `d` is shared among its `d` incident edges, so the edge takes `1/d` of it.
//! The edge weight is `1/d_u + 1/d_v`. Both algorithms repeatedly take the
//! heaviest remaining edges as *dominant edges* and elect the endpoint with the
//! smaller share (the larger degree) as a dominator.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::graph::{Graph, NodeId};
use crate::{Error, Result};

/// Weight `1/du + 1/dv` of an edge whose endpoints have degrees `du`, `dv`.
///
/// Comparison is exact: `a < b` is decided by integer cross-multiplication.
#[derive(Clone, Copy, Debug)]
pub struct EdcWeight {
    du: u32,
    dv: u32,
}

impl EdcWeight {
    /// Both degrees must be at least one.
    pub fn new(du: u32, dv: u32) -> Option<Self> {
        (du >= 1 && dv >= 1).then_some(Self { du, dv })
    }

    pub fn degrees(self) -> (u32, u32) {
        (self.du, self.dv)
    }

    /// `(numerator, denominator)` in lowest terms.
    pub fn ratio(self) -> (u64, u64) {
        let (num, den) = self.unreduced();
        let g = gcd(num, den);
        (num / g, den / g)
    }

    pub fn value(self) -> f64 {
        1.0 / self.du as f64 + 1.0 / self.dv as f64
    }

    fn unreduced(self) -> (u64, u64) {
        let (du, dv) = (self.du as u64, self.dv as u64);
        (du + dv, du * dv)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PartialEq for EdcWeight {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for EdcWeight {}

impl PartialOrd for EdcWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EdcWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        let (an, ad) = self.unreduced();
        let (bn, bd) = other.unreduced();
        (an as u128 * bd as u128).cmp(&(bn as u128 * ad as u128))
    }
}

impl fmt::Display for EdcWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.ratio();
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

/// Weight of the edge `(u, v)` of `g`.
pub fn edge_weight(g: &Graph, u: NodeId, v: NodeId) -> Result<EdcWeight> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    Ok(EdcWeight::new(g.degree(u) as u32, g.degree(v) as u32).expect("edge endpoints have degree >= 1"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DsAlgorithm {
    #[serde(rename = "edc-ds")]
    Basic,
    #[serde(rename = "edc-ds-improved")]
    Improved,
}

impl DsAlgorithm {
    pub fn name(self) -> &'static str {
        match self {
            DsAlgorithm::Basic => "edc-ds",
            DsAlgorithm::Improved => "edc-ds-improved",
        }
    }

    pub fn run(self, g: &Graph) -> DsResult {
        match self {
            DsAlgorithm::Basic => edc_ds_basic(g),
            DsAlgorithm::Improved => edc_ds_improved(g),
        }
    }
}

/// One weight tier of the selection loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Iteration {
    /// Edges that became dominant in this iteration, sorted.
    pub dominant_edges: Vec<[NodeId; 2]>,
    /// Dominators elected in this iteration, sorted.
    pub dominators: Vec<NodeId>,
    /// Nodes still undominated when the iteration ends.
    pub undominated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DsResult {
    pub algorithm: DsAlgorithm,
    /// Sorted dominator ids, isolated nodes included.
    pub dominators: Vec<NodeId>,
    /// Every edge marked dominant, sorted.
    pub dominant_edges: Vec<[NodeId; 2]>,
    pub iterations: usize,
    pub trace: Vec<Iteration>,
}

/// Edges sorted by non-ascending weight, ties by ascending `(u, v)`, cut into
/// groups of equal weight. Weights come from the input degrees only.
fn weight_tiers(g: &Graph) -> Vec<Vec<(NodeId, NodeId)>> {
    let mut edges: Vec<(EdcWeight, NodeId, NodeId)> = g
        .edges()
        .map(|(u, v)| {
            (
                EdcWeight::new(g.degree(u) as u32, g.degree(v) as u32).unwrap(),
                u,
                v,
            )
        })
        .collect();
    edges.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut tiers: Vec<Vec<(NodeId, NodeId)>> = Vec::new();
    let mut last: Option<EdcWeight> = None;
    for (w, u, v) in edges {
        if last != Some(w) {
            tiers.push(Vec::new());
            last = Some(w);
        }
        tiers.last_mut().unwrap().push((u, v));
    }
    tiers
}

/// The endpoint with the larger degree (smaller share), ties to the smaller id.
fn elect(g: &Graph, u: NodeId, v: NodeId) -> NodeId {
    let (a, b) = (u.min(v), u.max(v));
    if g.degree(b) > g.degree(a) {
        b
    } else {
        a
    }
}

struct State<'g> {
    g: &'g Graph,
    dominator: Vec<bool>,
    dominated: Vec<bool>,
    undominated: usize,
    dominant: Vec<[NodeId; 2]>,
}

impl<'g> State<'g> {
    /// Isolated nodes can only dominate themselves.
    fn new(g: &'g Graph) -> Self {
        let n = g.node_count();
        let mut state = Self {
            g,
            dominator: vec![false; n],
            dominated: vec![false; n],
            undominated: n,
            dominant: Vec::new(),
        };
        for v in g.nodes().filter(|&v| g.degree(v) == 0) {
            state.dominator[v as usize] = true;
            state.cover(v);
        }
        state
    }

    fn cover(&mut self, v: NodeId) {
        if !self.dominated[v as usize] {
            self.dominated[v as usize] = true;
            self.undominated -= 1;
        }
    }

    fn is_dominator(&self, v: NodeId) -> bool {
        self.dominator[v as usize]
    }

    fn is_dominated(&self, v: NodeId) -> bool {
        self.dominated[v as usize]
    }

    fn make_dominator(&mut self, v: NodeId) {
        self.dominator[v as usize] = true;
        self.cover(v);
    }

    fn dominators(&self) -> Vec<NodeId> {
        self.g.nodes().filter(|&v| self.dominator[v as usize]).collect()
    }
}

/// The basic EDC-DS procedure.
///
/// Each iteration marks every not-yet-dominant edge of the current maximum
/// weight as dominant, in ascending `(u, v)` order. An edge that already
/// touches a dominator, or whose endpoints are both dominated, elects nobody;
/// otherwise its larger-degree endpoint (smaller id on equal degrees) becomes a
/// dominator. A dominator covers itself and its neighbors. Iterations stop as
/// soon as every node is covered.
pub fn edc_ds_basic(g: &Graph) -> DsResult {
    let mut state = State::new(g);
    let mut trace = Vec::new();
    for tier in weight_tiers(g) {
        if state.undominated == 0 {
            break;
        }
        let mut elected = Vec::new();
        for &(u, v) in &tier {
            state.dominant.push([u, v]);
            if state.is_dominator(u) || state.is_dominator(v) {
                continue;
            }
            if state.is_dominated(u) && state.is_dominated(v) {
                continue;
            }
            let w = elect(g, u, v);
            state.make_dominator(w);
            for &x in g.neighbors(w) {
                state.cover(x);
            }
            elected.push(w);
        }
        elected.sort_unstable();
        trace.push(Iteration {
            dominant_edges: tier.iter().map(|&(u, v)| [u, v]).collect(),
            dominators: elected,
            undominated: state.undominated,
        });
    }
    finish(DsAlgorithm::Basic, state, trace)
}

/// The improved EDC-DS procedure.
///
/// As soon as a node is elected, every edge incident to it becomes dominant
/// without any weight comparison and covers its other endpoint. Later
/// iterations only look at edges that carry no dominant mark yet.
pub fn edc_ds_improved(g: &Graph) -> DsResult {
    let mut state = State::new(g);
    let mut is_dominant = std::collections::HashSet::new();
    let mut trace = Vec::new();
    let mut tiers = weight_tiers(g).into_iter();
    while state.undominated > 0 {
        // next tier that still has unmarked edges
        let Some(tier) = tiers.by_ref().find_map(|tier| {
            let open: Vec<_> = tier.into_iter().filter(|e| !is_dominant.contains(e)).collect();
            (!open.is_empty()).then_some(open)
        }) else {
            break;
        };
        let mut marked = Vec::new();
        let mut elected = Vec::new();
        for (u, v) in tier {
            if !is_dominant.insert((u, v)) {
                // marked by an election earlier in this tier
                continue;
            }
            marked.push([u, v]);
            if state.is_dominator(u) || state.is_dominator(v) {
                continue;
            }
            if state.is_dominated(u) && state.is_dominated(v) {
                continue;
            }
            let w = elect(g, u, v);
            state.make_dominator(w);
            elected.push(w);
            for &x in g.neighbors(w) {
                let e = (w.min(x), w.max(x));
                if is_dominant.insert(e) {
                    marked.push([e.0, e.1]);
                }
                state.cover(x);
            }
        }
        marked.sort_unstable();
        elected.sort_unstable();
        state.dominant.extend_from_slice(&marked);
        trace.push(Iteration {
            dominant_edges: marked,
            dominators: elected,
            undominated: state.undominated,
        });
    }
    finish(DsAlgorithm::Improved, state, trace)
}

fn finish(algorithm: DsAlgorithm, state: State<'_>, trace: Vec<Iteration>) -> DsResult {
    debug_assert_eq!(state.undominated, 0);
    let mut dominant_edges = state.dominant.clone();
    dominant_edges.sort_unstable();
    DsResult {
        algorithm,
        dominators: state.dominators(),
        dominant_edges,
        iterations: trace.len(),
        trace,
    }
}
