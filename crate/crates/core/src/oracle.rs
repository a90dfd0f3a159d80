//! Exact minimum dominating and connected dominating sets by enumeration,
//! and the approximation-ratio checks built on them.

use serde::Serialize;

use crate::graph::{Graph, NodeId};
use crate::{Error, Result};

/// Largest graph the exact search accepts.
pub const EXACT_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// Lexicographically smallest optimum, sorted.
    pub opt_set: Vec<NodeId>,
    pub opt_size: usize,
    /// Every smaller cardinality was enumerated without finding a valid set.
    pub exhaustive: bool,
}

type Mask = u32;

struct Search<'a> {
    closed: Vec<Mask>,
    /// Highest id in each closed neighborhood.
    reach: Vec<usize>,
    full: Mask,
    max_cover: u32,
    accept: &'a dyn Fn(Mask) -> bool,
}

impl Search<'_> {
    /// First `picks`-subset, in lexicographic order of sorted id lists, that
    /// dominates and passes `accept`.
    fn find(&self, start: usize, picks: u32, chosen: Mask, covered: Mask) -> Option<Mask> {
        let uncovered = self.full & !covered;
        if uncovered == 0 {
            // supersets of a dominating set still dominate; only `accept` can fail
            if picks == 0 {
                return (self.accept)(chosen).then_some(chosen);
            }
        } else {
            if picks == 0 || uncovered.count_ones() > picks * self.max_cover {
                return None;
            }
            // the smallest uncovered node can only be covered by ids >= start
            let first = uncovered.trailing_zeros() as usize;
            if self.reach[first] < start {
                return None;
            }
        }
        let n = self.closed.len();
        for v in start..=(n - picks as usize) {
            let found = self.find(v + 1, picks - 1, chosen | 1 << v, covered | self.closed[v]);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn closed_masks(g: &Graph) -> Vec<Mask> {
    g.nodes()
        .map(|v| g.neighbors(v).iter().fold(1 << v, |m, &u| m | 1 << u))
        .collect()
}

fn guard(g: &Graph) -> Result<()> {
    if g.node_count() > EXACT_LIMIT {
        return Err(Error::TooLarge {
            n: g.node_count(),
            limit: EXACT_LIMIT,
        });
    }
    Ok(())
}

fn minimum(g: &Graph, accept: &dyn Fn(Mask) -> bool) -> OracleResult {
    let n = g.node_count();
    let closed = closed_masks(g);
    let search = Search {
        reach: g
            .nodes()
            .map(|v| g.neighbors(v).last().map_or(v, |&u| u.max(v)) as usize)
            .collect(),
        full: if n == 0 { 0 } else { Mask::MAX >> (32 - n) },
        max_cover: g.max_degree() as u32 + 1,
        closed,
        accept,
    };
    for k in 0..=n as u32 {
        if let Some(mask) = search.find(0, k, 0, 0) {
            let opt_set: Vec<NodeId> = (0..n as NodeId).filter(|&v| mask & 1 << v != 0).collect();
            return OracleResult {
                opt_size: opt_set.len(),
                opt_set,
                exhaustive: true,
            };
        }
    }
    unreachable!("the full node set always qualifies")
}

fn induces_connected(closed: &[Mask], set: Mask) -> bool {
    if set == 0 {
        return true;
    }
    let mut reached: Mask = 1 << set.trailing_zeros();
    loop {
        let mut next = reached;
        let mut rest = reached;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= closed[v] & set;
        }
        if next == reached {
            return reached == set;
        }
        reached = next;
    }
}

/// Minimum dominating set of `g`, ties broken towards the lexicographically
/// smallest sorted id list.
pub fn min_ds_exact(g: &Graph) -> Result<OracleResult> {
    guard(g)?;
    Ok(minimum(g, &|_| true))
}

/// Minimum connected dominating set of a connected `g`.
pub fn min_cds_exact(g: &Graph) -> Result<OracleResult> {
    guard(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let closed = closed_masks(g);
    Ok(minimum(g, &|set| induces_connected(&closed, set)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DsRatioCheck {
    pub max_degree: usize,
    pub opt_size: usize,
    /// `(ln(Δ+1) + 1) · |opt|`
    pub bound: f64,
    pub holds: bool,
}

/// Checks `algo_size <= (ln(Δ+1) + 1) · |opt|` against the exact optimum.
pub fn check_ds_ratio(g: &Graph, algo_size: usize) -> Result<DsRatioCheck> {
    let max_degree = g.max_degree();
    if max_degree < 1 {
        return Err(Error::InvalidParameter(
            "ratio check needs a graph with an edge".into(),
        ));
    }
    let opt_size = min_ds_exact(g)?.opt_size;
    let bound = ((max_degree as f64 + 1.0).ln() + 1.0) * opt_size as f64;
    Ok(DsRatioCheck {
        max_degree,
        opt_size,
        bound,
        holds: algo_size as f64 <= bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CdsRatioCheck {
    pub max_degree: usize,
    pub opt_size: usize,
    /// `(ln(Δ-1) + 1) · |opt|`, only when applicable.
    pub bound: Option<f64>,
    pub holds: Option<bool>,
    /// The bound is only evaluated for `Δ >= 3`.
    pub applicable: bool,
}

/// Checks `algo_size <= (ln(Δ-1) + 1) · |opt|` against the exact minimum CDS.
pub fn check_cds_ratio(g: &Graph, algo_size: usize) -> Result<CdsRatioCheck> {
    let max_degree = g.max_degree();
    let opt_size = min_cds_exact(g)?.opt_size;
    let applicable = max_degree >= 3;
    let bound = applicable.then(|| ((max_degree as f64 - 1.0).ln() + 1.0) * opt_size as f64);
    Ok(CdsRatioCheck {
        max_degree,
        opt_size,
        bound,
        holds: bound.map(|b| algo_size as f64 <= b),
        applicable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n as NodeId).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n as NodeId).map(|v| (v, (v + 1) % n as NodeId))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves as NodeId).map(|v| (0, v))).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, edges).unwrap()
    }

    #[test]
    fn ds_examples() {
        let p3 = min_ds_exact(&path(3)).unwrap();
        assert_eq!((p3.opt_size, p3.opt_set), (1, vec![1]));
        let p5 = min_ds_exact(&path(5)).unwrap();
        // {0,3} is lexicographically before {1,3}
        assert_eq!((p5.opt_size, p5.opt_set), (2, vec![0, 3]));
        assert_eq!(min_ds_exact(&petersen()).unwrap().opt_size, 3);
        assert_eq!(min_ds_exact(&Graph::empty(0)).unwrap().opt_size, 0);
        assert_eq!(min_ds_exact(&Graph::empty(3)).unwrap().opt_set, vec![0, 1, 2]);
    }

    #[test]
    fn cds_examples() {
        assert_eq!(min_cds_exact(&star(4)).unwrap().opt_set, vec![0]);
        assert_eq!(min_cds_exact(&path(5)).unwrap().opt_set, vec![1, 2, 3]);
        assert_eq!(min_cds_exact(&cycle(5)).unwrap().opt_size, 3);
        assert_eq!(min_cds_exact(&Graph::empty(1)).unwrap().opt_set, vec![0]);
        assert!(matches!(
            min_cds_exact(&Graph::empty(2)),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn size_guard() {
        let big = path(EXACT_LIMIT + 1);
        assert!(matches!(
            min_ds_exact(&big),
            Err(Error::TooLarge { n: 25, limit: 24 })
        ));
        assert!(min_ds_exact(&path(EXACT_LIMIT)).is_ok());
        assert_eq!(
            min_cds_exact(&path(EXACT_LIMIT)).unwrap().opt_size,
            EXACT_LIMIT - 2
        );
    }

    #[test]
    fn ds_ratio_examples() {
        let c = check_ds_ratio(&star(4), 1).unwrap();
        assert!((c.bound - (5f64.ln() + 1.0)).abs() < 1e-12);
        assert!((c.bound - 2.609).abs() < 1e-3);
        assert!(c.holds);
        let c = check_ds_ratio(&path(5), 2).unwrap();
        assert!((c.bound - 4.197).abs() < 1e-3);
        assert!(c.holds);
        let c = check_ds_ratio(&path(2), 1).unwrap();
        assert!((c.bound - 1.693).abs() < 1e-3);
        assert!(c.holds);
        assert!(!check_ds_ratio(&path(2), 2).unwrap().holds);
        assert!(check_ds_ratio(&Graph::empty(2), 2).is_err());
    }

    #[test]
    fn cds_ratio_examples() {
        let c = check_cds_ratio(&star(4), 1).unwrap();
        assert!((c.bound.unwrap() - 2.099).abs() < 1e-3);
        assert_eq!(c.holds, Some(true));
        let c = check_cds_ratio(&path(5), 3).unwrap();
        assert!(!c.applicable);
        assert_eq!(c.holds, None);
        let k4 = build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = check_cds_ratio(&k4, 1).unwrap();
        assert!((c.bound.unwrap() - (1.0 + 2f64.ln())).abs() < 1e-12);
        assert_eq!(c.holds, Some(true));
    }

    #[test]
    fn connectivity_mask() {
        let closed = closed_masks(&path(4));
        assert!(induces_connected(&closed, 0b0110));
        assert!(!induces_connected(&closed, 0b1001));
        assert!(induces_connected(&closed, 0));
    }
}
