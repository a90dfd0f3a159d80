use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use super::{Graph, NodeId};
use crate::{Error, Result};

/// Node positions plus a transmission radius; the induced [`Graph`] links
/// two nodes iff their distance is at most the radius.
#[derive(Clone, Debug, PartialEq)]
pub struct GeoGraph {
    positions: Vec<[f64; 2]>,
    radius: f64,
    area_side: f64,
    seed: Option<u64>,
    graph: Graph,
}

impl GeoGraph {
    /// Builds a unit-disk graph over explicit positions. Positions must lie in
    /// `[0, area_side)²`.
    pub fn from_positions(positions: Vec<[f64; 2]>, radius: f64, area_side: f64) -> Result<Self> {
        check_params(radius, area_side)?;
        if let Some(p) = positions
            .iter()
            .find(|p| !p.iter().all(|c| (0.0..area_side).contains(c)))
        {
            return Err(Error::InvalidParameter(format!(
                "position ({}, {}) is outside [0, {area_side})",
                p[0], p[1]
            )));
        }
        let graph = induce(&positions, radius);
        Ok(Self {
            positions,
            radius,
            area_side,
            seed: None,
            graph,
        })
    }

    pub fn positions(&self) -> &[[f64; 2]] {
        &self.positions
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn area_side(&self) -> f64 {
        self.area_side
    }

    /// Generator seed, `None` when built from explicit positions.
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

fn check_params(radius: f64, area_side: f64) -> Result<()> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "radius must be positive, got {radius}"
        )));
    }
    if !(area_side > 0.0 && area_side.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "area side must be positive, got {area_side}"
        )));
    }
    Ok(())
}

// Squared distances against radius² keep the boundary case exact.
fn induce(positions: &[[f64; 2]], radius: f64) -> Graph {
    let r2 = radius * radius;
    let mut edges = Vec::new();
    for (u, a) in positions.iter().enumerate() {
        for (v, b) in positions.iter().enumerate().skip(u + 1) {
            let dx = a[0] - b[0];
            let dy = a[1] - b[1];
            if dx * dx + dy * dy <= r2 {
                edges.push((u as NodeId, v as NodeId));
            }
        }
    }
    Graph::new(positions.len(), edges).expect("induced edges are in range and loop-free")
}

/// Places `n` nodes uniformly at random in `[0, area_side)²`.
///
/// The generator is Xoshiro256++ seeded through SplitMix64
/// (`Xoshiro256PlusPlus::seed_from_u64`). Each node, in id order, consumes
/// two 53-bit uniform draws: first `x`, then `y`, each scaled by `area_side`.
pub fn generate_udg(n: usize, radius: f64, area_side: f64, seed: u64) -> Result<GeoGraph> {
    check_params(radius, area_side)?;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut coordinate = || {
        let c = rng.gen::<f64>() * area_side;
        // rounding of the product may land on the open upper bound
        if c < area_side {
            c
        } else {
            area_side.next_down()
        }
    };
    let positions: Vec<[f64; 2]> = (0..n)
        .map(|_| {
            let x = coordinate();
            let y = coordinate();
            [x, y]
        })
        .collect();
    let graph = induce(&positions, radius);
    Ok(GeoGraph {
        positions,
        radius,
        area_side,
        seed: Some(seed),
        graph,
    })
}

/// SplitMix64 finalizer, a bijection on `u64`.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Rejection-samples a connected unit-disk graph. Attempt 0 uses `seed`,
/// attempt `k + 1` uses `mix64(seed_k ^ 0x9e37_79b9_7f4a_7c15)`; the returned
/// graph records the seed that produced it.
pub fn generate_connected_udg(
    n: usize,
    radius: f64,
    area_side: f64,
    seed: u64,
    max_attempts: usize,
) -> Result<GeoGraph> {
    let mut attempt_seed = seed;
    for _ in 0..max_attempts {
        let geo = generate_udg(n, radius, area_side, attempt_seed)?;
        if geo.graph().is_connected() {
            return Ok(geo);
        }
        attempt_seed = mix64(attempt_seed ^ 0x9e37_79b9_7f4a_7c15);
    }
    Err(Error::InvalidParameter(format!(
        "no connected graph with n={n} r={radius} in {max_attempts} attempts"
    )))
}
