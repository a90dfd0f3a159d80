use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{GeoGraph, Graph, NodeId};
use crate::{Error, Result};

/// On-disk graph document shared by every CLI command.
///
/// ```json
/// {"n": 3, "radius": null, "area_side": null, "positions": null, "edges": [[0,1],[1,2]]}
/// ```
///
/// Written files always carry `u < v` edge pairs in lexicographic order.
/// Geometric fields are `null` for abstract graphs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    #[serde(default)]
    pub radius: Option<f64>,
    #[serde(default)]
    pub area_side: Option<f64>,
    #[serde(default)]
    pub positions: Option<Vec<[f64; 2]>>,
    pub edges: Vec<[NodeId; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.node_count(),
            radius: None,
            area_side: None,
            positions: None,
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_geo(geo: &GeoGraph) -> Self {
        Self {
            radius: Some(geo.radius()),
            area_side: Some(geo.area_side()),
            positions: Some(geo.positions().to_vec()),
            ..Self::from_graph(geo.graph())
        }
    }

    /// Validates the document and builds the canonical graph.
    pub fn to_graph(&self) -> Result<Graph> {
        if let Some(positions) = &self.positions {
            if positions.len() != self.n {
                return Err(Error::Format(format!(
                    "{} positions for {} nodes",
                    positions.len(),
                    self.n
                )));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph files always serialize")
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text = self.to_json();
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}
