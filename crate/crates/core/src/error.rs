use crate::graph::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("edge ({0}, {1}) references a node outside 0..{2}")]
    NodeOutOfRange(NodeId, NodeId, usize),

    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(NodeId),

    #[error("node {0} is outside 0..{1}")]
    UnknownNode(NodeId, usize),

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(NodeId, NodeId),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("the given node set does not dominate the graph")]
    NotDominating,

    #[error("component with minimum node {0} contains no dominator")]
    ComponentWithoutDominator(NodeId),

    #[error("no path from node {0} to the target tree")]
    NoPath(NodeId),

    #[error("graph has {n} nodes, exact search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("malformed graph file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
