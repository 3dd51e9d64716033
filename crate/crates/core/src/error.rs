use crate::graph::NodeId;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the library surface.
///
/// Kernels never panic on contract violations and never return NaN to signal
/// "undefined"; they return a variant from this enum instead.
#[derive(Error, Debug)]
pub enum Error {
    #[error("node id {node} out of range (graph has {n} nodes)")]
    InvalidNode { node: NodeId, n: u64 },

    #[error("self-loop at node {node} rejected (enable allow_self_loops to permit)")]
    SelfLoop { node: NodeId },

    #[error("duplicate edge ({u}, {v}) under the reject policy")]
    DuplicateEdge { u: NodeId, v: NodeId },

    #[error("edge ({u}, {v}) does not exist")]
    MissingEdge { u: NodeId, v: NodeId },

    #[error("edge weight {weight} is not finite and positive")]
    BadWeight { weight: f64 },

    #[error("weighted graph requires an edge weight for ({u}, {v})")]
    MissingWeight { u: NodeId, v: NodeId },

    #[error("unweighted graph given an edge weight for ({u}, {v})")]
    UnexpectedWeight { u: NodeId, v: NodeId },

    #[error("{op} requires a weighted graph")]
    WeightedInputRequired { op: &'static str },

    #[error("{op} rejects directed input")]
    DirectedInputRejected { op: &'static str },

    #[error("{op} rejects graphs with self-loops")]
    SelfLoopsRejected { op: &'static str },

    #[error("{op} requires a connected graph")]
    Disconnected { op: &'static str },

    #[error("{op} did not converge within {iterations} iterations (residual {residual:.3e})")]
    NotConverged {
        op: &'static str,
        iterations: u64,
        residual: f64,
    },

    #[error("alpha {alpha} >= 1/lambda_max (estimated lambda_max {lambda_max:.6}); series diverges")]
    AlphaTooLarge { alpha: f64, lambda_max: f64 },

    #[error("{what} has zero variance; coefficient undefined")]
    ZeroVariance { what: &'static str },

    #[error("graph has no edges")]
    NoEdges,

    #[error("degree sequence is not graphical: {reason}")]
    NonGraphical { reason: String },

    #[error("quadrant probabilities must sum to 1 (got {sum})")]
    SimplexViolation { sum: f64 },

    #[error("invalid parameter: {what}")]
    BadParameter { what: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: u64,
        msg: String,
    },
}

impl Error {
    pub fn bad_param(what: impl Into<String>) -> Self {
        Error::BadParameter { what: what.into() }
    }

    pub fn file(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::File {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}
