//! Crate-wide error type.

use crate::graph::ComponentPartition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation needs a connected graph; carries the components found.
    #[error("graph is not connected ({} components)", partition.num_blocks())]
    NotConnected { partition: ComponentPartition },

    /// The operation needs a strongly connected digraph; carries one ordered
    /// pair with no directed path between them.
    #[error("digraph is not strongly connected: no directed path from {from} to {to}")]
    NotStronglyConnected { from: usize, to: usize },

    /// Power iteration hit the iteration cap; the last enclosure is preserved.
    #[error("spectral radius iteration did not converge after {iterations} iterations (last enclosure [{lower}, {upper}])")]
    NonConvergence {
        iterations: usize,
        lower: f64,
        upper: f64,
    },

    /// A parameter combination cannot produce a graph with the requested
    /// minimum degree and essential connectivity.
    #[error("construction infeasible: {0}")]
    ConstructionInfeasible(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidArgument(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
