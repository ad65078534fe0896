use std::path::PathBuf;

use thiserror::Error;

use crate::perfection::PscViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 format error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list format error: {0}")]
    EdgeList(String),

    #[error("graph of {0} vertices exceeds the supported maximum of {1}")]
    TooLarge(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0} must not be empty")]
    EmptySet(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("total domination requires an isolate-free graph; vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("total domination is undefined on the empty graph")]
    EmptyTotal,

    #[error("clique family is not a perfect set of cliques: {0}")]
    NotPsc(PscViolation),

    #[error("build script step {step}: {reason}")]
    Script { step: usize, reason: String },

    #[error("unknown graph name {0:?}")]
    UnknownName(String),

    #[error("builtin enumeration supports 1 <= n <= {max}, got n = {n}; supply a graph6 file instead")]
    EnumerationRange { n: usize, max: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {source}")]
    SourceLine {
        path: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },
}
