use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at line {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: {0} and {1} lie in different components")]
    Disconnected(String, String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} does not resolve the graph: {1} and {2} have equal distance vectors")]
    NotResolving(String, String, String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("grid rendering requires k=2")]
    RenderDimension,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
