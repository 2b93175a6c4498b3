use thiserror::Error;

use crate::numberfield::FieldError;

/// Parse failure in the graph DSL or in CLI literals, with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("root {0} is not positive")]
    NonPositiveRoot(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("group is infinite: {0}")]
    InfiniteGroup(String),
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("undetermined label: <{0}, {1}> matches no -cos(pi/k) with k <= {2}")]
    UndeterminedLabel(String, String, u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("truncation tower did not stabilize: {0}")]
    NotStabilized(String),
}

pub type Result<T> = std::result::Result<T, Error>;
