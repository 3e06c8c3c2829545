use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` has no assigned image")]
    Unassigned(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("`{0}` is not an element of the group")]
    NotInGroup(String),
    #[error("operands belong to different groups")]
    MixedGroups,
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operation needs a finite group")]
    InfiniteGroup,
    #[error("no lift into the free group for {0}")]
    NoLift(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("invalid cocycle data: {0}")]
    InvalidCocycle(String),
    #[error("integer does not fit the requested width")]
    Overflow,
    #[error("boundary term `{0}` escapes the graph tensor subcomplex")]
    EscapesSubcomplex(String),
}

pub type Result<T> = std::result::Result<T, Error>;
