use thiserror::Error;

/// Errors produced by group parsing, graph construction, simulation and
/// catalog handling.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("element {literal} is not a member of {group}")]
    NotAMember { literal: String, group: String },

    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),

    #[error("group order {order} exceeds enumeration limit {limit}")]
    GroupTooLarge { order: u128, limit: u64 },

    #[error("graph has {vertices} vertices, exceeds exact-solver cap {cap}")]
    ExceedsSolverCap { vertices: usize, cap: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("scheme does not match the generator set: {0}")]
    SchemeMismatch(String),

    #[error("unknown named graph: {0}")]
    UnknownGraph(String),

    #[error("bad catalog file, line {line}: {msg}")]
    Catalog { line: usize, msg: String },

    #[error("record rejected: {0}")]
    RecordRejected(String),

    #[error("invalid search space: {0}")]
    InvalidSearch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
