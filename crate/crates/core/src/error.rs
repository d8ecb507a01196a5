use thiserror::Error;

/// Errors raised while building or transforming link diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("crossing {index} has {found} entries, expected 4")]
    Arity { index: usize, found: usize },
    #[error("edge ids must be positive (found 0 in crossing {0})")]
    ZeroEdge(usize),
    #[error("dangling edge {0}: it appears only once")]
    DanglingEdge(u32),
    #[error("edge {edge} appears {count} times, expected exactly 2")]
    EdgeOveruse { edge: u32, count: usize },
    #[error("inconsistent over-strand orientation at crossing {0}")]
    InconsistentOrientation(usize),
    #[error("broken succession cycle through edge {0}")]
    BrokenSuccession(u32),
    #[error("component index {index} out of range (link has {count} components)")]
    BadComponent { index: usize, count: usize },
    #[error("twist vector has length {found}, link has {expected} components")]
    TwistLength { expected: usize, found: usize },
    #[error("diagram is disconnected ({0} connected pieces)")]
    Disconnected(usize),
    #[error("diagram is not {0}")]
    WrongClass(&'static str),
    #[error("bad braid: {0}")]
    Braid(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownLink(String),
}

pub type Result<T> = std::result::Result<T, LinkError>;
