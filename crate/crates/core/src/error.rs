use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} outside 1..=62")]
    VertexCount(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("edge {{{0},{1}}} already present")]
    EdgePresent(usize, usize),
    #[error("edge {{{0},{1}}} not present")]
    EdgeMissing(usize, usize),
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph must be chordal")]
    NotChordal,
    #[error("graph must be bipartite")]
    NotBipartite,
    #[error("graph has no edges: no proper ideal classification")]
    Edgeless,
    #[error("{0}")]
    Precondition(String),
    #[error("tier exceeded: {what} needs {value} <= {max}")]
    TierExceeded { what: &'static str, value: usize, max: usize },
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("licci routes disagree: {0}")]
    RouteDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// `TierExceeded` when `value > max`.
pub fn tier(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        Err(Error::TierExceeded { what, value, max })
    } else {
        Ok(())
    }
}
