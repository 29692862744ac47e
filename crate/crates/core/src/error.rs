use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("vertex {vertex} out of range (num_vertices = {num_vertices})")]
    VertexOutOfRange { vertex: u64, num_vertices: usize },

    #[error("hypergraph has no vertices")]
    EmptyVertexSet,

    #[error("expected uniformity {expected}, found {found}")]
    UniformityMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("pattern constraints require a host with [part, value] coordinate labels")]
    ConstraintsNeedLabels,

    #[error("instance too large: {what} = {size} exceeds ceiling {ceiling}")]
    CeilingExceeded {
        what: &'static str,
        size: usize,
        ceiling: usize,
    },

    #[error("charging argument inconclusive: max charge {max_charge} exceeds the certified bound")]
    ChargingInconclusive { max_charge: u64 },

    #[error("edge {0:?} has no admissible charge")]
    Unchargeable(Vec<u32>),

    #[error("{0}")]
    Io(String),

    #[error("malformed json: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
