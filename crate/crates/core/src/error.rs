use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid link pattern: {0}")]
    InvalidLinkPattern(String),
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("invalid boundary condition: {0}")]
    InvalidBoundary(String),
    #[error("invalid triplet: {0}")]
    InvalidTriplet(String),
    #[error("cycle partition is not unique: {0}")]
    NonUniqueGamma(String),
    #[error("operator {op} does not act on link patterns of size {n}")]
    ArityMismatch { op: String, n: usize },
    #[error("kernel of H - 2n has dimension {dim} for n = {n}, expected 1")]
    KernelDimension { n: usize, dim: usize },
    #[error("index {j} out of range 1..={max} for {what}")]
    IndexOutOfRange { what: String, j: usize, max: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("geometry mismatch: {0}")]
    GeometryMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
