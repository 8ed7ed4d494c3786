use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension d = {0}: need 2 <= d <= {max}", max = crate::modring::MAX_DIMENSION)]
    InvalidDimension(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("matrix is not symplectic over Z_{0}")]
    NotSymplectic(u64),
    #[error("qudit index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("SUM gate needs distinct control and target, got {0} twice")]
    SameControlTarget(usize),
    #[error("the identity word has no normal form")]
    DegenerateWord,
    #[error("{k} is not a unit modulo {modulus}")]
    NotAUnit { k: u64, modulus: u64 },
    #[error("problem size {size} exceeds the dense-oracle limit {limit}")]
    ScaleLimit { size: usize, limit: usize },
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
