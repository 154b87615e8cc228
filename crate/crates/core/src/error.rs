use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("singular system: the selected rows do not determine a unique point")]
    Singular,
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("polytope has empty interior ({vertices} vertices spanning affine dimension {affine_dim} < {dim})")]
    Degenerate {
        vertices: usize,
        affine_dim: usize,
        dim: usize,
    },
    #[error("kernel of the active set and slicing functional is trivial (rank {rank} in dimension {dim})")]
    DimensionTooSmall { rank: usize, dim: usize },
    #[error("certificate construction failed: no kernel direction keeps both points in the slice")]
    CertificateFailed,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
