//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cardinality mismatch: |A| = {left}, |B| = {right}")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("ground set mismatch: n = {left} vs n = {right}")]
    GroundMismatch { left: usize, right: usize },

    #[error("frame mismatch: operands live in different frames")]
    FrameMismatch,

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("zero multivector has no initial set")]
    ZeroVector,

    #[error("matrix is not square ({rows}×{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("generators are linearly dependent")]
    NotABasis,

    #[error("degree overflow: {degree} exceeds ground dimension {ground_n}")]
    DegreeOverflow { degree: usize, ground_n: usize },

    #[error("hypergraph is not uniform")]
    NonUniform,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("capacity cap exceeded: {what} = {value} > cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("genericity sampling failed after {attempts} attempts: {failing}")]
    GenericityFailure { attempts: u32, failing: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI. Documented in the README:
    /// 0 success, 2 parse error, 3 precondition failure, 4 genericity
    /// failure, 5 cap exceeded, 6 check failed, 1 everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::InvalidArgument(_) => 2,
            Error::Precondition(_)
            | Error::CardinalityMismatch { .. }
            | Error::GroundMismatch { .. }
            | Error::FrameMismatch
            | Error::DegreeMismatch { .. }
            | Error::NonUniform
            | Error::DegreeOverflow { .. } => 3,
            Error::GenericityFailure { .. } => 4,
            Error::CapExceeded { .. } => 5,
            _ => 1,
        }
    }
}
