use thiserror::Error;

/// Errors raised by the engine. Verdicts such as "not extendable" are values,
/// not errors; this type is reserved for contract violations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("bracket target is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("empty intertwiner space: {0}")]
    EmptyIntertwiner(String),
    /// Some summand carries no nondegenerate 𝔥-invariant symmetric form.
    #[error("no invariant metric: {0}")]
    NoInvariantForm(String),
    #[error("hypotheses violated: {0}")]
    Hypothesis(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("catalog schema error at {location}: {message}")]
    Schema { location: String, message: String },
    #[error("instantiation failed: {0}")]
    Instantiation(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
