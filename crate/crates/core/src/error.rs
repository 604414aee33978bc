use thiserror::Error;

/// Errors raised by the exact kernel and the construction layer.
///
/// Predicate *failures* are not errors: a lemma that does not hold is
/// reported through [`crate::ledger::LemmaResult`], never through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("zero vector has no direction")]
    ZeroVector,

    #[error("empty point set")]
    EmptyPointSet,

    #[error("vertex index {index} out of range for {count} vertices")]
    VertexIndex { index: usize, count: usize },

    #[error("the number of dimensions must be at least {min} (got {got})")]
    DimensionTooSmall { min: usize, got: usize },

    #[error("not a signed permutation: {0}")]
    BadPermutation(String),

    #[error("scale factor must be positive")]
    NonPositiveScale,

    #[error("vertices do not form a regular simplex: {0}")]
    NotRegular(String),

    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),

    #[error("bad injection spec: {0} (expected POINT:COORD:DELTA, e.g. E:4:1/1000)")]
    BadInjection(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("floating-point oracle failed: {0}")]
    OracleFailure(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
