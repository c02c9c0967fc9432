use thiserror::Error;

/// Errors raised by the certification pipelines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, got {actual}")]
    ShapeMismatch { expected: String, actual: String },

    #[error("field mismatch: metric is {metric}, matrix entries are {entries}")]
    FieldMismatch { metric: String, entries: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("objective is not concave: largest eigenvalue of the quadratic part is {max_eigenvalue:e}")]
    NotConcave { max_eigenvalue: f64 },

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("degenerate sample: no admissible pair after {attempts} draws")]
    DegenerateSample { attempts: usize },

    #[error("no feasible face produced a stationary point")]
    NoFeasibleFace,
}

pub type Result<T> = std::result::Result<T, Error>;
