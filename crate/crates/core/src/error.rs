use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid sphere: {0}")]
    InvalidSphere(String),

    #[error("invalid circle: {0}")]
    InvalidCircle(String),

    #[error("point is not on the sphere surface (norm {norm}, radius {radius})")]
    OffSurface { norm: f64, radius: f64 },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("unsupported statement form: {0}")]
    Unsupported(String),

    #[error("term `{0}` is not present in the configuration")]
    MissingTerm(String),

    #[error("oracle refuses tasks with {terms} terms (limit {limit})")]
    TooManyTerms { terms: usize, limit: usize },

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("projection for dimension {0} is not supported; use the JSON export")]
    UnsupportedProjection(usize),

    #[error("malformed configuration document: {0}")]
    Format(String),
}
