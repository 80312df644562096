use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("Euler characteristic {0} is not an integer")]
    NonIntegral(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("components overlap: {0}")]
    Overlap(String),
    #[error("construction hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("cannot resolve sheaf expression {0}")]
    Unresolvable(String),
    #[error("constraints are infeasible at {key}: {detail}")]
    Infeasible { key: String, detail: String },
    #[error("propagation did not stabilise within {0} rounds")]
    IterationCap(usize),
    #[error("interval for {0} is not exact")]
    Inexact(String),
    #[error("complex has a nonzero term in degree {degree}: {detail}")]
    MonadObstruction { degree: i64, detail: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
