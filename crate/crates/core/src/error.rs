use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("matrix shape violation: {0}")]
    Shape(String),
    #[error("vanishing pattern violated at ({0}, {1}): {2}")]
    VanishingPattern(usize, usize, String),
    #[error("Borel input rejected: {0}")]
    NotPositivelyWeighted(String),
    #[error("computation incomplete: {0}")]
    Incomplete(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
