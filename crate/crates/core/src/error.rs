use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid configuration: {0}")]
    Configuration(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not in gamma_{0}")]
    NotInLowerCentralTerm(usize),
    #[error("not a Lie element")]
    NotLie,
    #[error("torsion quotient: {0}")]
    Torsion(String),
    #[error("domain mismatch: {0}")]
    Domain(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
