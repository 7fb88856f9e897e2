use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Shapes or lengths of the arguments do not fit together.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A parameter lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed or inconsistent input data (Gram files, configs, flags).
    #[error("invalid input: {0}")]
    Input(String),

    /// A structural assumption was violated; indicates a bug rather than bad input.
    #[error("structural error: {0}")]
    Structural(String),

    /// A configured work budget would be exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
}
