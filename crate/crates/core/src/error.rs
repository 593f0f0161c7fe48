use thiserror::Error;

/// Errors raised by the library. All variants describe bad or oversized input;
/// the CLI reports them as precondition failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Shapes or index sets that do not fit together.
    #[error("structural error: {0}")]
    Structural(String),
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A Groebner computation produced an element above the degree cap.
    #[error("degree cap exceeded: degree {degree} > cap {cap}")]
    CapExceeded { cap: u32, degree: u32 },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
