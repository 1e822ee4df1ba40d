use thiserror::Error;

/// Errors produced by the library.
///
/// Every variant maps onto one of three broad classes (see [`ErrorClass`]) so
/// that front ends can translate failures into stable exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("bound already adjusted for directed graphs")]
    AlreadyAdjusted,
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Inputs outside the mathematical domain of an operation.
    Domain,
    /// Work would exceed an enumeration or memory budget.
    Resource,
    /// Internal cross-check disagreed.
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Resource(_) => ErrorClass::Resource,
            Error::Verification(_) => ErrorClass::Internal,
            _ => ErrorClass::Domain,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
