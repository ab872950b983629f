use thiserror::Error;

/// Errors raised by the symbolic engine.
///
/// `Usage` covers contract violations by the caller (bad arguments, unknown
/// symbols); `Consistency` signals that an identity the computation relies on
/// failed to hold exactly, which always points at wrong input data or a bug.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials live over different symbol tables")]
    SymbolMismatch,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol `{0}` has no value")]
    UnboundSymbol(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn inconsistent<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Consistency(msg.into()))
}
