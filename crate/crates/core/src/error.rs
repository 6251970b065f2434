use thiserror::Error;

/// Errors raised by the engine.
///
/// `Input` and `Unsupported` are caller mistakes; `Consistency` means an
/// identity that must hold in finite type was violated and indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! input_err {
    ($($arg:tt)*) => { $crate::error::Error::Input(format!($($arg)*)) };
}

macro_rules! consistency_err {
    ($($arg:tt)*) => { $crate::error::Error::Consistency(format!($($arg)*)) };
}

pub(crate) use consistency_err;
pub(crate) use input_err;
