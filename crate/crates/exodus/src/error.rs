use thiserror::Error;

/// Errors shared across the library.
///
/// Mathematical *failures* (a law that does not hold, a witness that does not
/// exist) are not errors; operations report those through report types or
/// `Option`s. `Error` is reserved for malformed input, ill-typed requests and
/// blown resource caps.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed input data: dangling identifiers, duplicate names, tables
    /// referencing things that do not exist.
    #[error("input error: {0}")]
    Input(String),

    /// A request that does not typecheck: composing non-composable cells,
    /// comparing non-parallel transformations, evaluating an ill-typed
    /// pasting expression.
    #[error("type error: {0}")]
    Type(String),

    /// A size guard fired.
    #[error("cap exceeded while {what}: needed {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: usize,
        cap: usize,
    },

    /// A precondition failed: the operation refuses to run on data that does
    /// not pass its check (e.g. gluing a descent datum that fails coherence).
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn type_err(msg: impl Into<String>) -> Self {
        Error::Type(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
