use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {element} is out of range for a ground set of size {n}")]
    OutOfRange { element: usize, n: usize },

    /// Malformed or inconsistent caller input (loops, overlapping parts, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// A documented precondition of an operation was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An algorithmic invariant failed. `state` carries a dump for debugging.
    #[error("invariant violation: {message}")]
    Invariant { message: String, state: String },

    /// An exhaustive routine refused to run on too large an input.
    #[error("ground set of size {n} exceeds the exhaustive-search bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invariant(message: impl Into<String>, state: impl Into<String>) -> Self {
        Error::Invariant {
            message: message.into(),
            state: state.into(),
        }
    }
}
