use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported size: {what} = {n} exceeds the cap of {cap}")]
    UnsupportedSize {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    /// Malformed graph6 text. `offset` is the 0-based byte offset of the
    /// offending byte.
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    /// Malformed edge-list text. `line` is 1-based.
    #[error("edge-list parse error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
