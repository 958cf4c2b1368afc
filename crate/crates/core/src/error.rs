use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument error: {0}")]
    Argument(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unsupported model `{model}`: {op} is not available")]
    Unsupported { model: String, op: String },

    #[error("term cap exceeded: intermediate with {terms} terms (cap {cap})")]
    TermCap { terms: usize, cap: usize },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn schema(msg: impl Into<String>) -> Self {
        Error::Schema(msg.into())
    }
}
