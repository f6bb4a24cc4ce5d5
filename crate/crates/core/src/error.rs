use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}` in finite set")]
    DuplicateElement(String),

    #[error("invalid element token `{0}`")]
    InvalidToken(String),

    #[error("`{element}` is not an element of {set}")]
    NotAnElement { element: String, set: String },

    #[error("invalid subset: {subset} is not contained in {set}")]
    InvalidSubset { subset: String, set: String },

    #[error("element `{0}` is mapped twice")]
    NotFunctional(String),

    #[error("element `{0}` is hit twice")]
    NotInjective(String),

    #[error("composition undefined: target {left} does not match source {right}")]
    CompositionUndefined { left: String, right: String },

    #[error("object mismatch: {0}")]
    ObjectMismatch(String),

    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),

    #[error("not an inverse semigroup: {0}")]
    NotInverseSemigroup(String),

    #[error("invalid diagram: {0}")]
    DiagramInvalid(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal contradiction: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
