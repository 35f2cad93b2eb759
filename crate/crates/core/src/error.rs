use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("input outside the supported domain: {0}")]
    Domain(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("ill-formed formula: {0}")]
    WellFormed(String),
    #[error("evaluation error: {0}")]
    Eval(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource(_))
    }
}
