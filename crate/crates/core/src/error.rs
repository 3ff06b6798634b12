use thiserror::Error;

use crate::ck::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: wrong shape, out-of-range index, mixed dimensions.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Initial data rejected by the compatibility conditions.
    #[error("incompatible data: {}", format_violations(.0))]
    Incompatible(Vec<Violation>),

    /// An internal identity that must hold exactly did not.
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
