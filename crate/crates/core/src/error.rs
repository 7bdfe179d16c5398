use thiserror::Error;

/// Errors produced by graph construction, solving, parsing and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{what} supports graphs of order at most {cap}, got order {order}")]
    Capacity {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    /// An isolated vertex can totally dominate nothing.
    #[error("vertex {vertex} is isolated, so {what} is undefined")]
    Isolated { vertex: usize, what: &'static str },

    #[error("malformed coloring: {0}")]
    MalformedColoring(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The search ran out of time or nodes; the optimum lies in `[lower, upper]`.
    #[error("search budget exhausted; value lies in [{lower}, {upper}]")]
    Budget { lower: usize, upper: usize },

    #[error("no closed-form value is known for {0}")]
    UnsupportedFamily(String),

    #[error("hypothesis not satisfied: {0}")]
    Inapplicable(String),

    /// A construction produced a coloring that failed re-verification.
    #[error("construction could not be certified: {0}")]
    Uncertified(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
