use thiserror::Error;

/// Errors produced by the attractor toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty text")]
    EmptyText,

    #[error("k = {k} is out of range [1..{n}]")]
    KOutOfRange { k: usize, n: usize },

    /// A 1-based position outside `[1..n]`.
    #[error("position {position} is out of range [1..{n}]")]
    PositionOutOfRange { position: i64, n: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("position {0} is not in the attractor")]
    NotInAttractor(usize),

    #[error("positions {0} and {1} are not k-equivalent")]
    ClassMismatch(usize, usize),

    #[error("attractor is empty")]
    EmptyAttractor,

    #[error("no 2-mers: text has length {0}")]
    NoBigrams(usize),

    #[error(
        "instance too large: {candidates} candidates with size bound {bound} \
         exceed the budget of {budget} subset evaluations"
    )]
    InstanceTooLarge {
        candidates: usize,
        bound: usize,
        budget: u64,
    },

    #[error("invalid set-cover instance: {0}")]
    InvalidInstance(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
