use thiserror::Error;

use crate::rings::RingId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: RingId, found: RingId },

    #[error("zero input is not allowed for {0}")]
    ZeroInput(&'static str),

    #[error("trial division bound {bound} exceeded while factoring {n}")]
    FactorBound { n: String, bound: u64 },

    #[error("polynomial {0} does not split into known irreducible factors")]
    NotSplit(String),

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("{elem} is not a member of {set}")]
    NotInSet { elem: String, set: String },

    #[error("unsupported set for this operation: {0}")]
    Unsupported(String),

    #[error("budget exhausted: {0}")]
    Budget(String),

    #[error("missing witness for generator {0}")]
    MissingWitness(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A computed certificate failed its own verification.
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
