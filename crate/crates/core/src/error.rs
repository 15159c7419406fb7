use thiserror::Error;

use crate::weight::{HighestWeight, VermaTuple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A letter whose index is zero or exceeds the ambient rank.
    #[error("letter with value {value} is not in the alphabet of rank {rank}")]
    EntryOutOfRank { value: i64, rank: u8 },

    #[error("cannot parse {0:?} as a letter (expected \"k\" or \"kb\")")]
    ParseEntry(String),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("tableaux have different shapes")]
    ShapeMismatch,

    #[error("({0}, {1}) is not a partition")]
    NotAPartition(i64, i64),

    #[error("operation requires rank 2, got rank {0}")]
    UnsupportedRank(u8),

    #[error("tuple {tuple} violates the Verma inequalities for {hw}")]
    InvalidTuple { tuple: VermaTuple, hw: HighestWeight },

    #[error("tableau is not a KN tableau of sp(4)")]
    NotKn,

    #[error("tableau is not column-strict")]
    NotColumnStrict,

    #[error("vectors live in different tensor spaces")]
    AmbientMismatch,

    #[error("the zero vector has no leading term")]
    ZeroVector,

    /// The requested tensor space is larger than the configured budget.
    #[error("tensor space of dimension {required} exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    /// Tensor words too long to pack into a 64-bit key.
    #[error("{0} tensor letters exceed the supported maximum of 32")]
    TooManyFactors(usize),

    #[error("verification failed for {tuple}: {reason}")]
    Verification { tuple: VermaTuple, reason: String },

    /// A broken internal invariant; always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for refusals caused by the size of the computation rather than by
    /// bad input or a mathematical failure.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::TooManyFactors(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
