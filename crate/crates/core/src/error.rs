use alloc::string::String;

use crate::permcore::Permutation;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse cycle notation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,

    #[error("element is not a member of the group")]
    NotMember,

    #[error("group order {order} exceeds the enumeration bound {bound}")]
    OrderBound { order: u64, bound: u64 },

    #[error("search budget of {limit} nodes exhausted")]
    BudgetExhausted { limit: u64 },

    #[error("order {0} is not covered by the group catalog")]
    UnsupportedOrder(u64),

    #[error("degree {0} is not supported by this operation")]
    UnsupportedDegree(usize),

    #[error("catalog line {line}: {reason}")]
    CatalogFormat { line: usize, reason: String },

    #[error("catalog check failed for {entry}: {reason}")]
    CatalogCheck { entry: String, reason: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("hypothesis violated: {reason}")]
    Hypothesis {
        reason: String,
        witness: Option<Permutation>,
    },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
