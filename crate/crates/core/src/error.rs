//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state space must contain at least one state")]
    EmptyStateSpace,

    #[error("state space supports at most 64 states, got {0}")]
    TooManyStates(usize),

    #[error("state name must be non-empty")]
    EmptyStateName,

    #[error("duplicate state name '{0}'")]
    DuplicateStateName(String),

    #[error("unknown state '{0}'")]
    UnknownState(String),

    #[error("events belong to different state spaces")]
    MismatchedStateSpace,

    #[error("acts are defined over different outcome scales")]
    MismatchedScale,

    #[error("duplicate consequence name '{0}'")]
    DuplicateConsequenceName(String),

    #[error("outcome scale needs at least two consequences with distinct ranks")]
    DegenerateScale,

    #[error("unknown consequence '{0}'")]
    UnknownConsequence(String),

    #[error("'{best}' must rank strictly above '{worse}'")]
    RankOrder { best: String, worse: String },

    #[error("act must assign a consequence to state '{0}'")]
    MissingAssignment(String),

    #[error("possibility profile must have at least one state above level 0")]
    TrivialProfile,

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("duplicate act name '{0}'")]
    DuplicateActName(String),

    #[error("conditioning event is null; every entailment from it is vacuous")]
    NullConditioningEvent,

    #[error("relation leaves a pair of events incomparable; a complete relation is required")]
    IncomparablePair,

    #[error("enumeration ceiling of {ceiling} instances exceeded")]
    CeilingExceeded { ceiling: u64 },

    #[error("invalid search bounds: {0}")]
    InvalidBounds(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
