use thiserror::Error;

use crate::intersection::ModelId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis mismatch: class lives on {found}, expected {expected}")]
    BasisMismatch { expected: ModelId, found: ModelId },

    #[error("class has {found} coefficients but {model} has rank {rank}")]
    RankMismatch { model: ModelId, rank: usize, found: usize },

    #[error("model {0} has no intersection form")]
    NoIntersectionForm(ModelId),

    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    #[error("sectional genus is not integral: (K+L).L = {0} is odd")]
    NonIntegralGenus(i64),

    #[error("integrality failure: {0}")]
    Integrality(String),

    #[error("{what} is not divisible by {divisor}")]
    Divisibility { what: String, divisor: i64 },

    #[error("infeasible linear conditions: t = {t} exceeds the {s} imposed points")]
    InfeasibleLinearConditions { t: i64, s: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
