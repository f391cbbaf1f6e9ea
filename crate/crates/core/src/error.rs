use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modular parameter must lie in the upper half-plane, got Im(tau) = {0}")]
    NotUpperHalfPlane(f64),

    #[error("non-finite argument: {0}")]
    NonFinite(&'static str),

    #[error("y-tuple must have at least one component")]
    EmptyYTuple,

    #[error("y-tuple components must sum to zero, |sum| = {sum:e} exceeds {allowed:e}")]
    YSumNotZero { sum: f64, allowed: f64 },

    #[error("winding order m must be at least 1")]
    ZeroWindingOrder,

    #[error("enumeration of {terms} terms exceeds the work budget of {budget}")]
    WorkBudget { terms: u128, budget: u64 },

    #[error("invalid sample plan: {0}")]
    InvalidPlan(String),
}

pub type Result<T> = std::result::Result<T, Error>;
