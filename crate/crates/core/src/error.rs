use thiserror::Error;

use crate::rat::Rat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,

    #[error("{x} lies outside the domain [{lo}, {hi}]")]
    OutsideDomain { x: Rat, lo: Rat, hi: Rat },

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("range [{range_lo}, {range_hi}] is not contained in domain [{lo}, {hi}]")]
    DomainMismatch {
        range_lo: Rat,
        range_hi: Rat,
        lo: Rat,
        hi: Rat,
    },

    #[error("empty interval [{lo}, {hi}]")]
    EmptyInterval { lo: Rat, hi: Rat },

    #[error("clamp bounds must satisfy lo < hi inside the domain, got [{lo}, {hi}]")]
    InvalidBounds { lo: Rat, hi: Rat },

    #[error("f^{n} is the identity on [{lo}, {hi}]: periodic points are not isolated")]
    NonIsolatedPeriodicPoints { n: u32, lo: Rat, hi: Rat },

    #[error("period {requested} exceeds the enumeration horizon {horizon}")]
    HorizonExceeded { requested: u32, horizon: u32 },

    #[error("{x} is not periodic within horizon {horizon}")]
    NotPeriodic { x: Rat, horizon: u32 },

    #[error("no orbit of least period {n}")]
    NoSuchOrbit { n: u32 },

    #[error("invalid orbit: {0}")]
    InvalidOrbit(String),

    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}
