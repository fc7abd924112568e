use thiserror::Error;

/// Errors raised anywhere in the solver pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("homogeneous coordinates must not all be zero")]
    InvalidCoordinates,
    #[error("point is not visible")]
    NotVisible,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("combination weights must be non-negative and not both zero")]
    InvalidCombination,
    #[error("cannot combine a point with its opposite")]
    OppositePoints,
    #[error("result is not optimal, no dual solution available")]
    NoDualAvailable,
    #[error("LP certificate check failed: {0}")]
    Certificate(String),
    #[error("endpoints do not lie on opposite sides of the half-space")]
    NotCrossing,
    #[error("vertex index {0} out of range")]
    Index(usize),
    #[error("cut removes every vertex")]
    EmptyResult,
    #[error("vertices do not lie strictly inside a common half-space")]
    NoWitness,
    #[error("vertex {vertex} violates half-space {halfspace}")]
    InfeasibleVertex { vertex: usize, halfspace: usize },
    #[error("feasible set is empty")]
    InfeasibleInstance,
    #[error("feasible set is unbounded")]
    UnboundedInstance,
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("point is not in the outcome set")]
    NotInOutcomeSet,
    #[error("bad segment for boundary search: {0}")]
    BadSegment(String),
    #[error("point is not on the boundary of the target set")]
    NotOnBoundary,
    #[error("enumeration budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("invalid dual cyclic parameters: {0}")]
    InvalidSpec(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
