//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("topology is not T0: points '{0}' and '{1}' are topologically equivalent")]
    NotT0(String, String),
    #[error("unknown point id '{0}'")]
    UnknownPoint(String),
    #[error("duplicate point id '{0}'")]
    DuplicatePoint(String),
    #[error("point '{0}' is not in the space")]
    StrayPoint(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degree {0} is absent from the graded space")]
    DegreeAbsent(i64),
    #[error("ambient spaces differ: {0}")]
    AmbientMismatch(String),
    #[error("relation list is empty")]
    EmptyRelationList,
    #[error("graded spaces differ: {0}")]
    SpaceMismatch(String),
    #[error("map is not invertible in degree {0}")]
    NotInvertible(i64),
    #[error("map is not monotone continuous: {0}")]
    NotMonotone(String),
    #[error("basepoint '{0}' is not minimal for the direction preorder")]
    BasepointNotMinimal(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("space has {points} points, above the brute-force cap of {cap}")]
    OracleCapExceeded { points: usize, cap: usize },
    #[error("direction mode '{0}' does not match the supplied relations")]
    DirectionModeMismatch(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("malformed document: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
