//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by the exact arithmetic, enumeration and bijection layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two Laurent values use exponent granularities where neither divides the other.
    #[error("incompatible granularities {0} and {1}")]
    Granularity(u32, u32),
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A series whose constant term is not a unit monomial was inverted.
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    /// An exact division left a nonzero remainder.
    #[error("division is not exact")]
    NotDivisible,
    /// An enumeration would exceed the configured object budget.
    #[error("enumeration exceeds the size limit of {0} objects")]
    SizeLimit(u64),
    /// An involution was applied to one of its fixed points.
    #[error("object is a fixed point of the involution")]
    FixedPoint,
    /// A Möbius transform was applied where its denominator vanishes at z = 0.
    #[error("denominator vanishes at the origin")]
    PoleAtOrigin,
    /// A bijection produced an object outside its declared codomain.
    #[error("bijection violation: {0}")]
    BijectionViolation(String),
    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
