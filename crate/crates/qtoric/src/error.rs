//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ray: {0}")]
    InvalidRay(String),

    #[error("unsupported cone: {0}")]
    UnsupportedCone(String),

    #[error("relation search limited to {limit} rays, got {got}")]
    RelationTooLarge { limit: usize, got: usize },

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("undefined: {0}")]
    Undefined(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("shape mismatch: {0}")]
    ShapeError(String),

    #[error("polynomial does not split over Q(i): {0}")]
    NotSplittable(String),

    #[error("rays do not span the ambient space")]
    NotSpanning,

    #[error("argument out of range: {0}")]
    RangeError(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
