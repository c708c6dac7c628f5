use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Two operands live in different algebras (descriptors differ).
    #[error("algebra mismatch: operands belong to different algebras")]
    AlgebraMismatch,

    /// A descriptor fails structural validation (bad n, empty sum, too large).
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    /// A coordinate vector has the wrong length or non-finite entries.
    #[error("invalid coordinates: {0}")]
    InvalidCoords(String),

    /// A scalar function was applied outside the spectrum it is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// An element required to be in the open cone is on or outside the boundary.
    #[error("boundary error: element is not in the cone interior")]
    Boundary,

    /// A ray representative pairs non-positively with the unit.
    #[error("non-positive trace against the unit")]
    NonPositive,

    /// A functional required to be positive has a negative part.
    #[error("functional is not positive")]
    NotPositive,

    /// A functional required to annihilate the unit does not.
    #[error("functional does not annihilate the unit")]
    NotInHyperplane,

    /// An element fails the idempotency check for projections.
    #[error("not a projection: {0}")]
    NotAProjection(String),

    /// A face descriptor is malformed (non-orthogonal or trivial projections).
    #[error("invalid face: {0}")]
    InvalidFace(String),

    /// A map fails a sampled isometry pre-check.
    #[error("not an isometry: {0}")]
    NotAnIsometry(String),

    /// Factorization could not produce a verified (epsilon, y, J) encoding.
    #[error("factorization failed: {0}")]
    FactorizationFailed(String),

    /// The verification runner was asked for a suite it does not know.
    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    /// JSON (de)serialization failure at an input boundary.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
