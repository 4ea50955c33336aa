use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient configuration mismatch")]
    ConfigMismatch,

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("ideal has an open threshold and is not finitely generated")]
    OpenBox,

    #[error("lcm of an empty list of monomials")]
    EmptyLcm,

    #[error("exponents must be nonnegative")]
    NegativeExponent,

    #[error("integer mode admits only integer exponents")]
    NonIntegerExponent,

    #[error("not a diagonal quadratic ideal: {0}")]
    Shape(String),

    #[error("distance is undefined when either ideal is zero")]
    DistanceUndefined,

    #[error("tolerance must be positive")]
    InvalidTolerance,

    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("invalid ideal json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
