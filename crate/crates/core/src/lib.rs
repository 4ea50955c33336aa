//! Exact computation with monomial ideals whose exponents range over the
//! nonnegative rationals (dense mode) or nonnegative integers (integer
//! mode).
//!
//! Ideals are stored as canonical antichains of staircase corners, which
//! represent finite sums of "almost principal" ideals and cover both the
//! classical finitely generated case and ideals generated by open families
//! such as all `X^a` with `a > 1`. On top of the core arithmetic the crate
//! provides:
//!
//! - the unique irredundant decomposition into pure-power (m-irreducible)
//!   ideals ([`decompose`]),
//! - monomial Krull dimension, maximal prime chains and the semicontinuity
//!   radius ([`dimension`]),
//! - a certified metric between nonzero finitely generated ideals
//!   ([`metric`]),
//! - interval vertex covers of diagonal quadratic ideals with the classical
//!   weighted-cover oracle ([`covers`]),
//! - canonical JSON persistence ([`json`]).
//!
//! All values are immutable and all operations are pure functions, so
//! everything can be shared freely across threads.

pub mod covers;
pub mod decompose;
pub mod dimension;
pub mod error;
pub mod exponent;
pub mod ideal;
pub mod json;
pub mod metric;

pub use error::{Error, Result};
pub use exponent::{geq_eps, normalize_strictness, Config, ExtendedExponent, Mode, Rational};
pub use ideal::{Corner, Ideal, Monomial, PurePowers};
