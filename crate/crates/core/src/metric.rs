//! The distance between nonzero finitely generated monomial ideals, as a
//! certified enclosure.
//!
//! For a fully closed ideal the staircase region is a finite union of
//! closed up-orthants, one per generator corner. The squared euclidean
//! distance from a point `p` to such a region is the minimum over the
//! corners `b` of `sum_i max(b_i - p_i, 0)^2`, an exact rational. That map
//! is componentwise non-increasing in `p`, and each orthant of the source
//! region has its corner as least element, so the supremum of the
//! point-to-region distance over a staircase region is attained at a
//! generator corner. The directed and symmetric distances are therefore
//! exact rationals in squared form; only the final square root is
//! approximated, by outward-rounded rational bounds tight enough for the
//! requested tolerance.
//!
//! Ideals with open thresholds are rejected: on those the distance
//! degenerates to a pseudometric (distinct ideals at distance zero), so the
//! metric axioms would fail.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exponent::Rational;
use crate::ideal::Ideal;

/// Two-sided bounds on a distance value: `lo <= dist <= hi`, with
/// `hi - lo` at most the requested tolerance. `sq` is the exact square of
/// the distance, from which the bounds are derived.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
    pub sq: Rational,
}

impl Enclosure {
    fn from_square(sq: Rational, tol: &Rational) -> Enclosure {
        let (lo, hi) = sqrt_bounds(&sq, tol);
        Enclosure { lo, hi, sq }
    }
}

/// Rational bounds `(lo, hi)` with `lo <= sqrt(x) <= hi` and
/// `hi - lo <= err`. Exact when `x` is a perfect square of a rational with
/// denominator dividing the working scale.
fn sqrt_bounds(x: &Rational, err: &Rational) -> (Rational, Rational) {
    debug_assert!(!x.is_negative() && err.is_positive());
    if x.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    // Scale so that one step of the integer square root is below err.
    let scale_rat = &Rational::one() / err;
    let mut scale = scale_rat.ceil_int();
    if scale < BigInt::one() {
        scale = BigInt::one();
    }
    // Make the scale a multiple of the denominator's square root headroom:
    // using den * scale keeps perfect squares exact.
    let scale = scale * x.denom();
    let scaled = x * &Rational::from(scale.clone() * scale.clone());
    debug_assert!(scaled.is_integer());
    let scaled_int = scaled.numer().clone();
    let root = scaled_int.sqrt();
    let lo = Rational::from_bigints(root.clone(), scale.clone());
    if &root * &root == scaled_int {
        return (lo.clone(), lo);
    }
    let hi = Rational::from_bigints(root + 1, scale);
    (lo, hi)
}

fn require_closed_pair(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.cfg() != b.cfg() {
        return Err(Error::ConfigMismatch);
    }
    if !a.is_fully_closed() || !b.is_fully_closed() {
        return Err(Error::OpenBox);
    }
    Ok(())
}

fn check_tolerance(tol: &Rational) -> Result<()> {
    if !tol.is_positive() {
        return Err(Error::InvalidTolerance);
    }
    Ok(())
}

/// Exact squared distance from an exponent point to the staircase region of
/// a nonzero, fully closed ideal: the minimum over generator corners `b` of
/// `sum_i max(b_i - p_i, 0)^2`.
pub fn point_to_ideal(point: &[Rational], ideal: &Ideal) -> Result<Rational> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_fully_closed() {
        return Err(Error::OpenBox);
    }
    if point.len() != ideal.cfg().dim {
        return Err(Error::DimensionMismatch { expected: ideal.cfg().dim, found: point.len() });
    }
    let mut best: Option<Rational> = None;
    for corner in ideal.corners() {
        let mut sq = Rational::zero();
        for (b, p) in corner.alpha().iter().zip(point) {
            if b > p {
                let gap = b - p;
                sq = &sq + &gap.square();
            }
        }
        if best.as_ref().is_none_or(|cur| sq < *cur) {
            best = Some(sq);
        }
    }
    Ok(best.expect("nonzero ideal has a corner"))
}

/// Exact square of the directed distance from `from` to `to`: the largest
/// distance any monomial of `from` has to travel to reach `to`. Attained at
/// a generator corner of `from`.
pub fn directed_distance_sq(from: &Ideal, to: &Ideal) -> Result<Rational> {
    if from.is_zero() || to.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    require_closed_pair(from, to)?;
    let mut worst = Rational::zero();
    for corner in from.corners() {
        let sq = point_to_ideal(corner.alpha(), to)?;
        if sq > worst {
            worst = sq;
        }
    }
    Ok(worst)
}

/// Certified enclosure of the directed distance, of width at most `tol`.
pub fn directed_distance(from: &Ideal, to: &Ideal, tol: &Rational) -> Result<Enclosure> {
    check_tolerance(tol)?;
    Ok(Enclosure::from_square(directed_distance_sq(from, to)?, tol))
}

/// Certified enclosure of the distance between two nonzero, fully closed
/// ideals: the larger of the two directed distances, with `hi - lo <= tol`.
pub fn distance(a: &Ideal, b: &Ideal, tol: &Rational) -> Result<Enclosure> {
    check_tolerance(tol)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::DistanceUndefined);
    }
    let forward = directed_distance_sq(a, b)?;
    let backward = directed_distance_sq(b, a)?;
    let sq = forward.max(backward);
    Ok(Enclosure::from_square(sq, tol))
}
