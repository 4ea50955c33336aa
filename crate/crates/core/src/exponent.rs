//! Exact scalar arithmetic for exponents.
//!
//! Exponents live in the nonnegative rationals (dense mode) or the
//! nonnegative integers (integer mode), extended by an `Infinity` element
//! that only ever takes part in comparisons. Thresholds carry a strictness
//! flag: a closed threshold `a` admits every exponent `r >= a`, an open one
//! only `r > a`. In integer mode an open threshold is indistinguishable
//! from the closed threshold at the next integer, so constructors collapse
//! it there.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator, so equality, ordering and hashing are structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`. Panics when `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Rational {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Rational {
        Rational(BigRational::new(numer, denom))
    }

    pub fn from_int(n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    /// Parses `p` or `p/q` with `q > 0`; the result is stored reduced.
    pub fn parse(text: &str) -> Result<Rational> {
        let bad = || Error::InvalidRational(text.to_string());
        let (numer, denom) = match text.split_once('/') {
            Some((n, d)) => (n, d),
            None => (text, "1"),
        };
        let numer = BigInt::from_str(numer.trim()).map_err(|_| bad())?;
        let denom = BigInt::from_str(denom.trim()).map_err(|_| bad())?;
        if denom <= BigInt::zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn square(&self) -> Rational {
        Rational(&self.0 * &self.0)
    }

    /// Decimal rendering with at most `digits` fractional places, rounded
    /// toward `+inf` when `round_up` and toward `-inf` otherwise. Trailing
    /// zeros are trimmed, so the output is canonical.
    pub fn to_decimal(&self, digits: u32, round_up: bool) -> String {
        let pow = BigInt::from(10u32).pow(digits);
        let scaled = &self.0 * BigRational::from_integer(pow.clone());
        let units = if round_up {
            scaled.ceil().to_integer()
        } else {
            scaled.floor().to_integer()
        };
        let negative = units.is_negative();
        let mut abs = units.magnitude().to_string();
        let width = digits as usize;
        if abs.len() <= width {
            abs = format!("{}{}", "0".repeat(width + 1 - abs.len()), abs);
        }
        let split = abs.len() - width;
        let (int_part, frac_part) = abs.split_at(split);
        let frac_part = frac_part.trim_end_matches('0');
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(int_part);
        if !frac_part.is_empty() {
            out.push('.');
            out.push_str(frac_part);
        }
        out
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Rational {
        Rational(BigRational::from_integer(n))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// A nonnegative rational exponent or the formal `Infinity`, which compares
/// strictly greater than every finite value. There is no arithmetic with
/// `Infinity`: it only occurs in comparisons and as an "absent threshold"
/// marker.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedExponent {
    Finite(Rational),
    Infinity,
}

impl ExtendedExponent {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedExponent::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedExponent::Finite(r) => Some(r),
            ExtendedExponent::Infinity => None,
        }
    }
}

impl From<Rational> for ExtendedExponent {
    fn from(r: Rational) -> ExtendedExponent {
        ExtendedExponent::Finite(r)
    }
}

impl fmt::Display for ExtendedExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedExponent::Finite(r) => write!(f, "{r}"),
            ExtendedExponent::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtendedExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The flagged order: `r >= alpha` when `strict` is false, `r > alpha` when
/// it is true. An infinite threshold is met only by `Infinity` itself,
/// regardless of the flag.
pub fn geq_eps(r: &ExtendedExponent, alpha: &ExtendedExponent, strict: bool) -> bool {
    match alpha {
        ExtendedExponent::Infinity => r.is_infinite(),
        ExtendedExponent::Finite(a) => match r {
            ExtendedExponent::Infinity => true,
            ExtendedExponent::Finite(r) => {
                if strict {
                    r > a
                } else {
                    r >= a
                }
            }
        },
    }
}

/// Which exponent group the ambient ring uses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    /// Nonnegative rationals; open thresholds are meaningful.
    Dense,
    /// Nonnegative integers; open thresholds collapse to the next integer.
    Integer,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Dense => write!(f, "Q"),
            Mode::Integer => write!(f, "Z"),
        }
    }
}

/// Number of variables and exponent mode, fixed for the lifetime of every
/// object built under it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Config {
    pub dim: usize,
    pub mode: Mode,
}

impl Config {
    pub fn dense(dim: usize) -> Config {
        assert!(dim >= 1, "ambient dimension must be at least 1");
        Config { dim, mode: Mode::Dense }
    }

    pub fn integer(dim: usize) -> Config {
        assert!(dim >= 1, "ambient dimension must be at least 1");
        Config { dim, mode: Mode::Integer }
    }

    /// Validates a single exponent value against this configuration.
    pub fn check_exponent(&self, r: &Rational) -> Result<()> {
        if r.is_negative() {
            return Err(Error::NegativeExponent);
        }
        if self.mode == Mode::Integer && !r.is_integer() {
            return Err(Error::NonIntegerExponent);
        }
        Ok(())
    }
}

/// Rewrites a threshold so that the set of admissible exponents in the
/// configured mode is unchanged. Dense mode is the identity; integer mode
/// replaces an open threshold by the smallest integer strictly above it and
/// a closed fractional threshold by the smallest integer at or above it.
pub fn normalize_strictness(alpha: &Rational, strict: bool, cfg: &Config) -> (Rational, bool) {
    match cfg.mode {
        Mode::Dense => (alpha.clone(), strict),
        Mode::Integer => {
            if strict {
                (Rational::from(alpha.floor_int() + 1), false)
            } else if !alpha.is_integer() {
                (Rational::from(alpha.ceil_int()), false)
            } else {
                (alpha.clone(), false)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(n: i64, d: i64) -> ExtendedExponent {
        ExtendedExponent::Finite(Rational::new(n, d))
    }

    #[test]
    fn flagged_order_on_finite_values() {
        assert!(geq_eps(&fin(3, 2), &fin(3, 2), false));
        assert!(!geq_eps(&fin(3, 2), &fin(3, 2), true));
        assert!(geq_eps(&fin(2, 1), &fin(3, 2), true));
    }

    #[test]
    fn infinite_threshold_needs_infinity() {
        assert!(!geq_eps(&fin(2, 1), &ExtendedExponent::Infinity, false));
        assert!(!geq_eps(&fin(2, 1), &ExtendedExponent::Infinity, true));
        assert!(geq_eps(&ExtendedExponent::Infinity, &ExtendedExponent::Infinity, false));
        assert!(geq_eps(&ExtendedExponent::Infinity, &ExtendedExponent::Infinity, true));
        assert!(geq_eps(&ExtendedExponent::Infinity, &fin(7, 1), true));
    }

    #[test]
    fn strictness_normalization() {
        let z = Config::integer(1);
        let q = Config::dense(1);
        assert_eq!(
            normalize_strictness(&Rational::from_int(1), true, &z),
            (Rational::from_int(2), false)
        );
        assert_eq!(
            normalize_strictness(&Rational::from_int(1), true, &q),
            (Rational::from_int(1), true)
        );
        assert_eq!(
            normalize_strictness(&Rational::new(3, 2), false, &z),
            (Rational::from_int(2), false)
        );
    }

    #[test]
    fn normalization_preserves_integer_solutions() {
        let z = Config::integer(1);
        for num in 0..12 {
            for den in 1..4 {
                for strict in [false, true] {
                    let alpha = Rational::new(num, den);
                    let (beta, closed) = normalize_strictness(&alpha, strict, &z);
                    assert!(!closed);
                    for n in 0..12i64 {
                        let r = ExtendedExponent::Finite(Rational::from_int(n));
                        assert_eq!(
                            geq_eps(&r, &ExtendedExponent::Finite(alpha.clone()), strict),
                            geq_eps(&r, &ExtendedExponent::Finite(beta.clone()), false),
                            "alpha={alpha} strict={strict} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn strict_implies_weak_and_monotone() {
        let values: Vec<Rational> =
            (0..8).flat_map(|n| (1..3).map(move |d| Rational::new(n, d))).collect();
        for r in &values {
            for a in &values {
                let r_ext = ExtendedExponent::Finite(r.clone());
                let a_ext = ExtendedExponent::Finite(a.clone());
                if geq_eps(&r_ext, &a_ext, true) {
                    assert!(geq_eps(&r_ext, &a_ext, false));
                }
                for bigger in &values {
                    if bigger >= r {
                        let b_ext = ExtendedExponent::Finite(bigger.clone());
                        for strict in [false, true] {
                            if geq_eps(&r_ext, &a_ext, strict) {
                                assert!(geq_eps(&b_ext, &a_ext, strict));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rational_parsing_and_display() {
        assert_eq!(Rational::parse("3/2").unwrap(), Rational::new(3, 2));
        assert_eq!(Rational::parse("4/2").unwrap(), Rational::from_int(2));
        assert_eq!(Rational::parse("7").unwrap().to_string(), "7");
        assert_eq!(Rational::new(3, 2).to_string(), "3/2");
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("1/-2").is_err());
        assert!(Rational::parse("x").is_err());
    }

    #[test]
    fn decimal_rendering_rounds_outward() {
        let third = Rational::new(1, 3);
        assert_eq!(third.to_decimal(4, false), "0.3333");
        assert_eq!(third.to_decimal(4, true), "0.3334");
        assert_eq!(Rational::from_int(2).to_decimal(6, true), "2");
        assert_eq!(Rational::new(-1, 3).to_decimal(3, false), "-0.334");
        assert_eq!(Rational::new(5, 4).to_decimal(3, true), "1.25");
    }

    #[test]
    fn infinity_is_the_top_of_the_order() {
        assert!(fin(1, 1) < ExtendedExponent::Infinity);
        assert!(fin(1000, 1) < ExtendedExponent::Infinity);
        assert_eq!(ExtendedExponent::Infinity, ExtendedExponent::Infinity);
    }
}
