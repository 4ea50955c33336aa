//! Monomials, corner ideals and their canonical antichains.
//!
//! Every ideal in scope is a finite sum of *corner* ideals: a corner holds a
//! threshold vector `alpha` with per-coordinate strictness flags, and its
//! monomial set is everything at or above the corner in the flagged order.
//! An [`Ideal`] stores the canonical form of such a sum: a set of corners in
//! which none contains another, sorted lexicographically. The zero ideal is
//! the empty set of corners and the unit ideal is the single all-zero closed
//! corner. All operations are pure; values are immutable after construction.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{normalize_strictness, Config, ExtendedExponent, Mode, Rational};

/// A monomial, i.e. a vector of nonnegative finite exponents, one per
/// variable. `X_i^inf = 0` is not a monomial and has no representation here.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<Rational>,
}

impl Monomial {
    pub fn new(exponents: Vec<Rational>, cfg: &Config) -> Result<Monomial> {
        if exponents.len() != cfg.dim {
            return Err(Error::DimensionMismatch { expected: cfg.dim, found: exponents.len() });
        }
        for e in &exponents {
            cfg.check_exponent(e)?;
        }
        Ok(Monomial { exponents })
    }

    /// The identity monomial `X^0 = 1`.
    pub fn one(dim: usize) -> Monomial {
        Monomial { exponents: vec![Rational::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[Rational] {
        &self.exponents
    }

    /// Whether `self` divides `other`, i.e. the componentwise difference of
    /// exponents is nonnegative.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self.exponents.iter().zip(&other.exponents).all(|(f, g)| f <= g))
    }

    /// Least common multiple: the componentwise maximum of exponents.
    pub fn lcm(monomials: &[Monomial]) -> Result<Monomial> {
        let first = monomials.first().ok_or(Error::EmptyLcm)?;
        let mut exponents = first.exponents.clone();
        for m in &monomials[1..] {
            if m.dim() != exponents.len() {
                return Err(Error::DimensionMismatch { expected: exponents.len(), found: m.dim() });
            }
            for (p, e) in exponents.iter_mut().zip(&m.exponents) {
                if e > p {
                    *p = e.clone();
                }
            }
        }
        Ok(Monomial { exponents })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, e) in self.exponents.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " ")?;
            }
            wrote = true;
            if *e == Rational::one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// One staircase corner: the ideal of all monomials `r` with
/// `r_i >= alpha_i` per coordinate (`>` where the strictness flag is set).
/// Thresholds are always finite; a corner with an infinite threshold would
/// be the zero ideal and is represented by the absence of a corner instead.
/// In integer mode every coordinate is stored strictness-normalized.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Corner {
    alpha: Vec<Rational>,
    strict: Vec<bool>,
}

impl Corner {
    pub fn new(alpha: Vec<Rational>, strict: Vec<bool>, cfg: &Config) -> Result<Corner> {
        if alpha.len() != cfg.dim {
            return Err(Error::DimensionMismatch { expected: cfg.dim, found: alpha.len() });
        }
        if strict.len() != cfg.dim {
            return Err(Error::DimensionMismatch { expected: cfg.dim, found: strict.len() });
        }
        if alpha.iter().any(Rational::is_negative) {
            return Err(Error::NegativeExponent);
        }
        let (alpha, strict) = match cfg.mode {
            Mode::Dense => (alpha, strict),
            Mode::Integer => alpha
                .into_iter()
                .zip(strict)
                .map(|(a, s)| normalize_strictness(&a, s, cfg))
                .unzip(),
        };
        Ok(Corner { alpha, strict })
    }

    /// The all-zero closed corner, whose monomial set is the whole ring.
    pub fn unit(dim: usize) -> Corner {
        Corner { alpha: vec![Rational::zero(); dim], strict: vec![false; dim] }
    }

    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn strict(&self) -> &[bool] {
        &self.strict
    }

    pub fn is_closed(&self) -> bool {
        self.strict.iter().all(|s| !s)
    }

    pub fn is_unit(&self) -> bool {
        self.alpha.iter().all(Rational::is_zero) && self.is_closed()
    }

    /// The corner monomial `X^alpha`.
    pub fn monomial(&self) -> Monomial {
        Monomial { exponents: self.alpha.clone() }
    }

    /// Coordinates where this corner imposes a positivity constraint:
    /// threshold positive, or zero but open.
    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.dim())
            .filter(|&i| self.alpha[i].is_positive() || self.strict[i])
            .collect()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.contains_point(m.exponents())
    }

    /// Geometric membership of an exponent vector, used both for monomials
    /// and for arbitrary points of the staircase region.
    pub fn contains_point(&self, point: &[Rational]) -> bool {
        debug_assert_eq!(point.len(), self.dim());
        self.alpha.iter().zip(&self.strict).zip(point).all(|((a, &s), r)| {
            if s {
                r > a
            } else {
                r >= a
            }
        })
    }

    /// Whether every monomial of `other` is a monomial of `self`, i.e. the
    /// ideal of `other` is contained in the ideal of `self`. Coordinatewise:
    /// `other` must sit strictly above, or at the same threshold with a
    /// compatible flag.
    pub fn contains(&self, other: &Corner) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.alpha
            .iter()
            .zip(&self.strict)
            .zip(other.alpha.iter().zip(&other.strict))
            .all(|((a, &sa), (b, &sb))| b > a || (b == a && (!sa || sb)))
    }

    /// The corner of the intersection of two corner ideals: componentwise
    /// maximum of thresholds; at ties the open flag wins.
    pub fn meet(&self, other: &Corner) -> Corner {
        debug_assert_eq!(self.dim(), other.dim());
        let mut alpha = Vec::with_capacity(self.dim());
        let mut strict = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            match self.alpha[i].cmp(&other.alpha[i]) {
                std::cmp::Ordering::Greater => {
                    alpha.push(self.alpha[i].clone());
                    strict.push(self.strict[i]);
                }
                std::cmp::Ordering::Less => {
                    alpha.push(other.alpha[i].clone());
                    strict.push(other.strict[i]);
                }
                std::cmp::Ordering::Equal => {
                    alpha.push(self.alpha[i].clone());
                    strict.push(self.strict[i] || other.strict[i]);
                }
            }
        }
        Corner { alpha, strict }
    }
}

/// A monomial ideal in canonical form: an antichain of corners under
/// [`Corner::contains`], sorted lexicographically by `(alpha, strict)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ideal {
    cfg: Config,
    corners: Vec<Corner>,
}

impl Ideal {
    /// The zero ideal: no corners, no monomials.
    pub fn zero(cfg: Config) -> Ideal {
        Ideal { cfg, corners: Vec::new() }
    }

    /// The unit ideal, generated by `1`.
    pub fn unit(cfg: Config) -> Ideal {
        Ideal { cfg, corners: vec![Corner::unit(cfg.dim)] }
    }

    /// Canonicalizes an arbitrary finite multiset of corners.
    pub fn new(cfg: Config, corners: Vec<Corner>) -> Ideal {
        debug_assert!(corners.iter().all(|c| c.dim() == cfg.dim));
        Ideal { cfg, corners: normalize(corners) }
    }

    /// Builds an ideal from raw `(alpha, strict)` pairs, validating each.
    pub fn from_boxes(cfg: Config, boxes: Vec<(Vec<Rational>, Vec<bool>)>) -> Result<Ideal> {
        let corners = boxes
            .into_iter()
            .map(|(alpha, strict)| Corner::new(alpha, strict, &cfg))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(cfg, corners))
    }

    /// The principal ideal generated by one monomial.
    pub fn principal(cfg: Config, m: &Monomial) -> Result<Ideal> {
        Ideal::generated_by(cfg, std::slice::from_ref(m))
    }

    /// The ideal generated by a finite list of monomials: one closed corner
    /// per generator. An empty list yields the zero ideal.
    pub fn generated_by(cfg: Config, monomials: &[Monomial]) -> Result<Ideal> {
        let corners = monomials
            .iter()
            .map(|m| Corner::new(m.exponents().to_vec(), vec![false; cfg.dim], &cfg))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(cfg, corners))
    }

    pub fn cfg(&self) -> &Config {
        &self.cfg
    }

    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    pub fn is_zero(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.corners.len() == 1 && self.corners[0].is_unit()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Whether every corner is fully closed, i.e. the ideal is finitely
    /// generated by its corner monomials.
    pub fn is_fully_closed(&self) -> bool {
        self.corners.iter().all(Corner::is_closed)
    }

    fn check_cfg(&self, other: &Ideal) -> Result<()> {
        if self.cfg != other.cfg {
            return Err(Error::ConfigMismatch);
        }
        Ok(())
    }

    /// Monomial membership: a monomial lies in the ideal when some corner
    /// admits it.
    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        if m.dim() != self.cfg.dim {
            return Err(Error::DimensionMismatch { expected: self.cfg.dim, found: m.dim() });
        }
        Ok(self.corners.iter().any(|c| c.contains_monomial(m)))
    }

    /// Geometric membership of an exponent vector in the staircase region.
    pub fn region_contains(&self, point: &[Rational]) -> bool {
        debug_assert_eq!(point.len(), self.cfg.dim);
        self.corners.iter().any(|c| c.contains_point(point))
    }

    /// Sum of ideals: the union of the corner sets, canonicalized.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_cfg(other)?;
        let mut corners = self.corners.clone();
        corners.extend(other.corners.iter().cloned());
        Ok(Ideal::new(self.cfg, corners))
    }

    /// Intersection of ideals: all pairwise corner meets, canonicalized.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_cfg(other)?;
        let mut corners = Vec::with_capacity(self.corners.len() * other.corners.len());
        for b in &self.corners {
            for c in &other.corners {
                corners.push(b.meet(c));
            }
        }
        Ok(Ideal::new(self.cfg, corners))
    }

    /// Ideal containment. Because a corner whose monomials all lie in a
    /// finite union of corners must lie in a single one of them, it suffices
    /// to match every corner of `other` against some corner of `self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check_cfg(other)?;
        Ok(other
            .corners
            .iter()
            .all(|c| self.corners.iter().any(|b| b.contains(c))))
    }

    /// The unique irredundant monomial generating sequence: the corner
    /// monomials, in canonical order. Fails when any corner is open, since
    /// the ideal is then not finitely generated.
    pub fn generators(&self) -> Result<Vec<Monomial>> {
        if !self.is_fully_closed() {
            return Err(Error::OpenBox);
        }
        Ok(self.corners.iter().map(Corner::monomial).collect())
    }
}

/// Antichain reduction: drop every corner contained in another one, then
/// sort. Idempotent, and the result is independent of the input order.
fn normalize(mut corners: Vec<Corner>) -> Vec<Corner> {
    corners.sort();
    corners.dedup();
    let kept: Vec<Corner> = corners
        .iter()
        .filter(|c| !corners.iter().any(|b| *b != **c && b.contains(c)))
        .cloned()
        .collect();
    kept
}

/// An ideal generated by pure powers of single variables: one threshold ray
/// per variable, or `Infinity` for "no generators in this variable". The
/// flag of an infinite entry is canonically closed. Components of
/// decompositions and the cover ideals of edge graphs all take this form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PurePowers {
    thresholds: Vec<ExtendedExponent>,
    strict: Vec<bool>,
}

impl PurePowers {
    pub fn new(entries: Vec<(ExtendedExponent, bool)>, cfg: &Config) -> Result<PurePowers> {
        if entries.len() != cfg.dim {
            return Err(Error::DimensionMismatch { expected: cfg.dim, found: entries.len() });
        }
        let mut thresholds = Vec::with_capacity(cfg.dim);
        let mut strict = Vec::with_capacity(cfg.dim);
        for (t, s) in entries {
            match t {
                ExtendedExponent::Infinity => {
                    thresholds.push(ExtendedExponent::Infinity);
                    strict.push(false);
                }
                ExtendedExponent::Finite(a) => {
                    if a.is_negative() {
                        return Err(Error::NegativeExponent);
                    }
                    let (a, s) = normalize_strictness(&a, s, cfg);
                    thresholds.push(ExtendedExponent::Finite(a));
                    strict.push(s);
                }
            }
        }
        Ok(PurePowers { thresholds, strict })
    }

    /// All thresholds infinite: the zero ideal.
    pub fn empty(dim: usize) -> PurePowers {
        PurePowers { thresholds: vec![ExtendedExponent::Infinity; dim], strict: vec![false; dim] }
    }

    /// A single pure-power ray in one variable.
    pub fn single(dim: usize, var: usize, threshold: Rational, strict: bool, cfg: &Config) -> PurePowers {
        debug_assert!(var < dim);
        let mut p = PurePowers::empty(dim);
        let (a, s) = normalize_strictness(&threshold, strict, cfg);
        p.thresholds[var] = ExtendedExponent::Finite(a);
        p.strict[var] = s;
        p
    }

    pub fn dim(&self) -> usize {
        self.thresholds.len()
    }

    pub fn thresholds(&self) -> &[ExtendedExponent] {
        &self.thresholds
    }

    pub fn strict(&self) -> &[bool] {
        &self.strict
    }

    pub fn is_zero(&self) -> bool {
        self.thresholds.iter().all(ExtendedExponent::is_infinite)
    }

    /// Whether some entry admits the exponent 0, making the ideal the whole
    /// ring.
    pub fn is_unit(&self) -> bool {
        self.thresholds
            .iter()
            .zip(&self.strict)
            .any(|(t, &s)| matches!(t, ExtendedExponent::Finite(a) if a.is_zero() && !s))
    }

    /// Coordinates carrying a finite threshold.
    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.dim()).filter(|&i| !self.thresholds[i].is_infinite()).collect()
    }

    /// Conversion to canonical corner form: one single-variable corner per
    /// finite threshold.
    pub fn to_ideal(&self, cfg: &Config) -> Ideal {
        debug_assert_eq!(self.dim(), cfg.dim);
        let corners = (0..self.dim())
            .filter_map(|i| match &self.thresholds[i] {
                ExtendedExponent::Infinity => None,
                ExtendedExponent::Finite(a) => {
                    let mut alpha = vec![Rational::zero(); self.dim()];
                    let mut strict = vec![false; self.dim()];
                    alpha[i] = a.clone();
                    strict[i] = self.strict[i];
                    Some(Corner { alpha, strict })
                }
            })
            .collect();
        Ideal::new(*cfg, corners)
    }

    fn ray_contains(a: &ExtendedExponent, sa: bool, b: &ExtendedExponent, sb: bool) -> bool {
        // Does the generator ray at (a, sa) contain the ray at (b, sb)?
        match (a, b) {
            (_, ExtendedExponent::Infinity) => true,
            (ExtendedExponent::Infinity, _) => false,
            (ExtendedExponent::Finite(a), ExtendedExponent::Finite(b)) => {
                b > a || (b == a && (!sa || sb))
            }
        }
    }

    /// Ideal containment of pure-power ideals. For proper ideals this is
    /// ray containment per variable; the unit ideal contains everything.
    pub fn contains(&self, other: &PurePowers) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        if self.is_unit() {
            return true;
        }
        if other.is_unit() {
            return false;
        }
        (0..self.dim()).all(|i| {
            Self::ray_contains(&self.thresholds[i], self.strict[i], &other.thresholds[i], other.strict[i])
        })
    }

    /// Merges one more generator ray into a variable: the union of rays has
    /// the smaller threshold, and at ties stays closed unless both are open.
    pub fn merge_ray(&mut self, var: usize, threshold: &Rational, strict: bool) {
        match &self.thresholds[var] {
            ExtendedExponent::Infinity => {
                self.thresholds[var] = ExtendedExponent::Finite(threshold.clone());
                self.strict[var] = strict;
            }
            ExtendedExponent::Finite(current) => match threshold.cmp(current) {
                std::cmp::Ordering::Less => {
                    self.thresholds[var] = ExtendedExponent::Finite(threshold.clone());
                    self.strict[var] = strict;
                }
                std::cmp::Ordering::Equal => {
                    self.strict[var] = self.strict[var] && strict;
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

impl fmt::Display for PurePowers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut wrote = false;
        for i in 0..self.dim() {
            let a = match &self.thresholds[i] {
                ExtendedExponent::Infinity => continue,
                ExtendedExponent::Finite(a) => a,
            };
            if wrote {
                write!(f, ", ")?;
            }
            wrote = true;
            if *a == Rational::one() && !self.strict[i] {
                write!(f, "x{}", i + 1)?;
            } else if self.strict[i] {
                write!(f, "x{}^>{}", i + 1, a)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        write!(f, ")")
    }
}
