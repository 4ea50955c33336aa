//! Irreducible decomposition of monomial ideals.
//!
//! Every corner is an intersection of single-variable pure-power ideals,
//! one per supported coordinate. Distributing the resulting
//! sum-of-intersections into an intersection-of-sums over all choice
//! functions, merging each sum componentwise and discarding components
//! that contain another yields the unique irredundant decomposition into
//! pure-power (equivalently, m-irreducible) ideals. The enumeration is
//! exponential in the number of corners; this is a desk-scale tool that
//! favors exactness over speed.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{Config, ExtendedExponent, Mode, Rational};
use crate::ideal::{Corner, Ideal, PurePowers};

/// The unique irredundant decomposition of `source` into pairwise
/// incomparable pure-power ideals whose intersection is `source`. The unit
/// ideal decomposes as the empty intersection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    source: Ideal,
    components: Vec<PurePowers>,
}

impl Decomposition {
    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn components(&self) -> &[PurePowers] {
        &self.components
    }

    /// Intersection of all components; equals `source` by construction.
    pub fn intersection(&self) -> Ideal {
        let cfg = *self.source.cfg();
        self.components
            .iter()
            .fold(Ideal::unit(cfg), |acc, p| {
                acc.intersect(&p.to_ideal(&cfg)).expect("components share the source config")
            })
    }

    pub(crate) fn from_parts(source: Ideal, mut components: Vec<PurePowers>) -> Decomposition {
        components.sort();
        components.dedup();
        Decomposition { source, components }
    }
}

/// The set of variables an m-prime ideal is generated from (0-based).
/// Displays 1-based to match the variable names `x1..xd`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PrimeSupport(BTreeSet<usize>);

impl PrimeSupport {
    pub fn new<I: IntoIterator<Item = usize>>(vars: I) -> PrimeSupport {
        PrimeSupport(vars.into_iter().collect())
    }

    pub fn empty() -> PrimeSupport {
        PrimeSupport(BTreeSet::new())
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// Computes the unique irredundant finite decomposition into m-irreducible
/// ideals. The zero ideal has no such decomposition.
pub fn decompose(ideal: &Ideal) -> Result<Decomposition> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let cfg = *ideal.cfg();
    if ideal.is_unit() {
        return Ok(Decomposition::from_parts(ideal.clone(), Vec::new()));
    }

    // Single-variable pieces per corner; the support of a proper canonical
    // corner is never empty.
    let pieces: Vec<Vec<(usize, &Rational, bool)>> = ideal
        .corners()
        .iter()
        .map(|c| {
            c.support()
                .into_iter()
                .map(|i| (i, &c.alpha()[i], c.strict()[i]))
                .collect()
        })
        .collect();

    let mut components = Vec::new();
    let mut choice = vec![0usize; pieces.len()];
    loop {
        let mut merged = PurePowers::empty(cfg.dim);
        for (corner_idx, &piece_idx) in choice.iter().enumerate() {
            let (var, alpha, strict) = pieces[corner_idx][piece_idx];
            merged.merge_ray(var, alpha, strict);
        }
        components.push(merged);

        // Odometer over all choice functions.
        let mut pos = 0;
        loop {
            if pos == pieces.len() {
                break;
            }
            choice[pos] += 1;
            if choice[pos] < pieces[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
        if pos == pieces.len() {
            break;
        }
    }

    components.sort();
    components.dedup();
    let irredundant: Vec<PurePowers> = components
        .iter()
        .filter(|c| !components.iter().any(|o| *o != **c && c.contains(o)))
        .cloned()
        .collect();

    Ok(Decomposition::from_parts(ideal.clone(), irredundant))
}

/// An ideal is m-irreducible exactly when it is generated by pure powers of
/// single variables, i.e. every canonical corner constrains at most one
/// coordinate. Undefined for the zero and unit ideals.
pub fn is_m_irreducible(ideal: &Ideal) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(ideal.corners().iter().all(|c| c.support().len() <= 1))
}

/// Recognizes the m-prime ideals: those generated by all positive powers of
/// a set of variables. Returns that set, or `None` when the ideal is not of
/// this shape. The zero ideal is the m-prime on the empty variable set.
pub fn is_m_prime(ideal: &Ideal) -> Option<PrimeSupport> {
    if ideal.is_unit() {
        return None;
    }
    let cfg = ideal.cfg();
    let mut vars = BTreeSet::new();
    for corner in ideal.corners() {
        let support = corner.support();
        if support.len() != 1 {
            return None;
        }
        let i = *support.iter().next().unwrap();
        let ok = match cfg.mode {
            Mode::Dense => corner.alpha()[i].is_zero() && corner.strict()[i],
            Mode::Integer => corner.alpha()[i] == Rational::one() && !corner.strict()[i],
        };
        if !ok {
            return None;
        }
        vars.insert(i);
    }
    Some(PrimeSupport(vars))
}

/// The m-prime ideal generated by every positive power of the variables in
/// `support`: per variable the ray above 0 open (dense mode) or at 1 closed
/// (integer mode). The empty support gives the zero ideal.
pub fn q_ideal(support: &PrimeSupport, cfg: &Config) -> Ideal {
    let corners = support
        .indices()
        .iter()
        .map(|&i| {
            assert!(i < cfg.dim, "variable index out of range");
            let mut alpha = vec![Rational::zero(); cfg.dim];
            let mut strict = vec![false; cfg.dim];
            match cfg.mode {
                Mode::Dense => strict[i] = true,
                Mode::Integer => alpha[i] = Rational::one(),
            }
            Corner::new(alpha, strict, cfg).expect("q_ideal corner is valid")
        })
        .collect();
    Ideal::new(*cfg, corners)
}

/// The full threshold data of a corner viewed per coordinate, exposed for
/// the pure-power conversion used by covers and tests.
pub fn corner_rays(corner: &Corner) -> Vec<(usize, ExtendedExponent, bool)> {
    corner
        .support()
        .into_iter()
        .map(|i| (i, ExtendedExponent::Finite(corner.alpha()[i].clone()), corner.strict()[i]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn corner(cfg: &Config, alpha: &[(i64, i64)], strict: &[bool]) -> Corner {
        Corner::new(alpha.iter().map(|&(n, d)| q(n, d)).collect(), strict.to_vec(), cfg).unwrap()
    }

    fn pure(cfg: &Config, entries: &[(usize, (i64, i64), bool)]) -> PurePowers {
        let mut list = vec![(ExtendedExponent::Infinity, false); cfg.dim];
        for &(var, (n, d), s) in entries {
            list[var] = (ExtendedExponent::Finite(q(n, d)), s);
        }
        PurePowers::new(list, cfg).unwrap()
    }

    #[test]
    fn support_of_corners() {
        let cfg = Config::dense(3);
        let c = corner(&cfg, &[(1, 1), (1, 1), (0, 1)], &[false, false, false]);
        assert_eq!(c.support(), BTreeSet::from([0, 1]));
        let cfg2 = Config::dense(2);
        let open_at_zero = corner(&cfg2, &[(0, 1), (0, 1)], &[false, true]);
        assert_eq!(open_at_zero.support(), BTreeSet::from([1]));
        assert!(Corner::unit(2).support().is_empty());
    }

    #[test]
    fn decompose_single_open_corner() {
        // The corner at (1,1) with an open second coordinate splits into
        // (x2^{>1}) and (x1).
        let cfg = Config::dense(2);
        let i = Ideal::new(cfg, vec![corner(&cfg, &[(1, 1), (1, 1)], &[false, true])]);
        let d = decompose(&i).unwrap();
        let expected = vec![
            pure(&cfg, &[(0, (1, 1), false)]),
            pure(&cfg, &[(1, (1, 1), true)]),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(d.components(), &expected[..]);
        assert_eq!(d.intersection(), i);
    }

    #[test]
    fn decompose_two_corner_example() {
        // (x1 x2, x2^{>2} x3^{>2}) = (x1, x2^{>2}) n (x1, x3^{>2}) n (x2).
        let cfg = Config::dense(3);
        let i = Ideal::new(
            cfg,
            vec![
                corner(&cfg, &[(1, 1), (1, 1), (0, 1)], &[false, false, false]),
                corner(&cfg, &[(0, 1), (2, 1), (2, 1)], &[false, true, true]),
            ],
        );
        let d = decompose(&i).unwrap();
        let mut expected = [pure(&cfg, &[(0, (1, 1), false), (1, (2, 1), true)]),
            pure(&cfg, &[(0, (1, 1), false), (2, (2, 1), true)]),
            pure(&cfg, &[(1, (1, 1), false)])];
        expected.sort();
        assert_eq!(d.components(), &expected[..]);
        assert_eq!(d.intersection(), i);
    }

    #[test]
    fn decompose_integer_pure_powers_is_identity() {
        let cfg = Config::integer(2);
        let i = Ideal::new(
            cfg,
            vec![
                corner(&cfg, &[(2, 1), (0, 1)], &[false, false]),
                corner(&cfg, &[(0, 1), (3, 1)], &[false, false]),
            ],
        );
        let d = decompose(&i).unwrap();
        assert_eq!(d.components().len(), 1);
        assert_eq!(d.components()[0], pure(&cfg, &[(0, (2, 1), false), (1, (3, 1), false)]));
        assert_eq!(d.intersection(), i);
    }

    #[test]
    fn decompose_rejects_zero_and_unwinds_unit() {
        let cfg = Config::dense(2);
        assert_eq!(decompose(&Ideal::zero(cfg)), Err(Error::ZeroIdeal));
        let unit = decompose(&Ideal::unit(cfg)).unwrap();
        assert!(unit.components().is_empty());
        assert_eq!(unit.intersection(), Ideal::unit(cfg));
    }

    #[test]
    fn m_irreducibility() {
        let cfg = Config::dense(2);
        let j = Ideal::new(
            cfg,
            vec![
                corner(&cfg, &[(1, 1), (0, 1)], &[false, false]),
                corner(&cfg, &[(0, 1), (1, 1)], &[false, true]),
            ],
        );
        assert!(is_m_irreducible(&j).unwrap());

        let not = Ideal::new(
            cfg,
            vec![
                corner(&cfg, &[(1, 1), (0, 1)], &[true, false]),
                corner(&cfg, &[(0, 1), (1, 1)], &[false, false]),
                corner(&cfg, &[(1, 1), (1, 2)], &[false, false]),
            ],
        );
        assert!(!is_m_irreducible(&not).unwrap());

        let diagonal = Ideal::new(cfg, vec![corner(&cfg, &[(1, 1), (1, 1)], &[false, false])]);
        assert!(!is_m_irreducible(&diagonal).unwrap());

        assert_eq!(is_m_irreducible(&Ideal::unit(cfg)), Err(Error::UnitIdeal));
        assert_eq!(is_m_irreducible(&Ideal::zero(cfg)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn m_prime_recognition() {
        let dense = Config::dense(2);
        let q2 = q_ideal(&PrimeSupport::new([1]), &dense);
        assert_eq!(is_m_prime(&q2), Some(PrimeSupport::new([1])));

        let x1 = Ideal::new(dense, vec![corner(&dense, &[(1, 1), (0, 1)], &[false, false])]);
        assert_eq!(is_m_prime(&x1), None);

        let zmode = Config::integer(2);
        let x1z = Ideal::new(zmode, vec![corner(&zmode, &[(1, 1), (0, 1)], &[false, false])]);
        assert_eq!(is_m_prime(&x1z), Some(PrimeSupport::new([0])));

        assert_eq!(is_m_prime(&Ideal::zero(dense)), Some(PrimeSupport::empty()));
        assert_eq!(is_m_prime(&Ideal::unit(dense)), None);
    }

    #[test]
    fn q_ideal_shapes() {
        let cfg = Config::dense(2);
        assert!(q_ideal(&PrimeSupport::empty(), &cfg).is_zero());
        let full = q_ideal(&PrimeSupport::new([0, 1]), &cfg);
        assert_eq!(full.corners().len(), 2);
        let tiny = crate::ideal::Monomial::new(vec![q(1, 100), q(0, 1)], &cfg).unwrap();
        assert!(q_ideal(&PrimeSupport::new([0]), &cfg).contains_monomial(&tiny).unwrap());
    }
}
