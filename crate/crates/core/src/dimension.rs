//! Monomial Krull dimension, maximal prime chains and the semicontinuity
//! radius.
//!
//! An m-prime on the variable set `T` contains an ideal exactly when `T`
//! meets the support of every corner, so the dimension is the ambient
//! dimension minus a minimum hitting set of the corner supports. The search
//! is exact and exhaustive over subset sizes, which is affordable at desk
//! scale where minimum vertex cover would otherwise be hard.

use std::collections::BTreeSet;
use std::fmt;

use crate::decompose::PrimeSupport;
use crate::error::{Error, Result};
use crate::exponent::Rational;
use crate::ideal::Ideal;

/// Monomial Krull dimension: an integer in `[0, d]`, or `-inf` for the unit
/// ideal only.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum MDim {
    NegInfinity,
    Finite(usize),
}

impl fmt::Display for MDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MDim::NegInfinity => write!(f, "-inf"),
            MDim::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// Iterates over all `size`-element subsets of `0..n` in lexicographic
/// order, stopping at the first one accepted by `pick`.
fn first_subset<F: FnMut(&[usize]) -> bool>(
    n: usize,
    size: usize,
    pick: &mut F,
) -> Option<Vec<usize>> {
    let mut subset: Vec<usize> = (0..size).collect();
    if size > n {
        return None;
    }
    loop {
        if pick(&subset) {
            return Some(subset);
        }
        // Advance to the next combination.
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if subset[i] != i + n - size {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        subset[i] += 1;
        for j in i + 1..size {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Lexicographically smallest minimum hitting set of the corner supports.
fn min_hitting_set(supports: &[BTreeSet<usize>], dim: usize) -> BTreeSet<usize> {
    for size in 0..=dim {
        let hit = first_subset(dim, size, &mut |subset: &[usize]| {
            supports.iter().all(|s| subset.iter().any(|i| s.contains(i)))
        });
        if let Some(subset) = hit {
            return subset.into_iter().collect();
        }
    }
    unreachable!("the full variable set hits every nonempty support")
}

/// Monomial Krull dimension of `R/I`.
pub fn mdim(ideal: &Ideal) -> MDim {
    let d = ideal.cfg().dim;
    if ideal.is_unit() {
        return MDim::NegInfinity;
    }
    if ideal.is_zero() {
        return MDim::Finite(d);
    }
    let supports: Vec<BTreeSet<usize>> = ideal.corners().iter().map(|c| c.support()).collect();
    MDim::Finite(d - min_hitting_set(&supports, d).len())
}

/// A maximal chain of m-prime supports above `ideal`: starts at a minimum
/// hitting set, grows one smallest absent variable at a time and ends at
/// the full variable set. Its length equals the dimension. Ties are broken
/// lexicographically, so the output is deterministic.
pub fn max_chain(ideal: &Ideal) -> Result<Vec<PrimeSupport>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let d = ideal.cfg().dim;
    let supports: Vec<BTreeSet<usize>> = ideal.corners().iter().map(|c| c.support()).collect();
    let mut current = min_hitting_set(&supports, d);
    let mut chain = vec![PrimeSupport::new(current.iter().copied())];
    while current.len() < d {
        let next = (0..d).find(|i| !current.contains(i)).expect("chain not yet full");
        current.insert(next);
        chain.push(PrimeSupport::new(current.iter().copied()));
    }
    Ok(chain)
}

/// The radius inside which every perturbation of a nonzero finitely
/// generated ideal keeps the dimension from dropping: the minimum positive
/// exponent over all generator corners.
pub fn semicontinuity_radius(ideal: &Ideal) -> Result<Rational> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_fully_closed() {
        return Err(Error::OpenBox);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let minimum = ideal
        .corners()
        .iter()
        .flat_map(|c| c.alpha().iter())
        .filter(|a| a.is_positive())
        .min()
        .expect("a proper closed ideal has a positive generator exponent");
    Ok(minimum.clone())
}
