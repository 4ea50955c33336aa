//! Interval-labeled graphs, interval vertex covers, and cover-based
//! decompositions of diagonal quadratic ideals.
//!
//! A diagonal quadratic ideal is generated by monomials `X_i^a X_j^a` with
//! `i != j` and `a > 0`. Such an ideal induces a finite simple graph whose
//! edge `{i, j}` carries the interval of exponents `a` realized by the
//! generators, always a right-infinite interval `[s, inf)` or `(s, inf)`.
//! An interval vertex cover picks a vertex of every edge together with an
//! interval wide enough to swallow that edge's interval; the minimal covers
//! are in bijection with the components of the unique irredundant
//! decomposition. Two enumeration routes are provided: the decomposition
//! itself (via [`decompose_via_covers`]) and a direct edge-to-endpoint
//! assignment search ([`minimal_interval_covers`]); the test suite checks
//! them against each other and against the classical integer-weighted
//! cover enumeration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::decompose::Decomposition;
use crate::error::{Error, Result};
use crate::exponent::{Config, ExtendedExponent, Rational};
use crate::ideal::{Corner, Ideal, PurePowers};

/// A right-infinite exponent interval `[min, inf)` (closed) or `(min, inf)`
/// (open). Closed intervals must have a positive left endpoint, so the
/// interval never contains 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IntervalWeight {
    min: Rational,
    open: bool,
}

impl IntervalWeight {
    pub fn new(min: Rational, open: bool) -> Result<IntervalWeight> {
        if min.is_negative() || (!open && !min.is_positive()) {
            return Err(Error::Shape(format!(
                "invalid interval weight: {}{}, inf)",
                if open { "(" } else { "[" },
                min
            )));
        }
        Ok(IntervalWeight { min, open })
    }

    pub fn threshold(&self) -> &Rational {
        &self.min
    }

    pub fn is_open(&self) -> bool {
        self.open
    }

    /// Interval containment `other <= self` in the family of right-infinite
    /// intervals: the container starts earlier, or at the same point with a
    /// compatible endpoint.
    pub fn contains(&self, other: &IntervalWeight) -> bool {
        self.min < other.min || (self.min == other.min && (!self.open || other.open))
    }

    /// Smallest interval of the family containing both: the earlier start
    /// wins, and at ties the closed endpoint wins.
    fn hull(&self, other: &IntervalWeight) -> IntervalWeight {
        match self.min.cmp(&other.min) {
            std::cmp::Ordering::Less => self.clone(),
            std::cmp::Ordering::Greater => other.clone(),
            std::cmp::Ordering::Equal => {
                IntervalWeight { min: self.min.clone(), open: self.open && other.open }
            }
        }
    }
}

impl fmt::Display for IntervalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{},inf)", if self.open { "(" } else { "[" }, self.min)
    }
}

/// A finite simple graph on the variables `0..dim` whose edges carry
/// interval weights. Edge keys are normalized as `(min, max)` pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalGraph {
    dim: usize,
    edges: BTreeMap<(usize, usize), IntervalWeight>,
}

impl IntervalGraph {
    pub fn new(dim: usize) -> IntervalGraph {
        IntervalGraph { dim, edges: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), IntervalWeight> {
        &self.edges
    }

    /// Inserts an edge, merging with any existing interval on the same pair
    /// (the union of two right-infinite intervals is again one).
    pub fn add_edge(&mut self, i: usize, j: usize, weight: IntervalWeight) -> Result<()> {
        if i == j || i >= self.dim || j >= self.dim {
            return Err(Error::Shape(format!("invalid edge ({}, {})", i + 1, j + 1)));
        }
        let key = (i.min(j), i.max(j));
        let merged = match self.edges.get(&key) {
            Some(existing) => existing.hull(&weight),
            None => weight,
        };
        self.edges.insert(key, merged);
        Ok(())
    }

    /// Vertices incident to at least one edge.
    pub fn touched(&self) -> BTreeSet<usize> {
        self.edges.keys().flat_map(|&(i, j)| [i, j]).collect()
    }
}

/// An interval vertex cover: the chosen vertices with their interval
/// weights. The vertex set is the key set of the map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IntervalCover {
    weights: BTreeMap<usize, IntervalWeight>,
}

impl IntervalCover {
    pub fn new(weights: BTreeMap<usize, IntervalWeight>) -> IntervalCover {
        IntervalCover { weights }
    }

    pub fn weights(&self) -> &BTreeMap<usize, IntervalWeight> {
        &self.weights
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.weights.keys().copied().collect()
    }

    /// The cover order: fewer vertices with narrower intervals is smaller.
    pub fn leq(&self, other: &IntervalCover) -> bool {
        self.weights.iter().all(|(v, w)| {
            other.weights.get(v).is_some_and(|w2| w2.contains(w))
        })
    }
}

impl fmt::Display for IntervalCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (v, w)) in self.weights.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", v + 1, w)?;
        }
        write!(f, "}}")
    }
}

/// Reads the interval-labeled graph off a diagonal quadratic ideal. Every
/// corner must constrain exactly two coordinates, with equal threshold and
/// equal flag on both; corners sharing a pair merge into one interval.
pub fn graph_from_ideal(ideal: &Ideal) -> Result<IntervalGraph> {
    if ideal.is_zero() {
        return Err(Error::Shape("the zero ideal has no edge graph".into()));
    }
    let mut graph = IntervalGraph::new(ideal.cfg().dim);
    for corner in ideal.corners() {
        let support: Vec<usize> = corner.support().into_iter().collect();
        if support.len() != 2 {
            return Err(Error::Shape(format!(
                "corner with {} constrained coordinates, need exactly 2",
                support.len()
            )));
        }
        let (i, j) = (support[0], support[1]);
        if corner.alpha()[i] != corner.alpha()[j] || corner.strict()[i] != corner.strict()[j] {
            return Err(Error::Shape("corner is not diagonal (unequal thresholds or flags)".into()));
        }
        let weight = IntervalWeight::new(corner.alpha()[i].clone(), corner.strict()[i])?;
        graph.add_edge(i, j, weight)?;
    }
    Ok(graph)
}

/// The cover condition: every edge has an endpoint in the cover whose
/// interval contains the edge's interval.
pub fn is_interval_cover(graph: &IntervalGraph, cover: &IntervalCover) -> bool {
    graph.edges.iter().all(|(&(i, j), s)| {
        let covered_by = |v: usize| cover.weights.get(&v).is_some_and(|sigma| sigma.contains(s));
        covered_by(i) || covered_by(j)
    })
}

/// The pure-power ideal generated by the cover's rays: one single-variable
/// corner per chosen vertex. The empty cover gives the zero ideal.
pub fn q_cover_ideal(cover: &IntervalCover, cfg: &Config) -> Ideal {
    cover_to_pure_powers(cover, cfg).to_ideal(cfg)
}

fn cover_to_pure_powers(cover: &IntervalCover, cfg: &Config) -> PurePowers {
    let mut entries = vec![(ExtendedExponent::Infinity, false); cfg.dim];
    for (&v, w) in &cover.weights {
        assert!(v < cfg.dim, "cover vertex out of range");
        entries[v] = (ExtendedExponent::Finite(w.min.clone()), w.open);
    }
    PurePowers::new(entries, cfg).expect("interval weights are valid thresholds")
}

/// Enumerates the minimal interval vertex covers directly: every way of
/// assigning each edge to one of its endpoints induces the cover whose
/// interval at a vertex is the hull of its assigned edge intervals, and
/// every minimal cover arises this way. Deduplicated, minimal under the
/// cover order, in canonical order.
pub fn minimal_interval_covers(graph: &IntervalGraph) -> Vec<IntervalCover> {
    let edges: Vec<(&(usize, usize), &IntervalWeight)> = graph.edges.iter().collect();
    if edges.is_empty() {
        return vec![IntervalCover::new(BTreeMap::new())];
    }
    let mut covers: Vec<IntervalCover> = Vec::new();
    let mut pick = vec![false; edges.len()];
    loop {
        let mut weights: BTreeMap<usize, IntervalWeight> = BTreeMap::new();
        for (e, &second) in edges.iter().zip(&pick) {
            let (&(i, j), s) = *e;
            let v = if second { j } else { i };
            weights
                .entry(v)
                .and_modify(|w| *w = w.hull(s))
                .or_insert_with(|| (*s).clone());
        }
        covers.push(IntervalCover { weights });

        let mut pos = 0;
        while pos < pick.len() && pick[pos] {
            pick[pos] = false;
            pos += 1;
        }
        if pos == pick.len() {
            break;
        }
        pick[pos] = true;
    }
    covers.sort();
    covers.dedup();
    covers
        .iter()
        .filter(|c| !covers.iter().any(|o| *o != **c && o.leq(c)))
        .cloned()
        .collect()
}

/// Decomposition of a diagonal quadratic ideal through its minimal interval
/// vertex covers; agrees with the generic decomposition componentwise.
pub fn decompose_via_covers(ideal: &Ideal) -> Result<Decomposition> {
    let graph = graph_from_ideal(ideal)?;
    let cfg = ideal.cfg();
    let components: Vec<PurePowers> = minimal_interval_covers(&graph)
        .iter()
        .map(|c| cover_to_pure_powers(c, cfg))
        .collect();
    Ok(Decomposition::from_parts(ideal.clone(), components))
}

/// The number of vertices in a smallest (unweighted) vertex cover.
pub fn vertex_cover_number(graph: &IntervalGraph) -> usize {
    let touched: Vec<usize> = graph.touched().into_iter().collect();
    for size in 0..=touched.len() {
        let mut found = false;
        subsets_of_size(&touched, size, &mut |subset| {
            if graph
                .edges
                .keys()
                .all(|&(i, j)| subset.contains(&i) || subset.contains(&j))
            {
                found = true;
            }
            !found
        });
        if found {
            return size;
        }
    }
    0
}

fn subsets_of_size<F: FnMut(&BTreeSet<usize>) -> bool>(items: &[usize], size: usize, keep_going: &mut F) {
    fn rec<F: FnMut(&BTreeSet<usize>) -> bool>(
        items: &[usize],
        size: usize,
        start: usize,
        current: &mut BTreeSet<usize>,
        keep_going: &mut F,
    ) -> bool {
        if current.len() == size {
            return keep_going(current);
        }
        for k in start..items.len() {
            if items.len() - k < size - current.len() {
                break;
            }
            current.insert(items[k]);
            let go_on = rec(items, size, k + 1, current, keep_going);
            current.remove(&items[k]);
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut current = BTreeSet::new();
    rec(items, size, 0, &mut current, keep_going);
}

/// A graph with positive integer edge weights, the classical weighted edge
/// ideal setting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedGraph {
    dim: usize,
    edges: BTreeMap<(usize, usize), u64>,
}

impl WeightedGraph {
    pub fn new(dim: usize) -> WeightedGraph {
        WeightedGraph { dim, edges: BTreeMap::new() }
    }

    pub fn add_edge(&mut self, i: usize, j: usize, weight: u64) -> Result<()> {
        if i == j || i >= self.dim || j >= self.dim || weight == 0 {
            return Err(Error::Shape(format!("invalid weighted edge ({}, {})", i + 1, j + 1)));
        }
        let key = (i.min(j), i.max(j));
        let merged = match self.edges.get(&key) {
            Some(&existing) => existing.min(weight),
            None => weight,
        };
        self.edges.insert(key, merged);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.edges
    }

    /// The weighted edge ideal `(X_i^w X_j^w per edge)` in integer mode.
    pub fn edge_ideal(&self) -> Ideal {
        let cfg = Config::integer(self.dim);
        let corners = self
            .edges
            .iter()
            .map(|(&(i, j), &w)| {
                let mut alpha = vec![Rational::zero(); self.dim];
                alpha[i] = Rational::from_int(w as i64);
                alpha[j] = Rational::from_int(w as i64);
                Corner::new(alpha, vec![false; self.dim], &cfg).expect("weighted edge corner")
            })
            .collect();
        Ideal::new(cfg, corners)
    }
}

/// A weighted vertex cover `(W, delta)`: for every edge some endpoint is
/// chosen with weight at most the edge weight. In the cover order, fewer
/// vertices with larger weights is smaller.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct WeightedCover {
    weights: BTreeMap<usize, u64>,
}

impl WeightedCover {
    pub fn weights(&self) -> &BTreeMap<usize, u64> {
        &self.weights
    }

    pub fn leq(&self, other: &WeightedCover) -> bool {
        self.weights
            .iter()
            .all(|(v, w)| other.weights.get(v).is_some_and(|w2| w >= w2))
    }

    pub fn is_cover_of(&self, graph: &WeightedGraph) -> bool {
        graph.edges.iter().all(|(&(i, j), &omega)| {
            let ok = |v: usize| self.weights.get(&v).is_some_and(|&delta| delta <= omega);
            ok(i) || ok(j)
        })
    }

    /// The pure-power ideal `(X_i^{delta(i)} per chosen vertex)` in integer
    /// mode.
    pub fn cover_ideal(&self, cfg: &Config) -> Ideal {
        let corners = self
            .weights
            .iter()
            .map(|(&v, &w)| {
                let mut alpha = vec![Rational::zero(); cfg.dim];
                alpha[v] = Rational::from_int(w as i64);
                Corner::new(alpha, vec![false; cfg.dim], cfg).expect("cover corner")
            })
            .collect();
        Ideal::new(*cfg, corners)
    }
}

impl fmt::Display for WeightedCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (v, w)) in self.weights.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}^{}", v + 1, w)?;
        }
        write!(f, "}}")
    }
}

/// Exhaustively enumerates the minimal weighted vertex covers. Vertex
/// weights range over `1..=` the largest incident edge weight; anything
/// above that makes the vertex useless and hence the cover non-minimal.
pub fn minimal_weighted_covers(graph: &WeightedGraph) -> Vec<WeightedCover> {
    if graph.edges.is_empty() {
        return vec![WeightedCover { weights: BTreeMap::new() }];
    }
    let touched: Vec<usize> = graph.touched_vertices().into_iter().collect();
    let max_weight: BTreeMap<usize, u64> = touched
        .iter()
        .map(|&v| {
            let m = graph
                .edges
                .iter()
                .filter(|(&(i, j), _)| i == v || j == v)
                .map(|(_, &w)| w)
                .max()
                .unwrap_or(1);
            (v, m)
        })
        .collect();

    let mut valid: Vec<WeightedCover> = Vec::new();
    let subsets = 1u64 << touched.len();
    for mask in 0..subsets {
        let chosen: Vec<usize> = touched
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask & (1 << k) != 0)
            .map(|(_, &v)| v)
            .collect();
        // Odometer over all weight assignments for the chosen vertices.
        let mut delta: Vec<u64> = vec![1; chosen.len()];
        loop {
            let cover = WeightedCover {
                weights: chosen.iter().copied().zip(delta.iter().copied()).collect(),
            };
            if cover.is_cover_of(graph) {
                valid.push(cover);
            }
            let mut pos = 0;
            loop {
                if pos == chosen.len() {
                    break;
                }
                delta[pos] += 1;
                if delta[pos] <= max_weight[&chosen[pos]] {
                    break;
                }
                delta[pos] = 1;
                pos += 1;
            }
            if pos == chosen.len() {
                break;
            }
        }
    }
    valid.sort();
    valid.dedup();
    valid
        .iter()
        .filter(|c| !valid.iter().any(|o| *o != **c && o.leq(c)))
        .cloned()
        .collect()
}

impl WeightedGraph {
    fn touched_vertices(&self) -> BTreeSet<usize> {
        self.edges.keys().flat_map(|&(i, j)| [i, j]).collect()
    }
}
