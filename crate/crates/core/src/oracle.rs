//! Exhaustive ground truth for small families.
//!
//! Every labelled graph of a family is visited once, in Gray-code order so
//! that consecutive graphs differ by a single edge. Results are tallied by
//! edge count `k` with integer counters; the probability weight
//! `p^k (1-p)^(m-k)` is applied once per `k` at the end, so one enumeration
//! serves every `p`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{graph_diameter, AdjacencyMatrix, GraphFamily};
use crate::rational::{check_open_probability, weighted_by_edge_count, Rational};
use crate::sieve::{witness_pair_count, IncidenceStats};

/// Largest candidate-edge count the oracle will enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_edges: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self { max_edges: 22 }
    }
}

impl EnumerationBudget {
    fn admit(&self, family: &GraphFamily) -> Result<Vec<(usize, usize)>> {
        let m = family.edge_count();
        if m > self.max_edges {
            return Err(Error::Resource(format!(
                "{m} candidate edges exceed the enumeration budget of {}",
                self.max_edges
            )));
        }
        Ok(family.candidate_edges())
    }
}

/// Number of graphs meeting some condition, by edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCountCensus {
    /// `counts[k]`: graphs with exactly `k` edges.
    pub counts: Vec<u64>,
}

impl EdgeCountCensus {
    /// Total probability of the counted graphs at edge probability `p`.
    pub fn probability(&self, p: &Rational) -> Result<Rational> {
        check_open_probability(p)?;
        Ok(weighted_by_edge_count(&self.counts, p))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Graphs of `family` with BFS diameter at most `d`, by edge count.
pub fn diameter_census(
    family: &GraphFamily,
    d: usize,
    budget: &EnumerationBudget,
) -> Result<EdgeCountCensus> {
    let edges = budget.admit(family)?;
    let m = edges.len();
    let counts = fold_graphs(
        family,
        &edges,
        || vec![0u64; m + 1],
        |acc, g, k| {
            if graph_diameter(g).at_most(d) {
                acc[k] += 1;
            }
        },
        |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
    );
    Ok(EdgeCountCensus { counts })
}

/// Census of every graph, regardless of diameter (`counts[k] = C(m, k)`).
pub fn full_census(family: &GraphFamily, budget: &EnumerationBudget) -> Result<EdgeCountCensus> {
    let edges = budget.admit(family)?;
    let m = edges.len();
    let counts = fold_graphs(
        family,
        &edges,
        || vec![0u64; m + 1],
        |acc, _, k| acc[k] += 1,
        |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
    );
    Ok(EdgeCountCensus { counts })
}

/// Exact `P(diameter <= d)` for `family` at edge probability `p`.
pub fn exact_diameter_prob(family: &GraphFamily, p: &Rational, d: usize) -> Result<Rational> {
    check_open_probability(p)?;
    diameter_census(family, d, &EnumerationBudget::default())?.probability(p)
}

/// Largest witness-pair count [`brute_incidence_stats`] handles.
pub const MAX_BRUTE_WITNESS_PAIRS: u64 = 64;

/// Incidence sums by checking every witness pair in every graph.
///
/// `Σ_{b1,b2} [b1 and b2 unwitnessed] = ω^2` where `ω` is the number of
/// unwitnessed pairs, so each graph contributes `ω` and `ω^2`.
pub fn brute_incidence_stats(
    family: &GraphFamily,
    p: &Rational,
    budget: &EnumerationBudget,
) -> Result<IncidenceStats> {
    check_open_probability(p)?;
    let b_count = witness_pair_count(family);
    if b_count > MAX_BRUTE_WITNESS_PAIRS {
        return Err(Error::Resource(format!(
            "{b_count} witness pairs exceed the brute-force limit of {MAX_BRUTE_WITNESS_PAIRS}"
        )));
    }
    let edges = budget.admit(family)?;
    let m = edges.len();
    let pairs = family.witness_pairs();
    let direct_edge = !family.kind().is_bipartite();
    let n = family.n();
    let unwitnessed = |g: &AdjacencyMatrix, u: usize, v: usize| {
        !(direct_edge && g.has_edge(u, v))
            && !(0..n).any(|w| w != u && w != v && g.has_edge(u, w) && g.has_edge(w, v))
    };
    let (deg, joint) = fold_graphs(
        family,
        &edges,
        || (vec![0u64; m + 1], vec![0u64; m + 1]),
        |acc, g, k| {
            let omega = pairs.iter().filter(|&&(u, v)| unwitnessed(g, u, v)).count() as u64;
            acc.0[k] += omega;
            acc.1[k] += omega * omega;
        },
        |a, b| {
            (
                a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect(),
                a.1.iter().zip(&b.1).map(|(x, y)| x + y).collect(),
            )
        },
    );
    Ok(IncidenceStats {
        sum_deg: weighted_by_edge_count(&deg, p),
        sum_joint: weighted_by_edge_count(&joint, p),
        b_count,
    })
}

/// Visits every subset of `edges` once with its edge count.
///
/// The top bits of the subset index select a chunk; chunks run in parallel
/// and walk their low bits in Gray-code order.
fn fold_graphs<T, I, V, M>(family: &GraphFamily, edges: &[(usize, usize)], init: I, visit: V, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, &AdjacencyMatrix, usize) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let m = edges.len();
    let high = m.min(6);
    let low = m - high;
    let directed = family.is_directed();
    let n = family.n();
    (0u64..1 << high)
        .into_par_iter()
        .fold(&init, |mut acc, chunk| {
            let mut g = AdjacencyMatrix::empty(n, directed);
            let mut k = 0;
            for bit in 0..high {
                if chunk >> bit & 1 == 1 {
                    let (u, v) = edges[low + bit];
                    g.toggle(u, v);
                    k += 1;
                }
            }
            visit(&mut acc, &g, k);
            let mut present = vec![false; low];
            for i in 1u64..1 << low {
                let flip = i.trailing_zeros() as usize;
                let (u, v) = edges[flip];
                g.toggle(u, v);
                present[flip] = !present[flip];
                if present[flip] {
                    k += 1;
                } else {
                    k -= 1;
                }
                visit(&mut acc, &g, k);
            }
            acc
        })
        .reduce(&init, &merge)
}
