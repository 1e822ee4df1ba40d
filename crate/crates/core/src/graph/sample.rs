use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::family::GraphFamily;
use super::matrix::AdjacencyMatrix;
use crate::error::Result;
use crate::rational::check_open_probability_f64;

/// Threshold `t` such that a uniform 64-bit draw `x` gives an edge iff `x < t`.
pub(crate) fn edge_threshold(p: f64) -> u64 {
    // The saturating cast maps p -> 1 onto u64::MAX.
    (p * 18_446_744_073_709_551_616.0) as u64
}

/// Draws one graph of `family` with independent edge probability `p`.
///
/// Trial `trial_index` of a run seeded with `seed` reads the ChaCha8 stream
/// `(seed, trial_index)`. Candidate edge number `e` in
/// [`GraphFamily::candidate_edges`] order consumes the `e`-th 64-bit word of
/// that stream, so the graph is a pure function of
/// `(family, p, seed, trial_index)` no matter which thread builds it.
pub fn sample_graph(
    family: &GraphFamily,
    p: f64,
    seed: u64,
    trial_index: u64,
) -> Result<AdjacencyMatrix> {
    check_open_probability_f64(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial_index);
    let threshold = edge_threshold(p);

    let n = family.n();
    let directed = family.is_directed();
    let partite = family.kind().is_partite();
    let part = family.shape().membership();
    let mut g = AdjacencyMatrix::empty(n, directed);
    for u in 0..n {
        let start = if directed { 0 } else { u + 1 };
        for v in start..n {
            if u == v || (partite && part[u] == part[v]) {
                continue;
            }
            if rng.next_u64() < threshold {
                g.insert(u, v);
            }
        }
    }
    g.debug_check();
    Ok(g)
}
