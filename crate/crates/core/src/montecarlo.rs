//! Monte Carlo estimates of `P(diameter <= target)` for large families.
//!
//! Trial `i` of a run samples its graph from the random stream
//! `(seed, i)`, so the success count depends only on
//! `(family, p, trials, seed)` and never on how trials are spread over
//! threads.

use std::time::Instant;

use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::graph::{graph_diameter, meets_target_diameter, sample_graph, GraphFamily};
use crate::rational::check_open_probability_f64;

/// Default bound on the adjacency storage held by all workers at once.
pub const DEFAULT_MEMORY_CAP: usize = 1 << 30;

/// Every `VERIFY_STRIDE`-th trial is re-checked by BFS in verify mode.
pub const VERIFY_STRIDE: u64 = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct TrialEstimate {
    pub successes: u64,
    pub trials: u64,
    pub p_hat: f64,
    pub wilson_lo: f64,
    pub wilson_hi: f64,
    pub confidence: f64,
    pub seed: u64,
    pub family: GraphFamily,
    pub p: f64,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl TrialEstimate {
    /// Binomial standard error `sqrt(p_hat (1 - p_hat) / trials)`.
    pub fn std_error(&self) -> f64 {
        (self.p_hat * (1.0 - self.p_hat) / self.trials as f64).sqrt()
    }

    pub fn failures(&self) -> u64 {
        self.trials - self.successes
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EstimateOptions {
    /// Worker threads; 0 uses rayon's default.
    pub workers: usize,
    /// Re-check every hundredth trial against the BFS diameter.
    pub verify: bool,
    /// Bytes of adjacency storage allowed across all workers.
    pub memory_cap: usize,
}

impl Default for EstimateOptions {
    fn default() -> Self {
        Self {
            workers: 0,
            verify: false,
            memory_cap: DEFAULT_MEMORY_CAP,
        }
    }
}

/// [`estimate_with`] using default options.
pub fn estimate(
    family: &GraphFamily,
    p: f64,
    trials: u64,
    seed: u64,
    confidence: f64,
) -> Result<TrialEstimate> {
    estimate_with(family, p, trials, seed, confidence, &EstimateOptions::default())
}

/// Runs `trials` independent samples and counts those meeting the family's
/// target diameter.
pub fn estimate_with(
    family: &GraphFamily,
    p: f64,
    trials: u64,
    seed: u64,
    confidence: f64,
    options: &EstimateOptions,
) -> Result<TrialEstimate> {
    check_open_probability_f64(p)?;
    check_confidence(confidence)?;
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?;
    let workers = pool.current_num_threads();
    let needed = matrix_bytes(family).saturating_mul(workers);
    if needed > options.memory_cap {
        return Err(Error::Resource(format!(
            "{workers} workers need {needed} bytes of adjacency storage, cap is {}",
            options.memory_cap
        )));
    }

    let d = family.target_diameter();
    let successes = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| -> Result<u64> {
                let g = sample_graph(family, p, seed, i)?;
                let hit = meets_target_diameter(family, &g);
                if options.verify && i % VERIFY_STRIDE == 0 && graph_diameter(&g).at_most(d) != hit {
                    return Err(Error::Verification(format!(
                        "fast predicate disagrees with BFS on trial {i} (seed {seed})"
                    )));
                }
                Ok(hit as u64)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))
    })?;

    let (wilson_lo, wilson_hi) = wilson_interval(successes, trials, confidence)?;
    Ok(TrialEstimate {
        successes,
        trials,
        p_hat: successes as f64 / trials as f64,
        wilson_lo,
        wilson_hi,
        confidence,
        seed,
        family: family.clone(),
        p,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

fn matrix_bytes(family: &GraphFamily) -> usize {
    let n = family.n();
    let rows = if family.is_directed() { 2 * n } else { n };
    rows.saturating_mul(n.div_ceil(64)).saturating_mul(8)
}

fn check_confidence(confidence: f64) -> Result<()> {
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::Domain(format!("confidence must lie in (0,1), got {confidence}")));
    }
    Ok(())
}

/// Wilson score interval for `successes` out of `trials`.
///
/// With `z` the normal quantile at `1 - (1 - confidence)/2`, `n = trials`
/// and `p = successes / n`:
///
/// ```text
/// centre    = (p + z^2/(2n)) / (1 + z^2/n)
/// halfwidth = z / (1 + z^2/n) * sqrt(p(1-p)/n + z^2/(4n^2))
/// ```
pub fn wilson_interval(successes: u64, trials: u64, confidence: f64) -> Result<(f64, f64)> {
    check_confidence(confidence)?;
    if trials == 0 || successes > trials {
        return Err(Error::Domain(format!(
            "need 0 <= successes <= trials and trials >= 1, got {successes}/{trials}"
        )));
    }
    let z = Normal::standard().inverse_cdf(1.0 - (1.0 - confidence) / 2.0);
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let lo = (centre - half).clamp(0.0, 1.0).min(p);
    let hi = (centre + half).clamp(0.0, 1.0).max(p);
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_examples() {
        let (lo, hi) = wilson_interval(50, 100, 0.95).unwrap();
        assert!((lo - 0.4038).abs() < 1e-3 && (hi - 0.5962).abs() < 1e-3, "{lo} {hi}");

        let (lo, hi) = wilson_interval(0, 40, 0.95).unwrap();
        assert_eq!(lo, 0.0);
        assert!(hi > 0.0);
        let (lo, hi) = wilson_interval(40, 40, 0.95).unwrap();
        assert!(lo < 1.0);
        assert_eq!(hi, 1.0);

        assert!(wilson_interval(5, 4, 0.95).is_err());
        assert!(wilson_interval(0, 0, 0.95).is_err());
        assert!(wilson_interval(1, 2, 1.0).is_err());
    }

    #[test]
    fn single_trial() {
        let f = GraphFamily::simple(3).unwrap();
        let est = estimate(&f, 0.5, 1, 3, 0.95).unwrap();
        assert!(est.p_hat == 0.0 || est.p_hat == 1.0);
        assert!(est.wilson_lo <= est.p_hat && est.p_hat <= est.wilson_hi);
        assert!(est.wilson_lo >= 0.0 && est.wilson_hi <= 1.0);
    }

    #[test]
    fn triangle_estimate() {
        let f = GraphFamily::simple(3).unwrap();
        let est = estimate(&f, 0.5, 200_000, 7, 0.95).unwrap();
        assert!((est.p_hat - 0.5).abs() < 0.005, "{}", est.p_hat);
    }

    #[test]
    fn worker_count_invariance() {
        let f = GraphFamily::simple(12).unwrap();
        let base = |workers| {
            let opts = EstimateOptions { workers, ..Default::default() };
            estimate_with(&f, 0.4, 3000, 11, 0.95, &opts).unwrap().successes
        };
        let one = base(1);
        assert_eq!(one, base(3));
        assert_eq!(one, base(8));
    }

    #[test]
    fn verify_mode_and_caps() {
        let f = GraphFamily::bipartite(crate::graph::PartitionShape::new(vec![4, 6]).unwrap()).unwrap();
        let opts = EstimateOptions { verify: true, ..Default::default() };
        estimate_with(&f, 0.5, 1000, 1, 0.9, &opts).unwrap();

        let small = EstimateOptions { memory_cap: 16, ..Default::default() };
        let err = estimate_with(&f, 0.5, 10, 1, 0.9, &small).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
        assert!(estimate(&f, 0.5, 0, 1, 0.9).is_err());
        assert!(estimate(&f, 1.5, 10, 1, 0.9).is_err());
    }
}
