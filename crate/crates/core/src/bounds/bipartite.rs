use super::{check_p, ln, ln_one_minus_sq, log_sum_exp, softplus, BoundPair, BoundSource};
use crate::error::{Error, Result};
use crate::graph::PartitionShape;

fn parts(shape: &PartitionShape) -> Result<(f64, f64)> {
    if shape.parts() != 2 || shape.sizes()[0] < 2 {
        return Err(Error::Domain(format!(
            "bipartite bounds need two parts with 2 <= n1 <= n2, got {shape}"
        )));
    }
    Ok((shape.sizes()[0] as f64, shape.sizes()[1] as f64))
}

fn ln_lower_term(n1: f64, n2: f64, l: f64) -> f64 {
    // n2^2 (1-p^2)^n1 / 2 * (1 + n1^2 (1-p^2)^(n2-n1) / n2^2)
    2.0 * ln(n2) + n1 * l - ln(2.0) + softplus(2.0 * ln(n1) + (n2 - n1) * l - 2.0 * ln(n2))
}

fn ln_upper(n1: f64, n2: f64, l: f64, ln_growth: f64, ln_tail: f64) -> f64 {
    let first = ln(2.0) - ln(n2) - ln(n2 - 1.0) - n1 * l;
    let second = n1 * ln_growth - ln(n2) + ln_tail;
    log_sum_exp(&[first, second])
        - softplus(ln(n1) + ln(n1 - 1.0) + (n2 - n1) * l - ln(n2) - ln(n2 - 1.0))
}

/// Bounds on `P(diam <= 3)` for random bipartite graphs with parts
/// `2 <= n1 <= n2`:
///
/// ```text
/// lower = 1 - (n2^2 (1-p^2)^n1 / 2) (1 + n1^2 (1-p^2)^(n2-n1) / n2^2)
/// upper = (2 / (n2 (n2-1) (1-p^2)^n1) + (1 + p^3/(1-p))^n1 / n2 * (8 + 8/(1-p)))
///           * (1 + n1 (n1-1) (1-p^2)^(n2-n1) / (n2 (n2-1)))^(-1)
/// ```
pub fn bipartite_bounds(shape: &PartitionShape, p: f64) -> Result<BoundPair> {
    check_p(p)?;
    let (n1, n2) = parts(shape)?;
    let l = ln_one_minus_sq(p);
    let growth = (p * p * p / (1.0 - p)).ln_1p();
    let tail = ln(8.0 + 8.0 / (1.0 - p));
    Ok(BoundPair::new(
        BoundSource::BipartiteTheorem,
        ln_lower_term(n1, n2, l).exp(),
        ln_upper(n1, n2, l, growth, tail).exp(),
    ))
}

/// The `p = 1/2` corollary of [`bipartite_bounds`], with constants
/// `3/4`, `5/4` and `24` substituted.
pub fn bipartite_half_bounds(shape: &PartitionShape) -> Result<BoundPair> {
    let (n1, n2) = parts(shape)?;
    let l = ln(0.75);
    Ok(BoundPair::new(
        BoundSource::BipartiteHalfCorollary,
        ln_lower_term(n1, n2, l).exp(),
        ln_upper(n1, n2, l, ln(1.25), ln(24.0)).exp(),
    ))
}

/// Small-`p` point estimates for bipartite graphs (`o(1)` set to zero):
///
/// ```text
/// lower = 1 - (n2^2 e^(-n1 p^2) / 2) (1 + e^(2 ln n1 - 2 ln n2 - (n2-n1) p^2))
/// upper = (2/n2^2) e^(n1 p^2) (1 + e^(2 ln n1 - 2 ln n2 - (n2-n1) p^2))^(-1)
///           (1 + 8 n2 e^(n1 p^2 (p-1)))
/// ```
pub fn bipartite_asymptotic_bounds(shape: &PartitionShape, p: f64) -> Result<BoundPair> {
    check_p(p)?;
    let (n1, n2) = parts(shape)?;
    let p2 = p * p;
    let skew = softplus(2.0 * ln(n1) - 2.0 * ln(n2) - (n2 - n1) * p2);
    let ln_term = 2.0 * ln(n2) - n1 * p2 - ln(2.0) + skew;
    let ln_up = ln(2.0) - 2.0 * ln(n2) + n1 * p2 - skew
        + softplus(ln(8.0) + ln(n2) + n1 * p2 * (p - 1.0));
    Ok(BoundPair::new(BoundSource::BipartiteProposition, ln_term.exp(), ln_up.exp()).asymptotic())
}

fn check_turan(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::Domain(format!("Turán bipartite bounds need n >= 4, got {n}")));
    }
    Ok(n as f64)
}

/// Bounds for random Turán bipartite graphs (parts `floor(n/2)`, `ceil(n/2)`):
///
/// ```text
/// lower = 1 - (n+1)^2 (1-p^2)^((n-1)/2) / 8
/// upper = (8 / (n (n-2) (1-p^2)^(n/2)) + 2 (1 + p^3/(1-p))^(n/2) / n * (8 + 8/(1-p)))
///           * (1 + (n-3)(1-p^2)/(n+1))^(-1)
/// ```
///
/// The exponents `(n-1)/2` and `n/2` are used for both parities of `n`.
pub fn bipartite_turan_bounds(n: usize, p: f64) -> Result<BoundPair> {
    check_p(p)?;
    let n = check_turan(n)?;
    let l = ln_one_minus_sq(p);
    let ln_term = 2.0 * ln(n + 1.0) + (n - 1.0) / 2.0 * l - ln(8.0);
    let first = ln(8.0) - ln(n) - ln(n - 2.0) - n / 2.0 * l;
    let second = ln(2.0) + n / 2.0 * (p * p * p / (1.0 - p)).ln_1p() - ln(n)
        + ln(8.0 + 8.0 / (1.0 - p));
    let ln_up = log_sum_exp(&[first, second]) - ((n - 3.0) * (1.0 - p * p) / (n + 1.0)).ln_1p();
    Ok(BoundPair::new(BoundSource::TuranBipartiteTheorem, ln_term.exp(), ln_up.exp()))
}

/// The `p = 1/2` corollary `1 - (n+1)^2 (3/4)^((n-1)/2) / 4` (lower only).
pub fn bipartite_turan_half_lower(n: usize) -> Result<BoundPair> {
    let n = check_turan(n)?;
    let ln_term = 2.0 * ln(n + 1.0) + (n - 1.0) / 2.0 * ln(0.75) - ln(4.0);
    Ok(BoundPair::new(BoundSource::TuranBipartiteHalfCorollary, ln_term.exp(), f64::INFINITY))
}

/// Small-`p` point estimates for Turán bipartite graphs:
///
/// ```text
/// lower = 1 - n^2 e^(-np^2/2) / 4
/// upper = (4/n^2) e^(np^2/2) (1 + 8n e^((np^2/2)(p^2-1)))
/// ```
pub fn bipartite_turan_asymptotic_bounds(n: usize, p: f64) -> Result<BoundPair> {
    check_p(p)?;
    let n = check_turan(n)?;
    let half_np2 = n * p * p / 2.0;
    let ln_term = 2.0 * ln(n) - half_np2 - ln(4.0);
    let ln_up = ln(4.0) - 2.0 * ln(n) + half_np2
        + softplus(ln(8.0) + ln(n) + half_np2 * (p * p - 1.0));
    Ok(BoundPair::new(BoundSource::TuranBipartiteProposition, ln_term.exp(), ln_up.exp())
        .asymptotic())
}
