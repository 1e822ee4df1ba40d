use super::{check_p, ln, ln_one_minus_sq, log_sum_exp, softplus, BoundPair, BoundSource};
use crate::error::{Error, Result};
use crate::graph::PartitionShape;

/// The three largest parts `(n_k, n_(k-1), n_(k-2))`, `k` and `n`, after
/// checking `k >= 3`, `n >= k + 2` and `n_(k-1) >= 2`.
fn top_parts(shape: &PartitionShape) -> Result<(f64, f64, f64, f64, f64)> {
    let k = shape.parts();
    let n = shape.total();
    if k < 3 || n < k + 2 || shape.largest(2).unwrap_or(0) < 2 {
        return Err(Error::Domain(format!(
            "k-partite bounds need k >= 3, n >= k+2, n_(k-1) >= 2; got {shape}"
        )));
    }
    Ok((
        shape.largest(1).unwrap() as f64,
        shape.largest(2).unwrap() as f64,
        shape.largest(3).unwrap() as f64,
        k as f64,
        n as f64,
    ))
}

/// Lower term with `l = ln(1 - p^2)`:
/// `n_k^2 (1-p^2)^(n-n_k) / 2 * (1 + 2 n_(k-1) (1-p^2)^(-n_(k-1)) / n_k
///   + 7 k^2 n_(k-1)^2 (1-p^2)^(n_k - n_(k-1) - n_(k-2)) / (3 n_k^2))`.
fn ln_lower_term(shape: &PartitionShape, l: f64) -> Result<f64> {
    let (nk, nk1, nk2, k, n) = top_parts(shape)?;
    let x = ln(2.0) + ln(nk1) - nk1 * l - ln(nk);
    let y = ln(7.0) + 2.0 * ln(k) + 2.0 * ln(nk1) + (nk - nk1 - nk2) * l - ln(3.0) - 2.0 * ln(nk);
    Ok(2.0 * ln(nk) + (n - nk) * l - ln(2.0) + log_sum_exp(&[0.0, x, y]))
}

/// Bounds for random `k`-partite graphs (`k >= 3`) with the given part sizes.
pub fn kpartite_bounds(shape: &PartitionShape, p: f64) -> Result<BoundPair> {
    check_p(p)?;
    let (nk, nk1, _, k, n) = top_parts(shape)?;
    let l = ln_one_minus_sq(p);
    let ln_term = ln_lower_term(shape, l)?;
    let z = ln(2.0) + ln(nk1) - nk1 * l + (-p).ln_1p() - ln(nk - 1.0);
    let first = ln(2.0) - ln(nk) - ln(nk - 1.0) - (n - nk) * l - softplus(z);
    let second = ln(3.0) + 3.0 * ln(k) + (n - nk) * (p * p * p / (1.0 - p)).ln_1p() - 2.0 * l
        - ln(nk1 - 1.0);
    Ok(BoundPair::new(
        BoundSource::KPartiteTheorem,
        ln_term.exp(),
        log_sum_exp(&[first, second]).exp(),
    ))
}

/// The `p = 1/2` corollary of [`kpartite_bounds`] (lower bound only).
pub fn kpartite_half_bounds(shape: &PartitionShape) -> Result<BoundPair> {
    let ln_term = ln_lower_term(shape, ln(0.75))?;
    Ok(BoundPair::new(BoundSource::KPartiteHalfCorollary, ln_term.exp(), f64::INFINITY))
}

/// Small-`p` point estimates (all `o(1)` factors set to zero):
///
/// ```text
/// lower = 1 - (n_k^2 e^(-p^2 (n-n_k)) / 2)
///           (1 + (2 n_(k-1)/n_k) e^(p^2 n_(k-1)) (1 + 7 k^2 n_(k-1) e^(-p^2 (n_k - n_(k-2))) / (6 n_k)))
/// upper = (2 e^(p^2 (n-n_k)) / n_k^2) (1 + (2 n_(k-1)/n_k) e^(p^2 n_(k-1)))^(-1)
///           (1 + 3k^3 n_k^2 e^((p^3-p^2)(n-n_k)) / (2 (n_(k-1)-1))
///              + 3k^3 n_k n_(k-1) e^((p^3-p^2)(n-n_k) + p^2 n_(k-1)) / (n_(k-1)-1))
/// ```
pub fn kpartite_asymptotic_bounds(shape: &PartitionShape, p: f64) -> Result<BoundPair> {
    check_p(p)?;
    let (nk, nk1, nk2, k, n) = top_parts(shape)?;
    let p2 = p * p;
    let inner = ln(7.0) + 2.0 * ln(k) + ln(nk1) - p2 * (nk - nk2) - ln(6.0) - ln(nk);
    let outer = ln(2.0) + ln(nk1) - ln(nk) + p2 * nk1 + softplus(inner);
    let ln_term = 2.0 * ln(nk) - p2 * (n - nk) - ln(2.0) + softplus(outer);

    let decay = (p * p2 - p2) * (n - nk);
    let b = ln(3.0) + 3.0 * ln(k) + 2.0 * ln(nk) + decay - ln(2.0) - ln(nk1 - 1.0);
    let c = ln(3.0) + 3.0 * ln(k) + ln(nk) + ln(nk1) + decay + p2 * nk1 - ln(nk1 - 1.0);
    let ln_upper = ln(2.0) + p2 * (n - nk) - 2.0 * ln(nk)
        - softplus(ln(2.0) + ln(nk1) - ln(nk) + p2 * nk1)
        + log_sum_exp(&[0.0, b, c]);
    Ok(BoundPair::new(BoundSource::KPartiteProposition, ln_term.exp(), ln_upper.exp()).asymptotic())
}

fn check_turan(n: usize, k: usize) -> Result<(f64, f64)> {
    if k < 3 || n <= 2 * k {
        return Err(Error::Domain(format!(
            "Turán k-partite bounds need k >= 3 and n > 2k, got n={n}, k={k}"
        )));
    }
    Ok((n as f64, k as f64))
}

/// Bounds for random Turán `k`-partite graphs, `n > 2k`. Exponents use the
/// real quotient `n/k`, not the rounded part sizes.
pub fn kpartite_turan_bounds(n: usize, k: usize, p: f64) -> Result<BoundPair> {
    check_p(p)?;
    let (n, k) = check_turan(n, k)?;
    let l = ln_one_minus_sq(p);
    let ln_term = 2.0 * ln(n) + (n * (1.0 - 1.0 / k) - 1.0) * l - ln(2.0 * k)
        + softplus(ln(k - 1.0) - (n / k + 1.0) * l)
        + (k / n).ln_1p();
    let shrink = (-2.0 * k / n).ln_1p();
    let first = ln(2.0 * k) - 2.0 * ln(n) - (n * (1.0 - 1.0 / k) + 1.0) * l
        - softplus(ln(k - 1.0) + (1.0 - n / k) * l + (-p).ln_1p())
        - shrink;
    let second = ln(4.0) + 3.0 * ln(k)
        + (n * (1.0 - 1.0 / k) + 1.0) * (p * p * p / (1.0 - p)).ln_1p()
        - 2.0 * l
        - ln(n)
        - ln(k - 1.0)
        - 4.0 * shrink;
    Ok(BoundPair::new(
        BoundSource::TuranKPartiteTheorem,
        ln_term.exp(),
        log_sum_exp(&[first, second]).exp(),
    ))
}

/// The `p = 1/2` corollary
/// `1 - 4 n^2 (3/4)^(n(1-1/k)) / (6k) (1 + (k-1)(4/3)^(n/k+1)) (1 + k/n)`.
pub fn kpartite_turan_half_bounds(n: usize, k: usize) -> Result<BoundPair> {
    let (n, k) = check_turan(n, k)?;
    let ln_term = ln(4.0) + 2.0 * ln(n) + n * (1.0 - 1.0 / k) * ln(0.75) - ln(6.0 * k)
        + softplus(ln(k - 1.0) + (n / k + 1.0) * ln(4.0 / 3.0))
        + (k / n).ln_1p();
    Ok(BoundPair::new(BoundSource::TuranKPartiteHalfCorollary, ln_term.exp(), f64::INFINITY))
}

/// Small-`p` point estimates for Turán `k`-partite graphs:
///
/// ```text
/// lower = 1 - n^2 e^(-np^2 (1-1/k)) / (2k) (1 + (k-1) e^(np^2/k))
/// upper = 2k e^(np^2 (1-1/k)) / n^2 (1 + (k-1) e^(np^2/k))^(-1)
///           (1 + 2k^2 n e^((np^3-np^2)(1-1/k)) / (k-1) + 2k^2 n e^((np^3-np^2)(1-1/k) + np^2/k))
/// ```
pub fn kpartite_turan_asymptotic_bounds(n: usize, k: usize, p: f64) -> Result<BoundPair> {
    check_p(p)?;
    let (n, k) = check_turan(n, k)?;
    let np2 = n * p * p;
    let spread = softplus(ln(k - 1.0) + np2 / k);
    let ln_term = 2.0 * ln(n) - np2 * (1.0 - 1.0 / k) - ln(2.0 * k) + spread;
    let decay = (np2 * p - np2) * (1.0 - 1.0 / k);
    let b = ln(2.0) + 2.0 * ln(k) + ln(n) + decay - ln(k - 1.0);
    let c = ln(2.0) + 2.0 * ln(k) + ln(n) + decay + np2 / k;
    let ln_upper = ln(2.0 * k) + np2 * (1.0 - 1.0 / k) - 2.0 * ln(n) - spread
        + log_sum_exp(&[0.0, b, c]);
    Ok(BoundPair::new(BoundSource::TuranKPartiteProposition, ln_term.exp(), ln_upper.exp())
        .asymptotic())
}
