use super::{check_p, ln, ln_one_minus_sq, log_sum_exp, softplus, BoundPair, BoundSource};
use crate::error::{Error, Result};

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::Domain(format!("G(n,p) bounds need n >= 3, got {n}")));
    }
    Ok(())
}

/// Simple-sieve lower and Turán-sieve upper bound on `P(diam G(n,p) <= 2)`:
///
/// ```text
/// lower = 1 - n^2 (1-p^2)^(n-2) (1-p) / 2
/// upper = 2 / ((n-1)^2 (1-p^2)^n (1-p)) + (8/n) (1 + p^3/(1-p)^2)^n
/// ```
pub fn gnp_bounds(n: usize, p: f64) -> Result<BoundPair> {
    check_n(n)?;
    check_p(p)?;
    let nf = n as f64;
    let l = ln_one_minus_sq(p);
    let ln_q = (-p).ln_1p();
    let ln_term = 2.0 * ln(nf) + (nf - 2.0) * l + ln_q - ln(2.0);
    let first = ln(2.0) - 2.0 * ln(nf - 1.0) - nf * l - ln_q;
    let second = ln(8.0) - ln(nf) + nf * (p * p * p / ((1.0 - p) * (1.0 - p))).ln_1p();
    Ok(BoundPair::new(
        BoundSource::GnpTheorem,
        ln_term.exp(),
        log_sum_exp(&[first, second]).exp(),
    ))
}

/// The `p = 1/2` corollary `max(0, 1 - 4 n^2 (3/4)^n / 9)`.
pub fn gnp_half_lower(n: usize) -> Result<f64> {
    Ok(gnp_half_bounds(n)?.lower())
}

/// [`gnp_half_lower`] as a [`BoundPair`] (no upper bound is stated).
pub fn gnp_half_bounds(n: usize) -> Result<BoundPair> {
    check_n(n)?;
    let nf = n as f64;
    let ln_term = ln(4.0) + 2.0 * ln(nf) + nf * ln(0.75) - ln(9.0);
    Ok(BoundPair::new(BoundSource::GnpHalfCorollary, ln_term.exp(), f64::INFINITY))
}

fn check_window(n: usize, p: f64) -> Result<()> {
    check_p(p)?;
    if n < 200 || p > 0.5 {
        return Err(Error::Precondition(format!(
            "explicit o(1) constants need n >= 200 and p <= 1/2, got n={n}, p={p}"
        )));
    }
    Ok(())
}

/// Explicit error factor of the proposition's upper bound,
/// `(4 (ln n)^2 + 2)/n + p + 3 e^8 (2 ln n)^(3/2) / n^(1/2)`.
fn upper_error(n: f64, p: f64) -> f64 {
    let ln_n = n.ln();
    (4.0 * ln_n * ln_n + 2.0) / n + p + 3.0 * 8f64.exp() * (2.0 * ln_n).powf(1.5) / n.sqrt()
}

fn asymptotic(n: usize, p: f64, exponent_factor: f64, source: BoundSource) -> Result<BoundPair> {
    check_window(n, p)?;
    let nf = n as f64;
    let np2 = nf * p * p;
    // lower: 1 - (1 + 4p^2) (n^2/2) e^(-np^2)
    let ln_term = (4.0 * p * p).ln_1p() + 2.0 * ln(nf) - ln(2.0) - np2;
    // upper: (1 + eps) (2/n^2) e^(np^2) (1 + 4n e^(np^2 (x - 1)))
    let ln_upper = upper_error(nf, p).ln_1p() + ln(2.0) - 2.0 * ln(nf)
        + np2
        + softplus(ln(4.0) + ln(nf) + np2 * (exponent_factor - 1.0));
    Ok(BoundPair::new(source, ln_term.exp(), ln_upper.exp()))
}

/// Small-`p` proposition bounds with the explicit `o(1)` terms that hold for
/// `n >= 200` and `p <= 1/2`:
///
/// ```text
/// lower = 1 - (1 + 4p^2) (n^2/2) e^(-np^2)
/// upper = (1 + eps(n,p)) (2/n^2) e^(np^2) (1 + 4n e^(np^2 (p^2 - 1)))
/// ```
pub fn gnp_asymptotic_bounds(n: usize, p: f64) -> Result<BoundPair> {
    asymptotic(n, p, p * p, BoundSource::GnpProposition)
}

/// As [`gnp_asymptotic_bounds`], but with the upper-bound exponent
/// `np^2 (p - 1)` that the proof arrives at.
pub fn gnp_asymptotic_bounds_proof_exponent(n: usize, p: f64) -> Result<BoundPair> {
    asymptotic(n, p, p, BoundSource::GnpPropositionProofExponent)
}
