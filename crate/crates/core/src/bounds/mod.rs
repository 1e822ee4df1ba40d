//! Closed-form probability bounds for small-diameter random graphs.
//!
//! Each bound is returned as a [`BoundPair`]. Lower bounds all have the form
//! `1 - T`; the pair keeps `T` itself (the "lower term") so that the
//! directed-graph rule, which doubles `T` and halves the upper bound, is
//! applied to exact inputs rather than to clamped outputs.
//!
//! Every power such as `(1 - p^2)^n` is evaluated as `exp(n * ln_1p(-p^2))`
//! and sums are combined with log-sum-exp, so results stay finite (or
//! saturate cleanly to infinity) for `n` in the millions.

mod bipartite;
mod gnp;
mod kpartite;
mod threshold;

pub use bipartite::{
    bipartite_asymptotic_bounds, bipartite_bounds, bipartite_half_bounds,
    bipartite_turan_asymptotic_bounds, bipartite_turan_bounds, bipartite_turan_half_lower,
};
pub use gnp::{
    gnp_asymptotic_bounds, gnp_asymptotic_bounds_proof_exponent, gnp_bounds, gnp_half_bounds,
    gnp_half_lower,
};
pub use kpartite::{
    kpartite_asymptotic_bounds, kpartite_bounds, kpartite_half_bounds,
    kpartite_turan_asymptotic_bounds, kpartite_turan_bounds, kpartite_turan_half_bounds,
};
pub use threshold::{limit_bounds, solve_threshold_p, threshold_c, ThresholdForm, ThresholdSpec};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{FamilyKind, GraphFamily};
use crate::rational::check_open_probability_f64;

/// Which result a bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundSource {
    GnpTheorem,
    GnpHalfCorollary,
    GnpProposition,
    /// The proposition's upper bound with the exponent `np^2(p-1)` that its
    /// proof derives, instead of the stated `np^2(p^2-1)`.
    GnpPropositionProofExponent,
    KPartiteTheorem,
    KPartiteHalfCorollary,
    KPartiteProposition,
    TuranKPartiteTheorem,
    TuranKPartiteHalfCorollary,
    TuranKPartiteProposition,
    BipartiteTheorem,
    BipartiteHalfCorollary,
    BipartiteProposition,
    TuranBipartiteTheorem,
    TuranBipartiteHalfCorollary,
    TuranBipartiteProposition,
    /// Exact simple/Turán sieve evaluation (see [`crate::sieve`]).
    Sieve,
}

impl BoundSource {
    pub fn name(self) -> &'static str {
        match self {
            BoundSource::GnpTheorem => "gnp_theorem",
            BoundSource::GnpHalfCorollary => "gnp_half_corollary",
            BoundSource::GnpProposition => "gnp_proposition",
            BoundSource::GnpPropositionProofExponent => "gnp_proposition_proof_exponent",
            BoundSource::KPartiteTheorem => "kpartite_theorem",
            BoundSource::KPartiteHalfCorollary => "kpartite_half_corollary",
            BoundSource::KPartiteProposition => "kpartite_proposition",
            BoundSource::TuranKPartiteTheorem => "turan_kpartite_theorem",
            BoundSource::TuranKPartiteHalfCorollary => "turan_kpartite_half_corollary",
            BoundSource::TuranKPartiteProposition => "turan_kpartite_proposition",
            BoundSource::BipartiteTheorem => "bipartite_theorem",
            BoundSource::BipartiteHalfCorollary => "bipartite_half_corollary",
            BoundSource::BipartiteProposition => "bipartite_proposition",
            BoundSource::TuranBipartiteTheorem => "turan_bipartite_theorem",
            BoundSource::TuranBipartiteHalfCorollary => "turan_bipartite_half_corollary",
            BoundSource::TuranBipartiteProposition => "turan_bipartite_proposition",
            BoundSource::Sieve => "sieve",
        }
    }
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A lower/upper bound on a probability, raw and clamped to `[0, 1]`.
///
/// The raw values may cross (both bounds can be trivial at once). A missing
/// upper bound is represented by `upper_raw = +inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundPair {
    lower_term: f64,
    upper_raw: f64,
    source: BoundSource,
    directed: bool,
    asymptotic_only: bool,
}

impl BoundPair {
    /// Builds a pair from the lower term `T` (lower bound `1 - T`) and the raw
    /// upper bound.
    pub fn new(source: BoundSource, lower_term: f64, upper_raw: f64) -> Self {
        debug_assert!(!lower_term.is_nan() && !upper_raw.is_nan());
        Self {
            lower_term,
            upper_raw,
            source,
            directed: false,
            asymptotic_only: false,
        }
    }

    pub(crate) fn asymptotic(mut self) -> Self {
        self.asymptotic_only = true;
        self
    }

    pub fn lower_term(&self) -> f64 {
        self.lower_term
    }

    pub fn lower_raw(&self) -> f64 {
        1.0 - self.lower_term
    }

    pub fn upper_raw(&self) -> f64 {
        self.upper_raw
    }

    pub fn lower(&self) -> f64 {
        self.lower_raw().clamp(0.0, 1.0)
    }

    pub fn upper(&self) -> f64 {
        self.upper_raw.clamp(0.0, 1.0)
    }

    pub fn trivial_lower(&self) -> bool {
        self.lower_raw() <= 0.0
    }

    pub fn trivial_upper(&self) -> bool {
        self.upper_raw >= 1.0
    }

    pub fn source(&self) -> BoundSource {
        self.source
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Set for proposition-level bounds whose `o(1)` factors were dropped.
    pub fn asymptotic_only(&self) -> bool {
        self.asymptotic_only
    }
}

/// Converts an undirected bound into the bound for the directed analogue:
/// the lower term is doubled and the upper bound halved.
pub fn directed_adjust(b: &BoundPair, kind: FamilyKind) -> Result<BoundPair> {
    if !kind.is_directed() {
        return Err(Error::InvalidArgument(format!(
            "directed adjustment needs a directed family, got {kind}"
        )));
    }
    if b.directed {
        return Err(Error::AlreadyAdjusted);
    }
    if b.source == BoundSource::Sieve {
        return Err(Error::InvalidArgument(
            "sieve bounds are computed directly for directed families".into(),
        ));
    }
    Ok(BoundPair {
        lower_term: 2.0 * b.lower_term,
        upper_raw: b.upper_raw / 2.0,
        directed: true,
        ..*b
    })
}

/// Every closed-form bound that applies to `family` at edge probability `p`,
/// in a fixed order: theorems, then `p = 1/2` corollaries, then
/// propositions; Turán variants follow when the shape is a Turán partition.
///
/// Bounds whose preconditions fail for this input are skipped.
pub fn applicable_bounds(family: &GraphFamily, p: f64) -> Result<Vec<BoundPair>> {
    check_open_probability_f64(p)?;
    let shape = family.shape();
    let n = family.n();
    let half = p == 0.5;
    let mut out = Vec::new();
    match family.kind().undirected() {
        FamilyKind::Simple => {
            out.extend(gnp_bounds(n, p).ok());
            if half {
                out.extend(gnp_half_bounds(n).ok());
            }
            out.extend(gnp_asymptotic_bounds(n, p).ok());
            out.extend(gnp_asymptotic_bounds_proof_exponent(n, p).ok());
        }
        FamilyKind::KPartite => {
            out.extend(kpartite_bounds(shape, p).ok());
            if half {
                out.extend(kpartite_half_bounds(shape).ok());
            }
            out.extend(kpartite_asymptotic_bounds(shape, p).ok());
            if shape.is_turan() {
                let k = shape.parts();
                out.extend(kpartite_turan_bounds(n, k, p).ok());
                if half {
                    out.extend(kpartite_turan_half_bounds(n, k).ok());
                }
                out.extend(kpartite_turan_asymptotic_bounds(n, k, p).ok());
            }
        }
        FamilyKind::Bipartite => {
            out.extend(bipartite_bounds(shape, p).ok());
            if half {
                out.extend(bipartite_half_bounds(shape).ok());
            }
            out.extend(bipartite_asymptotic_bounds(shape, p).ok());
            if shape.is_turan() {
                out.extend(bipartite_turan_bounds(n, p).ok());
                if half {
                    out.extend(bipartite_turan_half_lower(n).ok());
                }
                out.extend(bipartite_turan_asymptotic_bounds(n, p).ok());
            }
        }
        _ => unreachable!("undirected() only returns undirected kinds"),
    }
    if family.is_directed() {
        out = out
            .iter()
            .map(|b| directed_adjust(b, family.kind()))
            .collect::<Result<_>>()?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// log-space helpers

/// `ln(Σ exp(x_i))`, exact for `-inf` entries.
pub(crate) fn log_sum_exp(xs: &[f64]) -> f64 {
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max.is_infinite() {
        return max;
    }
    max + xs.iter().map(|x| (x - max).exp()).sum::<f64>().ln()
}

/// `ln(1 + exp(x))`.
pub(crate) fn softplus(x: f64) -> f64 {
    if x > 35.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// `ln(1 - p^2)`.
pub(crate) fn ln_one_minus_sq(p: f64) -> f64 {
    (-p * p).ln_1p()
}

pub(crate) fn ln(x: f64) -> f64 {
    x.ln()
}

pub(crate) fn check_p(p: f64) -> Result<()> {
    check_open_probability_f64(p)
}
