use std::f64::consts::LN_2;

use super::{check_p, ln, softplus};
use crate::error::{Error, Result};
use crate::graph::{FamilyKind, GraphFamily, PartitionShape};

/// The family-specific expression whose limit is the threshold constant `c`.
///
/// | form | expression |
/// |------|-----------|
/// | `Gnp` | `2 ln n - n p^2 - ln 2` |
/// | `KPartite` | `2 ln n_k - p^2 (n - n_k) - ln 2 + ln(1 + (2 n_(k-1)/n_k) e^(p^2 n_(k-1)))` |
/// | `TuranKPartite` | `2 ln n - ln k - n p^2 (1 - 1/k) - ln 2 + ln(1 + (k-1) e^(n p^2 / k))` |
/// | `Bipartite` | `2 ln n2 - n1 p^2 - ln 2` |
/// | `TuranBipartite` | `2 ln n - ln 4 - n p^2 / 2` |
///
/// Directed variants add `ln 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThresholdForm {
    Gnp { n: usize },
    KPartite(PartitionShape),
    TuranKPartite { n: usize, k: usize },
    Bipartite(PartitionShape),
    TuranBipartite { n: usize },
}

impl ThresholdForm {
    /// The general (non-Turán) form matching a family.
    pub fn for_family(family: &GraphFamily) -> Self {
        match family.kind().undirected() {
            FamilyKind::Simple => ThresholdForm::Gnp { n: family.n() },
            FamilyKind::KPartite => ThresholdForm::KPartite(family.shape().clone()),
            _ => ThresholdForm::Bipartite(family.shape().clone()),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            ThresholdForm::Gnp { n }
            | ThresholdForm::TuranKPartite { n, .. }
            | ThresholdForm::TuranBipartite { n } => *n,
            ThresholdForm::KPartite(s) | ThresholdForm::Bipartite(s) => s.total(),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            ThresholdForm::Gnp { n } => *n >= 2,
            ThresholdForm::KPartite(s) => {
                s.parts() >= 3 && s.largest(2).unwrap() >= 2 && s.total() >= s.parts() + 2
            }
            ThresholdForm::TuranKPartite { n, k } => *k >= 3 && *n > 2 * k,
            ThresholdForm::Bipartite(s) => s.parts() == 2 && s.sizes()[0] >= 2,
            ThresholdForm::TuranBipartite { n } => *n >= 4,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("unsupported threshold family {self:?}")))
        }
    }

    /// Undirected expression value at edge probability `p`.
    fn expression(&self, p: f64) -> f64 {
        let p2 = p * p;
        match self {
            ThresholdForm::Gnp { n } => {
                let n = *n as f64;
                2.0 * ln(n) - n * p2 - LN_2
            }
            ThresholdForm::KPartite(s) => {
                let n = s.total() as f64;
                let nk = s.largest(1).unwrap() as f64;
                let nk1 = s.largest(2).unwrap() as f64;
                2.0 * ln(nk) - p2 * (n - nk) - LN_2
                    + softplus(ln(2.0 * nk1 / nk) + p2 * nk1)
            }
            ThresholdForm::TuranKPartite { n, k } => {
                let (n, k) = (*n as f64, *k as f64);
                2.0 * ln(n) - ln(k) - n * p2 * (1.0 - 1.0 / k) - LN_2
                    + softplus(ln(k - 1.0) + n * p2 / k)
            }
            ThresholdForm::Bipartite(s) => {
                let (n1, n2) = (s.sizes()[0] as f64, s.sizes()[1] as f64);
                2.0 * ln(n2) - n1 * p2 - LN_2
            }
            ThresholdForm::TuranBipartite { n } => {
                let n = *n as f64;
                2.0 * ln(n) - ln(4.0) - n * p2 / 2.0
            }
        }
    }

    /// `p^2` solving `expression(p) = target` when the expression is linear
    /// in `p^2`.
    fn solve_linear(&self, target: f64) -> Option<f64> {
        match self {
            ThresholdForm::Gnp { n } => {
                let n = *n as f64;
                Some((2.0 * ln(n) - LN_2 - target) / n)
            }
            ThresholdForm::Bipartite(s) => {
                let (n1, n2) = (s.sizes()[0] as f64, s.sizes()[1] as f64);
                Some((2.0 * ln(n2) - LN_2 - target) / n1)
            }
            ThresholdForm::TuranBipartite { n } => {
                let n = *n as f64;
                Some(2.0 * (2.0 * ln(n) - ln(4.0) - target) / n)
            }
            _ => None,
        }
    }
}

/// A threshold constant `c` together with the finite-`n` edge probability
/// and the value of the defining expression there.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdSpec {
    pub form: ThresholdForm,
    pub directed: bool,
    pub c: f64,
    pub n: usize,
    pub p: f64,
    pub c_observed: f64,
}

fn directed_shift(directed: bool) -> f64 {
    if directed {
        LN_2
    } else {
        0.0
    }
}

/// Evaluates the threshold expression at `p`; `c` is set to the observed value.
pub fn threshold_c(form: &ThresholdForm, directed: bool, p: f64) -> Result<ThresholdSpec> {
    form.validate()?;
    check_p(p)?;
    let c = form.expression(p) + directed_shift(directed);
    Ok(ThresholdSpec {
        form: form.clone(),
        directed,
        c,
        n: form.n(),
        p,
        c_observed: c,
    })
}

/// Finds the edge probability at which the threshold expression equals `c`.
///
/// All expressions are strictly decreasing in `p`; linear-in-`p^2` forms are
/// solved in closed form, k-partite forms by bisection.
pub fn solve_threshold_p(form: &ThresholdForm, directed: bool, c: f64) -> Result<ThresholdSpec> {
    form.validate()?;
    if !c.is_finite() {
        return Err(Error::Domain(format!("threshold constant must be finite, got {c}")));
    }
    let target = c - directed_shift(directed);
    let p = match form.solve_linear(target) {
        Some(p2) => p2.sqrt(),
        None => {
            let (mut lo, mut hi) = (0.0f64, 1.0f64);
            if form.expression(lo) < target || form.expression(hi) > target {
                f64::NAN
            } else {
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if form.expression(mid) > target {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                0.5 * (lo + hi)
            }
        }
    };
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!(
            "no edge probability in (0,1) gives c = {c} at n = {}",
            form.n()
        )));
    }
    Ok(ThresholdSpec {
        c,
        ..threshold_c(form, directed, p)?
    })
}

/// Limits of the lower and upper bounds for threshold constant `c`:
/// `(max(0, 1 - e^c), min(1, e^(-c)))`.
pub fn limit_bounds(c: f64) -> (f64, f64) {
    ((1.0 - c.exp()).max(0.0), (-c).exp().min(1.0))
}
