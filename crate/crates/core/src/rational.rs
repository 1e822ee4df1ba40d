//! Small helpers around exact rational probabilities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Parses `"r/s"` or a plain integer into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as `"r/s"`, or `"r"` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Checks that `p` is a probability strictly between 0 and 1.
pub fn check_open_probability(p: &Rational) -> Result<()> {
    if p.is_positive() && *p < Rational::one() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "edge probability must lie in (0,1), got {}",
            format_rational(p)
        )))
    }
}

pub fn check_open_probability_f64(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "edge probability must lie in (0,1), got {p}"
        )))
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    // BigRational::to_f64 handles huge numerators/denominators without
    // overflowing either part first.
    value.to_f64().unwrap_or(f64::NAN)
}

/// `Σ_k counts[k] · p^k (1-p)^(m-k)` computed exactly, where `m = counts.len() - 1`.
///
/// `counts[k]` is the number of configurations with exactly `k` present
/// edges among `m` independent candidate edges.
pub fn weighted_by_edge_count<C>(counts: &[C], p: &Rational) -> Rational
where
    C: Clone + Into<BigInt>,
{
    if counts.is_empty() {
        return Rational::zero();
    }
    let m = counts.len() - 1;
    let r = p.numer();
    let s = p.denom();
    let q = s - r;
    // Horner-style accumulation of Σ c_k r^k q^(m-k).
    let mut r_pow = BigInt::one();
    let mut q_pows = Vec::with_capacity(m + 1);
    let mut acc = BigInt::one();
    for _ in 0..=m {
        q_pows.push(acc.clone());
        acc *= &q;
    }
    let mut total = BigInt::zero();
    for (k, c) in counts.iter().enumerate() {
        let c: BigInt = c.clone().into();
        if !c.is_zero() {
            total += c * &r_pow * &q_pows[m - k];
        }
        r_pow *= r;
    }
    Rational::new(total, num_traits::pow(s.clone(), m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("2/4").unwrap(), q(1, 2));
        assert_eq!(parse_rational(" 3 ").unwrap(), q(3, 1));
        assert_eq!(format_rational(&q(6, 8)), "3/4");
        assert_eq!(format_rational(&q(4, 2)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn open_probability() {
        assert!(check_open_probability(&q(1, 3)).is_ok());
        assert!(check_open_probability(&q(0, 1)).is_err());
        assert!(check_open_probability(&q(1, 1)).is_err());
        assert!(check_open_probability(&q(-1, 2)).is_err());
    }

    #[test]
    fn binomial_weights_sum_to_one() {
        // counts[k] = C(4, k): every configuration of 4 edges.
        let counts: Vec<u64> = vec![1, 4, 6, 4, 1];
        assert_eq!(weighted_by_edge_count(&counts, &q(2, 7)), q(1, 1));
        // Only the full configuration: p^4.
        let counts: Vec<u64> = vec![0, 0, 0, 0, 1];
        assert_eq!(weighted_by_edge_count(&counts, &q(1, 3)), q(1, 81));
    }
}
