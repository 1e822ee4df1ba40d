//! Exact simple-sieve and Turán-sieve bounds on the probability that a random
//! graph meets its family's target diameter.
//!
//! A *witness pair* `b` is a vertex pair whose connection decides the
//! target diameter; `b` is *unwitnessed* in a graph when
//!
//! * diameter-2 families: `b = {u, v}` is not an edge and has no common
//!   neighbour (directed: no arc `u -> v` and no path `u -> w -> v`);
//! * bipartite families: `u`, `v` lie in the same part and have no common
//!   neighbour (directed: no path `u -> w -> v`).
//!
//! The directed bipartite reading is an interpretation; under it a graph
//! has every same-part ordered pair witnessed exactly when its directed
//! diameter is at most 3.
//!
//! A graph meets the target iff no pair is unwitnessed, so with
//! `q(b) = P(b unwitnessed)` and `Q(b1, b2) = P(both unwitnessed)`:
//!
//! ```text
//! 1 - Σ q(b)  <=  P(target diameter)  <=  Σ Q(b1, b2) / (Σ q(b))^2 - 1
//! ```
//!
//! All values are exact rationals.

mod local;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bounds::{BoundPair, BoundSource};
use crate::error::{Error, Result};
use crate::graph::GraphFamily;
use crate::rational::{check_open_probability, to_f64, Rational};
use local::{EventKind, LocalTerms, Pattern, MAX_LABELS};

/// Largest witness-pair count accepted by [`incidence_stats`].
pub const MAX_WITNESS_PAIRS: u64 = 10_000;
/// Largest witness-pair count accepted by [`incidence_stats_naive`].
pub const MAX_NAIVE_WITNESS_PAIRS: u64 = 1_000;

/// An admissible witness pair of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WitnessPair {
    pub u: usize,
    pub v: usize,
    pub part_u: usize,
    pub part_v: usize,
}

impl WitnessPair {
    /// Validates `(u, v)` for `family`. Undirected pairs are stored with
    /// `u < v`.
    pub fn new(family: &GraphFamily, u: usize, v: usize) -> Result<Self> {
        let n = family.n();
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidArgument(format!(
                "({u}, {v}) is not a pair of distinct vertices below {n}"
            )));
        }
        let (u, v) = if family.is_directed() { (u, v) } else { (u.min(v), u.max(v)) };
        let shape = family.shape();
        let (part_u, part_v) = (shape.part_of(u), shape.part_of(v));
        if family.kind().is_bipartite() && part_u != part_v {
            return Err(Error::InvalidArgument(format!(
                "({u}, {v}) crosses parts; {} witness pairs lie inside one part",
                family.kind()
            )));
        }
        Ok(Self { u, v, part_u, part_v })
    }

    /// Every witness pair of `family`, in the order of
    /// [`GraphFamily::witness_pairs`].
    pub fn all(family: &GraphFamily) -> Vec<Self> {
        family
            .witness_pairs()
            .into_iter()
            .map(|(u, v)| Self::new(family, u, v).expect("listed pairs are admissible"))
            .collect()
    }
}

/// Normalised incidence sums: `sum_deg = Σ_b q(b)` and
/// `sum_joint = Σ_{b1, b2} Q(b1, b2)` over ordered pairs, diagonal included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStats {
    pub sum_deg: Rational,
    pub sum_joint: Rational,
    pub b_count: u64,
}

/// `1 - sum_deg`. May be negative.
pub fn simple_sieve_lower(stats: &IncidenceStats) -> Rational {
    Rational::one() - &stats.sum_deg
}

/// `sum_joint / sum_deg^2 - 1`. May exceed 1.
pub fn turan_sieve_upper(stats: &IncidenceStats) -> Result<Rational> {
    if stats.sum_deg.is_zero() {
        return Err(Error::DivisionByZero(
            "Turán sieve needs a positive degree sum".into(),
        ));
    }
    Ok(&stats.sum_joint / (&stats.sum_deg * &stats.sum_deg) - Rational::one())
}

/// Number of witness pairs, without listing them.
pub fn witness_pair_count(family: &GraphFamily) -> u64 {
    let choose2 = |k: usize| (k as u64) * (k as u64).saturating_sub(1) / 2;
    let unordered = if family.kind().is_bipartite() {
        family.shape().sizes().iter().map(|&s| choose2(s)).sum()
    } else {
        choose2(family.n())
    };
    if family.is_directed() {
        2 * unordered
    } else {
        unordered
    }
}

/// Exact probability that `b` is unwitnessed.
pub fn pair_survival_prob(family: &GraphFamily, p: &Rational, b: WitnessPair) -> Result<Rational> {
    check_open_probability(p)?;
    check_admissible(family, b)?;
    Ok(concrete_prob(family, p, &[b]))
}

/// Exact probability that `b1` and `b2` are both unwitnessed.
pub fn joint_survival_prob(
    family: &GraphFamily,
    p: &Rational,
    b1: WitnessPair,
    b2: WitnessPair,
) -> Result<Rational> {
    check_open_probability(p)?;
    check_admissible(family, b1)?;
    check_admissible(family, b2)?;
    if b1 == b2 {
        return Ok(concrete_prob(family, p, &[b1]));
    }
    Ok(concrete_prob(family, p, &[b1, b2]))
}

fn check_admissible(family: &GraphFamily, b: WitnessPair) -> Result<()> {
    let canonical = WitnessPair::new(family, b.u, b.v)?;
    if canonical != b {
        return Err(Error::InvalidArgument(format!(
            "({}, {}) is not a canonical witness pair of this family",
            b.u, b.v
        )));
    }
    Ok(())
}

fn concrete_prob(family: &GraphFamily, p: &Rational, pairs: &[WitnessPair]) -> Rational {
    let kind = EventKind::of(family.kind());
    let shape = family.shape();
    let mut vertices: Vec<usize> = Vec::with_capacity(MAX_LABELS);
    let mut label = |v: usize| match vertices.iter().position(|&x| x == v) {
        Some(i) => i,
        None => {
            vertices.push(v);
            vertices.len() - 1
        }
    };
    let label_pairs: Vec<(usize, usize)> = pairs.iter().map(|b| (label(b.u), label(b.v))).collect();

    let mut class_of = [0; MAX_LABELS];
    let mut class_sizes = Vec::new();
    if kind.intra_class {
        class_sizes.push(family.n());
    } else {
        let mut parts: Vec<usize> = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            let part = shape.part_of(v);
            class_of[i] = match parts.iter().position(|&x| x == part) {
                Some(c) => c,
                None => {
                    parts.push(part);
                    class_sizes.push(shape.sizes()[part]);
                    parts.len() - 1
                }
            };
        }
    }
    let pattern = Pattern {
        labels: vertices.len(),
        class_of,
        classes: class_sizes.len(),
        pairs: label_pairs,
    };
    let outside = family.n() - class_sizes.iter().sum::<usize>();
    LocalTerms::new(kind, &pattern, p).evaluate(&class_sizes, outside)
}

/// Incidence sums by symmetry-orbit counting.
///
/// Ordered tuples of witness-pair vertices are grouped by their label
/// pattern (which positions coincide), the partition of labels into parts,
/// and the sizes of those parts. Each group shares one probability, so the
/// cost depends on the number of distinct part sizes rather than on `|B|^2`.
pub fn incidence_stats(family: &GraphFamily, p: &Rational) -> Result<IncidenceStats> {
    check_open_probability(p)?;
    let b_count = witness_pair_count(family);
    if b_count > MAX_WITNESS_PAIRS {
        return Err(Error::Resource(format!(
            "{b_count} witness pairs exceed the orbit-counting limit of {MAX_WITNESS_PAIRS}"
        )));
    }
    let orbits = Orbits::new(family, p);
    let deg = orbits.ordered_sum(&[0, 1]);
    let mut joint = Rational::zero();
    for tail in [[0, 1], [0, 2], [1, 0], [1, 2], [2, 0], [2, 1], [2, 3]] {
        joint += orbits.ordered_sum(&[0, 1, tail[0], tail[1]]);
    }
    let (sum_deg, sum_joint) = if family.is_directed() {
        (deg, joint)
    } else {
        // Each unordered pair appears in both orientations.
        (deg / BigInt::from(2), joint / BigInt::from(4))
    };
    Ok(IncidenceStats { sum_deg, sum_joint, b_count })
}

/// Incidence sums by direct summation over all `|B|^2` pairs of pairs.
pub fn incidence_stats_naive(family: &GraphFamily, p: &Rational) -> Result<IncidenceStats> {
    check_open_probability(p)?;
    let b_count = witness_pair_count(family);
    if b_count > MAX_NAIVE_WITNESS_PAIRS {
        return Err(Error::Resource(format!(
            "{b_count} witness pairs exceed the naive summation limit of {MAX_NAIVE_WITNESS_PAIRS}"
        )));
    }
    let pairs = WitnessPair::all(family);
    let mut sum_deg = Rational::zero();
    let mut sum_joint = Rational::zero();
    for &b1 in &pairs {
        sum_deg += pair_survival_prob(family, p, b1)?;
        for &b2 in &pairs {
            sum_joint += joint_survival_prob(family, p, b1, b2)?;
        }
    }
    Ok(IncidenceStats { sum_deg, sum_joint, b_count })
}

/// Symmetry data shared by the orbit sums of one family.
struct Orbits<'a> {
    family: &'a GraphFamily,
    kind: EventKind,
    p: &'a Rational,
    /// Distinct part sizes with the number of parts of each size.
    size_classes: Vec<(usize, usize)>,
}

impl<'a> Orbits<'a> {
    fn new(family: &'a GraphFamily, p: &'a Rational) -> Self {
        let mut size_classes: Vec<(usize, usize)> = Vec::new();
        for &s in family.shape().sizes() {
            match size_classes.last_mut() {
                Some((size, mult)) if *size == s => *mult += 1,
                _ => size_classes.push((s, 1)),
            }
        }
        Self {
            family,
            kind: EventKind::of(family.kind()),
            p,
            size_classes,
        }
    }

    /// `Σ` of the joint probability over ordered vertex tuples whose
    /// coincidences follow `seq` (consecutive entries form the pairs).
    fn ordered_sum(&self, seq: &[usize]) -> Rational {
        let labels = seq.iter().max().map_or(0, |&m| m + 1);
        let pairs: Vec<(usize, usize)> = seq.chunks(2).map(|c| (c[0], c[1])).collect();
        let mut total = Rational::zero();

        if self.kind.intra_class {
            let n = self.family.n();
            let pattern = Pattern { labels, class_of: [0; MAX_LABELS], classes: 1, pairs };
            let count = falling(n, labels);
            if !count.is_zero() {
                total += LocalTerms::new(self.kind, &pattern, self.p).evaluate(&[n], 0) * count;
            }
            return total;
        }

        let same_part_pairs = self.family.kind().is_bipartite();
        for class_of in set_partitions(labels) {
            if same_part_pairs && pairs.iter().any(|&(x, y)| class_of[x] != class_of[y]) {
                continue;
            }
            let classes = class_of[..labels].iter().max().map_or(0, |&m| m + 1);
            let pattern = Pattern { labels, class_of, classes, pairs: pairs.clone() };
            let terms = LocalTerms::new(self.kind, &pattern, self.p);
            for assignment in assignments(classes, self.size_classes.len()) {
                let Some(count) = self.orbit_size(&pattern, &assignment) else {
                    continue;
                };
                let sizes: Vec<usize> = assignment.iter().map(|&i| self.size_classes[i].0).collect();
                let outside = self.family.n() - sizes.iter().sum::<usize>();
                total += terms.evaluate(&sizes, outside) * count;
            }
        }
        total
    }

    /// Number of ordered vertex tuples realising `pattern` with class `c`
    /// placed in a part of size `size_classes[assignment[c]]`, distinct
    /// classes in distinct parts. `None` when there are none.
    fn orbit_size(&self, pattern: &Pattern, assignment: &[usize]) -> Option<BigInt> {
        let mut count = BigInt::one();
        for (idx, &(_, mult)) in self.size_classes.iter().enumerate() {
            let t = assignment.iter().filter(|&&a| a == idx).count();
            count *= falling(mult, t);
        }
        for (c, &idx) in assignment.iter().enumerate() {
            count *= falling(self.size_classes[idx].0, pattern.labels_in(c));
        }
        (count.is_positive()).then_some(count)
    }
}

fn falling(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

/// Restricted-growth strings of length `len`: each set partition of the
/// labels once, with label 0 in class 0.
fn set_partitions(len: usize) -> Vec<[usize; MAX_LABELS]> {
    fn extend(cur: &mut [usize; MAX_LABELS], pos: usize, len: usize, max: usize, out: &mut Vec<[usize; MAX_LABELS]>) {
        if pos == len {
            out.push(*cur);
            return;
        }
        for c in 0..=max + 1 {
            cur[pos] = c;
            extend(cur, pos + 1, len, max.max(c), out);
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let mut cur = [0; MAX_LABELS];
    extend(&mut cur, 1, len, 0, &mut out);
    out
}

/// Every map from `classes` classes to `values` size indices.
fn assignments(classes: usize, values: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = values.pow(classes as u32);
    (0..total).map(move |mut code| {
        (0..classes)
            .map(|_| {
                let d = code % values;
                code /= values;
                d
            })
            .collect()
    })
}

/// Sieve bounds with both exact and floating-point views.
#[derive(Debug, Clone, PartialEq)]
pub struct SieveBounds {
    pub stats: IncidenceStats,
    /// `1 - sum_deg`, unclamped.
    pub lower_raw: Rational,
    /// `sum_joint / sum_deg^2 - 1`, unclamped.
    pub upper_raw: Rational,
}

impl SieveBounds {
    pub fn lower(&self) -> Rational {
        self.lower_raw.clone().max(Rational::zero())
    }

    pub fn upper(&self) -> Rational {
        self.upper_raw.clone().min(Rational::one())
    }

    pub fn bound_pair(&self) -> BoundPair {
        BoundPair::new(BoundSource::Sieve, to_f64(&self.stats.sum_deg), to_f64(&self.upper_raw))
    }
}

/// Exact simple and Turán sieve bounds for `family` at edge probability `p`.
pub fn sieve_bounds(family: &GraphFamily, p: &Rational) -> Result<SieveBounds> {
    let stats = incidence_stats(family, p)?;
    let lower_raw = simple_sieve_lower(&stats);
    let upper_raw = turan_sieve_upper(&stats)?;
    Ok(SieveBounds { stats, lower_raw, upper_raw })
}
