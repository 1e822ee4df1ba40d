//! Local enumeration of the edges touching at most four labelled vertices.
//!
//! Whether one or two vertex pairs are witnessed depends only on the edges
//! among their (at most four) vertices and on the edges from each outside
//! vertex `w` to them. Different `w` are independent, and every `w` in the
//! same part sees the same allowed edges, so the joint probability is
//!
//! ```text
//! P(internal edges leave the pairs unwitnessed)
//!     * prod over groups g of P(one w in g witnesses neither pair)^|g|
//! ```

use crate::graph::FamilyKind;
use crate::rational::{weighted_by_edge_count, Rational};

pub(crate) const MAX_LABELS: usize = 4;

/// How a family's witness event reads on labelled vertices.
#[derive(Debug, Clone, Copy)]
pub(crate) struct EventKind {
    pub directed: bool,
    /// An edge `u -> v` witnesses `(u, v)` by itself (diameter-2 families).
    pub direct_edge: bool,
    /// Edges may join two vertices of the same class (non-partite families).
    pub intra_class: bool,
}

impl EventKind {
    pub fn of(kind: FamilyKind) -> Self {
        Self {
            directed: kind.is_directed(),
            direct_edge: !kind.is_bipartite(),
            intra_class: !kind.is_partite(),
        }
    }
}

/// Labels `0..labels`, each in a class (a distinct part, or the single
/// vertex set of a non-partite family), and the pairs that must stay
/// unwitnessed.
#[derive(Debug, Clone)]
pub(crate) struct Pattern {
    pub labels: usize,
    pub class_of: [usize; MAX_LABELS],
    pub classes: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl Pattern {
    pub fn labels_in(&self, class: usize) -> usize {
        self.class_of[..self.labels].iter().filter(|&&c| c == class).count()
    }
}

/// The size-independent factors of a pattern's probability.
#[derive(Debug, Clone)]
pub(crate) struct LocalTerms {
    internal: Rational,
    /// Per-`w` factor for a non-label vertex in each class.
    class_factor: Vec<Rational>,
    /// Per-`w` factor for a vertex in a part holding no label.
    outside_factor: Rational,
    labels_in_class: Vec<usize>,
}

impl LocalTerms {
    pub fn new(kind: EventKind, pattern: &Pattern, p: &Rational) -> Self {
        let l = pattern.labels;
        let allowed = |i: usize, j: usize| {
            i != j && (kind.intra_class || pattern.class_of[i] != pattern.class_of[j])
        };

        let mut edges = Vec::new();
        for i in 0..l {
            for j in 0..l {
                if (kind.directed || i < j) && allowed(i, j) {
                    edges.push((i, j));
                }
            }
        }
        let mut counts = vec![0u64; edges.len() + 1];
        for mask in 0u32..(1 << edges.len()) {
            let mut adj = [[false; MAX_LABELS]; MAX_LABELS];
            for (bit, &(i, j)) in edges.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    adj[i][j] = true;
                    if !kind.directed {
                        adj[j][i] = true;
                    }
                }
            }
            let witnessed = pattern.pairs.iter().any(|&(x, y)| {
                (kind.direct_edge && adj[x][y])
                    || (0..l).any(|w| w != x && w != y && adj[x][w] && adj[w][y])
            });
            if !witnessed {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        let internal = weighted_by_edge_count(&counts, p);

        let all = (0..l).collect::<Vec<_>>();
        let class_factor = (0..pattern.classes)
            .map(|c| {
                let reach: Vec<usize> = if kind.intra_class {
                    all.clone()
                } else {
                    all.iter().copied().filter(|&i| pattern.class_of[i] != c).collect()
                };
                outside_vertex_factor(kind, &reach, &pattern.pairs, p)
            })
            .collect();
        let outside_factor = outside_vertex_factor(kind, &all, &pattern.pairs, p);
        let labels_in_class = (0..pattern.classes).map(|c| pattern.labels_in(c)).collect();
        Self {
            internal,
            class_factor,
            outside_factor,
            labels_in_class,
        }
    }

    /// Probability for concrete class sizes and `outside` vertices in parts
    /// without labels.
    pub fn evaluate(&self, class_sizes: &[usize], outside: usize) -> Rational {
        let mut value = self.internal.clone();
        for ((f, &size), &used) in self.class_factor.iter().zip(class_sizes).zip(&self.labels_in_class) {
            value *= num_traits::pow(f.clone(), size - used);
        }
        value * num_traits::pow(self.outside_factor.clone(), outside)
    }
}

/// Probability that one vertex `w`, joinable to the labels in `reach`,
/// witnesses none of `pairs`.
fn outside_vertex_factor(
    kind: EventKind,
    reach: &[usize],
    pairs: &[(usize, usize)],
    p: &Rational,
) -> Rational {
    // Undirected: one edge per reachable label. Directed: `x -> w` then `w -> x`.
    let per_label = if kind.directed { 2 } else { 1 };
    let vars = per_label * reach.len();
    let slot = |label: usize| reach.iter().position(|&r| r == label);
    let mut counts = vec![0u64; vars + 1];
    for mask in 0u32..(1 << vars) {
        let into_w = |x: usize| slot(x).is_some_and(|i| mask >> (per_label * i) & 1 == 1);
        let from_w = |y: usize| {
            slot(y).is_some_and(|i| mask >> (per_label * i + per_label - 1) & 1 == 1)
        };
        if !pairs.iter().any(|&(x, y)| into_w(x) && from_w(y)) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    weighted_by_edge_count(&counts, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn half() -> Rational {
        parse_rational("1/2").unwrap()
    }

    #[test]
    fn shared_vertex_factor_is_five_eighths() {
        // Pairs (0,1) and (0,2) share label 0; a third vertex witnesses one of
        // them unless it avoids both.
        let kind = EventKind::of(FamilyKind::Simple);
        let f = outside_vertex_factor(kind, &[0, 1, 2], &[(0, 1), (0, 2)], &half());
        assert_eq!(f, parse_rational("5/8").unwrap());
    }

    #[test]
    fn single_pair_factor() {
        let kind = EventKind::of(FamilyKind::Simple);
        let f = outside_vertex_factor(kind, &[0, 1], &[(0, 1)], &half());
        assert_eq!(f, parse_rational("3/4").unwrap());
        let kind = EventKind::of(FamilyKind::Directed);
        let f = outside_vertex_factor(kind, &[0, 1], &[(0, 1)], &half());
        assert_eq!(f, parse_rational("3/4").unwrap());
    }

    #[test]
    fn simple_pair_n4() {
        let pattern = Pattern {
            labels: 2,
            class_of: [0; MAX_LABELS],
            classes: 1,
            pairs: vec![(0, 1)],
        };
        let terms = LocalTerms::new(EventKind::of(FamilyKind::Simple), &pattern, &half());
        assert_eq!(terms.evaluate(&[4], 0), parse_rational("9/32").unwrap());
    }
}
