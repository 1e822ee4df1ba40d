use std::collections::VecDeque;
use std::fmt;

use super::family::GraphFamily;
use super::matrix::{rows_intersect, AdjacencyMatrix};
use super::shape::PartitionShape;
use crate::error::{Error, Result};

/// Graph diameter: a finite hop count, or `Infinite` for graphs that are not
/// (strongly) connected. Orders finite values below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_most(self, d: usize) -> bool {
        matches!(self, Diameter::Finite(x) if x <= d)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// True iff every pair of vertices is adjacent or has a common neighbour,
/// i.e. the graph is connected with diameter at most 2.
///
/// Directed graphs are forwarded to [`directed_has_diameter_le2`].
pub fn has_diameter_le2(g: &AdjacencyMatrix) -> bool {
    if g.is_directed() {
        return directed_has_diameter_le2(g);
    }
    let n = g.n();
    for u in 0..n {
        let row_u = g.row(u);
        for v in u + 1..n {
            if !g.has_edge(u, v) && !rows_intersect(row_u, g.row(v)) {
                return false;
            }
        }
    }
    true
}

/// True iff for every ordered pair `(u, v)` there is an arc `u -> v` or a
/// 2-step path `u -> w -> v`.
pub fn directed_has_diameter_le2(g: &AdjacencyMatrix) -> bool {
    let n = g.n();
    for u in 0..n {
        let out_u = g.row(u);
        for v in 0..n {
            if u != v && !g.has_edge(u, v) && !rows_intersect(out_u, g.in_row(v)) {
                return false;
            }
        }
    }
    true
}

/// True iff every pair of vertices in the same part has a common neighbour
/// (for directed graphs: every ordered same-part pair has a 2-step path).
///
/// With both parts of size at least 2 this is equivalent to the bipartite
/// graph being connected with diameter at most 3.
pub fn bipartite_has_diameter_le3(g: &AdjacencyMatrix, shape: &PartitionShape) -> Result<bool> {
    if shape.parts() != 2 || shape.sizes()[0] < 2 {
        return Err(Error::InvalidArgument(format!(
            "bipartite check needs two parts of size >= 2, got {shape}"
        )));
    }
    if shape.total() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "shape {shape} does not match a graph on {} vertices",
            g.n()
        )));
    }
    for part in 0..2 {
        let range = shape.part_range(part);
        for u in range.clone() {
            for v in range.clone() {
                if u == v || (!g.is_directed() && v < u) {
                    continue;
                }
                if !rows_intersect(g.row(u), g.in_row(v)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Fast check of the family's target event (diameter <= 2, or <= 3 for
/// bipartite kinds).
pub fn meets_target_diameter(family: &GraphFamily, g: &AdjacencyMatrix) -> bool {
    if family.kind().is_bipartite() {
        bipartite_has_diameter_le3(g, family.shape()).expect("graph sampled from its family")
    } else if g.is_directed() {
        directed_has_diameter_le2(g)
    } else {
        has_diameter_le2(g)
    }
}

/// Reference diameter by breadth-first search from every vertex, following
/// out-arcs for directed graphs.
pub fn graph_diameter(g: &AdjacencyMatrix) -> Diameter {
    let n = g.n();
    let mut best = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for source in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[source] = 0;
        queue.clear();
        queue.push_back(source);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if dist[v] == usize::MAX && g.has_edge(u, v) {
                    dist[v] = dist[u] + 1;
                    best = best.max(dist[v]);
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        if reached < n {
            return Diameter::Infinite;
        }
    }
    Diameter::Finite(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, directed: bool, edges: &[(usize, usize)]) -> AdjacencyMatrix {
        AdjacencyMatrix::from_edges(n, directed, edges).unwrap()
    }

    #[test]
    fn undirected_examples() {
        assert!(has_diameter_le2(&AdjacencyMatrix::complete(4, false)));
        assert!(has_diameter_le2(&graph(3, false, &[(0, 2), (2, 1)])));
        assert!(!has_diameter_le2(&graph(4, false, &[(0, 1), (1, 2), (2, 3)])));
    }

    #[test]
    fn directed_examples() {
        assert!(directed_has_diameter_le2(&AdjacencyMatrix::complete(3, true)));
        assert!(directed_has_diameter_le2(&graph(3, true, &[(0, 1), (1, 2), (2, 0)])));
        assert!(!directed_has_diameter_le2(&graph(2, true, &[(0, 1)])));
    }

    #[test]
    fn bipartite_examples() {
        let shape = PartitionShape::new(vec![2, 2]).unwrap();
        let k22 = graph(4, false, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(bipartite_has_diameter_le3(&k22, &shape).unwrap());
        let path = graph(4, false, &[(0, 2), (0, 3), (1, 2)]);
        assert!(bipartite_has_diameter_le3(&path, &shape).unwrap());
        assert_eq!(graph_diameter(&path), Diameter::Finite(3));
        let isolated = graph(4, false, &[(0, 2), (0, 3)]);
        assert!(!bipartite_has_diameter_le3(&isolated, &shape).unwrap());
        let wrong = PartitionShape::new(vec![2, 3]).unwrap();
        assert!(bipartite_has_diameter_le3(&k22, &wrong).is_err());
        let wrong = PartitionShape::new(vec![1, 3]).unwrap();
        assert!(bipartite_has_diameter_le3(&k22, &wrong).is_err());
    }

    #[test]
    fn bfs_diameter_examples() {
        for n in 2..6 {
            assert_eq!(graph_diameter(&AdjacencyMatrix::complete(n, false)), Diameter::Finite(1));
        }
        assert_eq!(graph_diameter(&graph(4, false, &[(0, 1), (1, 2), (2, 3)])), Diameter::Finite(3));
        assert_eq!(graph_diameter(&graph(4, false, &[(0, 1), (2, 3)])), Diameter::Infinite);
        assert_eq!(graph_diameter(&graph(1, false, &[])), Diameter::Finite(0));
        assert_eq!(graph_diameter(&graph(3, true, &[(0, 1), (1, 2), (2, 0)])), Diameter::Finite(2));
        assert_eq!(graph_diameter(&graph(2, true, &[(0, 1)])), Diameter::Infinite);
        assert!(Diameter::Finite(7) < Diameter::Infinite);
    }
}
