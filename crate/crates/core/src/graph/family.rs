use std::fmt;
use std::str::FromStr;

use super::shape::PartitionShape;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Simple,
    Directed,
    KPartite,
    DirectedKPartite,
    Bipartite,
    DirectedBipartite,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Simple,
        FamilyKind::Directed,
        FamilyKind::KPartite,
        FamilyKind::DirectedKPartite,
        FamilyKind::Bipartite,
        FamilyKind::DirectedBipartite,
    ];

    pub fn is_directed(self) -> bool {
        matches!(
            self,
            FamilyKind::Directed | FamilyKind::DirectedKPartite | FamilyKind::DirectedBipartite
        )
    }

    pub fn is_partite(self) -> bool {
        !matches!(self, FamilyKind::Simple | FamilyKind::Directed)
    }

    pub fn is_bipartite(self) -> bool {
        matches!(self, FamilyKind::Bipartite | FamilyKind::DirectedBipartite)
    }

    /// Diameter threshold whose probability the family's bounds describe.
    pub fn target_diameter(self) -> usize {
        if self.is_bipartite() {
            3
        } else {
            2
        }
    }

    /// The undirected counterpart of a directed kind (identity otherwise).
    pub fn undirected(self) -> FamilyKind {
        match self {
            FamilyKind::Directed => FamilyKind::Simple,
            FamilyKind::DirectedKPartite => FamilyKind::KPartite,
            FamilyKind::DirectedBipartite => FamilyKind::Bipartite,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Simple => "simple",
            FamilyKind::Directed => "directed",
            FamilyKind::KPartite => "kpartite",
            FamilyKind::DirectedKPartite => "directed-kpartite",
            FamilyKind::Bipartite => "bipartite",
            FamilyKind::DirectedBipartite => "directed-bipartite",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// A random graph family: the vertex partition plus which vertex pairs are
/// candidate edges.
///
/// Simple and directed families use a single part holding every vertex;
/// partite families only allow edges between different parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphFamily {
    kind: FamilyKind,
    shape: PartitionShape,
}

impl GraphFamily {
    pub fn new(kind: FamilyKind, shape: PartitionShape) -> Result<Self> {
        let sizes = shape.sizes();
        let k = sizes.len();
        let n = shape.total();
        match kind {
            FamilyKind::Simple | FamilyKind::Directed => {
                if k != 1 {
                    return Err(Error::InvalidShape(format!(
                        "{kind} family takes a single part, got {shape}"
                    )));
                }
            }
            FamilyKind::KPartite | FamilyKind::DirectedKPartite => {
                if k < 3 || sizes[k - 2] < 2 || n < k + 2 {
                    return Err(Error::InvalidShape(format!(
                        "{kind} family needs k >= 3, n_(k-1) >= 2 and n >= k+2, got {shape}"
                    )));
                }
            }
            FamilyKind::Bipartite | FamilyKind::DirectedBipartite => {
                if k != 2 || sizes[0] < 2 {
                    return Err(Error::InvalidShape(format!(
                        "{kind} family needs two parts of size >= 2, got {shape}"
                    )));
                }
            }
        }
        Ok(Self { kind, shape })
    }

    pub fn simple(n: usize) -> Result<Self> {
        Self::new(FamilyKind::Simple, PartitionShape::new(vec![n])?)
    }

    pub fn directed(n: usize) -> Result<Self> {
        Self::new(FamilyKind::Directed, PartitionShape::new(vec![n])?)
    }

    pub fn kpartite(shape: PartitionShape) -> Result<Self> {
        Self::new(FamilyKind::KPartite, shape)
    }

    pub fn directed_kpartite(shape: PartitionShape) -> Result<Self> {
        Self::new(FamilyKind::DirectedKPartite, shape)
    }

    pub fn bipartite(shape: PartitionShape) -> Result<Self> {
        Self::new(FamilyKind::Bipartite, shape)
    }

    pub fn directed_bipartite(shape: PartitionShape) -> Result<Self> {
        Self::new(FamilyKind::DirectedBipartite, shape)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn shape(&self) -> &PartitionShape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.total()
    }

    pub fn is_directed(&self) -> bool {
        self.kind.is_directed()
    }

    pub fn target_diameter(&self) -> usize {
        self.kind.target_diameter()
    }

    /// Whether `u -> v` (or `{u, v}`) is a candidate edge.
    pub fn allows_edge(&self, u: usize, v: usize) -> bool {
        u != v && (!self.kind.is_partite() || self.shape.part_of(u) != self.shape.part_of(v))
    }

    /// Candidate edges in canonical order: lexicographic `(u, v)` with
    /// `u < v` for undirected families and `u != v` for directed ones.
    ///
    /// The position of an edge in this list is its identity in the sampling
    /// stream.
    pub fn candidate_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let part = self.shape.membership();
        let partite = self.kind.is_partite();
        let directed = self.is_directed();
        let mut edges = Vec::new();
        for u in 0..n {
            let start = if directed { 0 } else { u + 1 };
            for v in start..n {
                if u != v && (!partite || part[u] != part[v]) {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    pub fn edge_count(&self) -> usize {
        let n = self.n();
        let unordered = if self.kind.is_partite() {
            let same: usize = self.shape.sizes().iter().map(|s| s * (s - 1) / 2).sum();
            n * (n - 1) / 2 - same
        } else {
            n * (n - 1) / 2
        };
        if self.is_directed() {
            2 * unordered
        } else {
            unordered
        }
    }

    /// The vertex pairs whose "witnessed" status decides the target
    /// diameter.
    ///
    /// Diameter-2 families use every pair; bipartite families use pairs
    /// inside one part. Undirected families list each pair once as `(u, v)`
    /// with `u < v`; directed families list both orientations.
    pub fn witness_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let part = self.shape.membership();
        let same_part_only = self.kind.is_bipartite();
        let directed = self.is_directed();
        let mut pairs = Vec::new();
        for u in 0..n {
            let start = if directed { 0 } else { u + 1 };
            for v in start..n {
                if u != v && (!same_part_only || part[u] == part[v]) {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.shape)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &[usize]) -> PartitionShape {
        PartitionShape::new(s.to_vec()).unwrap()
    }

    #[test]
    fn target_diameter_follows_kind() {
        for kind in FamilyKind::ALL {
            let expected = if kind.is_bipartite() { 3 } else { 2 };
            assert_eq!(kind.target_diameter(), expected);
            assert_eq!(kind.name().parse::<FamilyKind>().unwrap(), kind);
        }
    }

    #[test]
    fn validity_rules() {
        assert!(GraphFamily::kpartite(shape(&[1, 2, 2])).is_ok());
        assert!(GraphFamily::kpartite(shape(&[1, 1, 2])).is_err());
        assert!(GraphFamily::kpartite(shape(&[2, 2])).is_err());
        assert!(GraphFamily::kpartite(shape(&[1, 1, 1, 2])).is_err());
        assert!(GraphFamily::bipartite(shape(&[2, 3])).is_ok());
        assert!(GraphFamily::bipartite(shape(&[1, 3])).is_err());
        assert!(GraphFamily::bipartite(shape(&[2, 2, 2])).is_err());
        assert!(GraphFamily::new(FamilyKind::Simple, shape(&[2, 2])).is_err());
    }

    #[test]
    fn candidate_edges_respect_parts() {
        let fam = GraphFamily::bipartite(shape(&[2, 3])).unwrap();
        let edges = fam.candidate_edges();
        assert_eq!(edges.len(), 6);
        assert_eq!(fam.edge_count(), 6);
        assert!(edges.iter().all(|&(u, v)| (u < 2) != (v < 2)));

        let fam = GraphFamily::directed_kpartite(shape(&[1, 2, 2])).unwrap();
        assert_eq!(fam.edge_count(), 2 * 8);
        assert_eq!(fam.candidate_edges().len(), 16);

        let fam = GraphFamily::simple(5).unwrap();
        assert_eq!(fam.candidate_edges().len(), 10);
        assert_eq!(fam.witness_pairs().len(), 10);
    }

    #[test]
    fn witness_pairs_per_kind() {
        let fam = GraphFamily::bipartite(shape(&[2, 3])).unwrap();
        assert_eq!(fam.witness_pairs(), vec![(0, 1), (2, 3), (2, 4), (3, 4)]);
        let fam = GraphFamily::directed_bipartite(shape(&[2, 2])).unwrap();
        assert_eq!(fam.witness_pairs(), vec![(0, 1), (1, 0), (2, 3), (3, 2)]);
        let fam = GraphFamily::directed(3).unwrap();
        assert_eq!(fam.witness_pairs().len(), 6);
    }
}
