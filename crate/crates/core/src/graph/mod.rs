//! Graph families, random generation and diameter predicates.

mod family;
mod matrix;
mod predicates;
mod sample;
mod shape;

pub use family::{FamilyKind, GraphFamily};
pub use matrix::AdjacencyMatrix;
pub use predicates::{
    bipartite_has_diameter_le3, directed_has_diameter_le2, graph_diameter, has_diameter_le2,
    meets_target_diameter, Diameter,
};
pub use sample::sample_graph;
pub use shape::PartitionShape;
