//! Random-graph diameter laboratory.
//!
//! The crate brackets the probability that a random graph has small diameter
//! (at most 2, or at most 3 for bipartite graphs) in three independent ways:
//!
//! * [`bounds`]: closed-form lower/upper bounds obtained from the simple sieve
//!   and the Turán sieve, evaluated in log space so that they stay finite for
//!   large `n`;
//! * [`sieve`]: the same two sieves evaluated exactly over rationals, from
//!   exact incidence statistics of the "unwitnessed pair" system;
//! * [`oracle`] and [`montecarlo`]: ground truth, by exhaustive weighted
//!   enumeration at desk scale and by reproducible parallel sampling at large
//!   scale.
//!
//! Graph families, sampling and diameter predicates live in [`graph`].

pub mod bounds;
pub mod error;
pub mod graph;
pub mod montecarlo;
pub mod oracle;
pub mod rational;
pub mod sieve;

pub use error::{Error, ErrorClass, Result};
