use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Part sizes of a vertex partition, kept in non-decreasing order.
///
/// Vertices are laid out contiguously part by part: part `i` owns the
/// vertex range `offset(i)..offset(i) + sizes[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionShape {
    sizes: Vec<usize>,
}

impl PartitionShape {
    /// Builds a shape from part sizes given in any order.
    pub fn new(sizes: impl Into<Vec<usize>>) -> Result<Self> {
        let mut sizes = sizes.into();
        if sizes.is_empty() {
            return Err(Error::InvalidShape("a shape needs at least one part".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidShape(format!(
                "part sizes must be positive, got {sizes:?}"
            )));
        }
        sizes.sort_unstable();
        Ok(Self { sizes })
    }

    /// Same as [`PartitionShape::new`] but accepts signed input, rejecting
    /// non-positive sizes.
    pub fn from_signed(sizes: &[i64]) -> Result<Self> {
        if let Some(bad) = sizes.iter().find(|&&s| s <= 0) {
            return Err(Error::InvalidShape(format!(
                "part sizes must be positive, got {bad}"
            )));
        }
        Self::new(sizes.iter().map(|&s| s as usize).collect::<Vec<_>>())
    }

    /// The Turán partition of `n` vertices into `k` parts whose sizes differ by
    /// at most one.
    pub fn turan(n: usize, k: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::InvalidArgument(format!(
                "Turán partition needs 1 <= k <= n, got n={n}, k={k}"
            )));
        }
        let base = n / k;
        let larger = n % k;
        let sizes = (0..k)
            .map(|i| if i < k - larger { base } else { base + 1 })
            .collect::<Vec<_>>();
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of parts `k`.
    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    /// Total vertex count `n`.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `i`-th largest part size, counting from 1 (`largest(1)` is `n_k`).
    pub fn largest(&self, i: usize) -> Option<usize> {
        let k = self.sizes.len();
        if i == 0 || i > k {
            None
        } else {
            Some(self.sizes[k - i])
        }
    }

    pub fn is_turan(&self) -> bool {
        self.sizes.last().unwrap() - self.sizes[0] <= 1
    }

    pub fn offset(&self, part: usize) -> usize {
        self.sizes[..part].iter().sum()
    }

    pub fn part_range(&self, part: usize) -> Range<usize> {
        let start = self.offset(part);
        start..start + self.sizes[part]
    }

    /// Index of the part containing `vertex`.
    pub fn part_of(&self, vertex: usize) -> usize {
        let mut end = 0;
        for (i, &s) in self.sizes.iter().enumerate() {
            end += s;
            if vertex < end {
                return i;
            }
        }
        panic!("vertex {vertex} out of range for shape {self}");
    }

    /// Part index of every vertex, in vertex order.
    pub fn membership(&self) -> Vec<usize> {
        self.sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
            .collect()
    }
}

impl fmt::Display for PartitionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for PartitionShape {
    type Err = Error;

    /// Parses comma-separated sizes such as `"2,2,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidShape(format!("bad part size {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_signed(&sizes)
    }
}
