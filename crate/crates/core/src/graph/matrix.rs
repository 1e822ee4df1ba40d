use crate::error::{Error, Result};

const WORD: usize = 64;

/// Dense bit-matrix adjacency.
///
/// Row `u` holds the out-neighbours of `u`. Directed matrices additionally
/// keep in-neighbour rows so that "is there a 2-step path `u -> w -> v`" is a
/// row AND. Row width is a whole number of 64-bit words; the padding bits
/// past `n` are always zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    words: usize,
    directed: bool,
    out_rows: Vec<u64>,
    in_rows: Vec<u64>,
}

impl AdjacencyMatrix {
    pub fn empty(n: usize, directed: bool) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Self {
            n,
            words,
            directed,
            out_rows: vec![0; n * words],
            in_rows: if directed { vec![0; n * words] } else { Vec::new() },
        }
    }

    pub fn complete(n: usize, directed: bool) -> Self {
        let mut g = Self::empty(n, directed);
        for u in 0..n {
            for v in 0..n {
                if u != v && (directed || u < v) {
                    g.insert(u, v);
                }
            }
        }
        g.debug_check();
        g
    }

    /// Builds a graph from an edge list. Undirected edges may be given in
    /// either orientation.
    pub fn from_edges(n: usize, directed: bool, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n, directed);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.insert(u, v);
        }
        g.debug_check();
        Ok(g)
    }

    /// A copy of this graph with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidArgument(format!("cannot add edge ({u},{v})")));
        }
        let mut g = self.clone();
        g.insert(u, v);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Out-neighbour bits of `u`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.out_rows[u * self.words..(u + 1) * self.words]
    }

    /// In-neighbour bits of `v`; same as [`row`](Self::row) when undirected.
    #[inline]
    pub fn in_row(&self, v: usize) -> &[u64] {
        if self.directed {
            &self.in_rows[v * self.words..(v + 1) * self.words]
        } else {
            self.row(v)
        }
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    /// Number of edges (arcs when directed).
    pub fn edge_count(&self) -> usize {
        let bits: usize = self.out_rows.iter().map(|w| w.count_ones() as usize).sum();
        if self.directed {
            bits
        } else {
            bits / 2
        }
    }

    /// Sets edge `u -> v` (and `v -> u` when undirected).
    #[inline]
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.out_rows[u * w + v / WORD] |= 1 << (v % WORD);
        if self.directed {
            self.in_rows[v * w + u / WORD] |= 1 << (u % WORD);
        } else {
            self.out_rows[v * w + u / WORD] |= 1 << (u % WORD);
        }
    }

    /// Flips edge `u -> v` (and `v -> u` when undirected).
    #[inline]
    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.out_rows[u * w + v / WORD] ^= 1 << (v % WORD);
        if self.directed {
            self.in_rows[v * w + u / WORD] ^= 1 << (u % WORD);
        } else {
            self.out_rows[v * w + u / WORD] ^= 1 << (u % WORD);
        }
    }

    pub(crate) fn debug_check(&self) {
        if cfg!(debug_assertions) {
            let tail = self.n % WORD;
            if tail != 0 {
                let mask = !0u64 << tail;
                for u in 0..self.n {
                    debug_assert_eq!(self.row(u)[self.words - 1] & mask, 0, "padding bits set");
                    debug_assert_eq!(self.in_row(u)[self.words - 1] & mask, 0, "padding bits set");
                }
            }
            for u in 0..self.n {
                debug_assert!(!self.has_edge(u, u), "self-loop at {u}");
            }
        }
    }
}

#[inline]
pub(crate) fn rows_intersect(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}
