//! Undirected, unweighted graphs stored as a symmetric binary CSR pattern.
//!
//! A [`Graph`] is immutable once built. Every constructor goes through
//! [`Graph::from_edges`], which symmetrizes, deduplicates and sorts the
//! pattern, so two graphs with the same edge set are structurally identical.

mod generators;
mod io;

pub use generators::{
    generate_pref, generate_reference, generate_smallw, ReferenceKind, RNG_ALGORITHM,
};
pub use io::{load_edge_list, load_edge_list_sized, load_matrix_market, write_canonical};

use crate::error::{Error, Result};

/// Symmetric 0/1 adjacency pattern in compressed sparse row layout.
///
/// Node ids are 0-based. Column indices are sorted within each row. A self
/// loop `(i, i)` is stored once in row `i` and counts once toward `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    m: usize,
    loops: usize,
}

impl Graph {
    /// Builds a graph from an arbitrary list of undirected edges.
    ///
    /// Each `(u, v)` is inserted in both directions; duplicates (in either
    /// orientation) collapse to one edge. `(i, i)` becomes a self loop.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) references a node outside 0..{n}"
                )));
            }
            pairs.push((u, v));
            if u != v {
                pairs.push((v, u));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut row_ptr = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            row_ptr[u + 1] += 1;
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        let col_idx: Vec<usize> = pairs.iter().map(|&(_, v)| v).collect();
        let loops = pairs.iter().filter(|(u, v)| u == v).count();
        let m = (pairs.len() - loops) / 2 + loops;

        Ok(Graph {
            n,
            row_ptr,
            col_idx,
            m,
            loops,
        })
    }

    /// `n` isolated nodes (adjacency matrix `A = 0`).
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            row_ptr: vec![0; n + 1],
            col_idx: Vec::new(),
            m: 0,
            loops: 0,
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.n
    }

    /// Undirected edge count; loops count once.
    pub fn num_edges(&self) -> usize {
        self.m
    }

    /// Stored entries of the full symmetric matrix (`2m - loops`).
    pub fn nnz(&self) -> usize {
        self.col_idx.len()
    }

    pub fn has_loops(&self) -> bool {
        self.loops > 0
    }

    pub fn num_loops(&self) -> usize {
        self.loops
    }

    /// Sorted neighbours of `i`, including `i` itself when it carries a loop.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.col_idx[self.row_ptr[i]..self.row_ptr[i + 1]]
    }

    pub fn row_ptr(&self) -> &[usize] {
        &self.row_ptr
    }

    pub fn col_idx(&self) -> &[usize] {
        &self.col_idx
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.neighbors(i).binary_search(&j).is_ok()
    }

    /// Canonical edge list: `u <= v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v >= u)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence {
            degrees: (0..self.n).map(|i| self.neighbors(i).len()).collect(),
        }
    }

    /// True when every node can reach every other node.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Checks the structural invariants (symmetry, sorted unique columns,
    /// edge/loop bookkeeping). Used by tests and after deserialization.
    pub fn validate(&self) -> Result<()> {
        if self.row_ptr.len() != self.n + 1 || self.row_ptr[self.n] != self.col_idx.len() {
            return Err(Error::invalid("row pointer array is inconsistent"));
        }
        let mut loops = 0;
        for i in 0..self.n {
            let row = self.neighbors(i);
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid(format!("row {i} is not strictly sorted")));
            }
            for &j in row {
                if j == i {
                    loops += 1;
                } else if !self.has_edge(j, i) {
                    return Err(Error::invalid(format!("entry ({i}, {j}) has no mirror")));
                }
            }
        }
        if loops != self.loops || (self.nnz() - loops) / 2 + loops != self.m {
            return Err(Error::invalid("edge count bookkeeping is inconsistent"));
        }
        Ok(())
    }
}

/// Per-node degree; a loop contributes one to its node's degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    pub degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn min(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Node with the largest degree; the lowest id wins ties.
    pub fn argmax(&self) -> Option<usize> {
        let max = self.max();
        self.degrees.iter().position(|&d| d == max)
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        if self.degrees.is_empty() {
            0.0
        } else {
            self.total() as f64 / self.degrees.len() as f64
        }
    }

    /// `histogram[k]` is the number of nodes of degree `k`.
    pub fn histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.max() + 1];
        for &d in &self.degrees {
            h[d] += 1;
        }
        h
    }
}
