//! Deterministic synthetic graph families.
//!
//! All random generators draw from ChaCha8 seeded with `seed_from_u64`, so a
//! `(parameters, seed)` pair always yields the same edge set on every
//! platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Identifier of the pseudo-random generator behind every stochastic
/// operation (recorded in generation metadata).
pub const RNG_ALGORITHM: &str = "chacha8 (rand_chacha 0.9, seed_from_u64)";

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Scale-free graph grown by preferential attachment.
///
/// Starts from a clique on nodes `0..=d`; every later node attaches to `d`
/// distinct existing nodes chosen with probability proportional to degree.
/// The minimum degree of the result is `d`.
pub fn generate_pref(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d == 0 || n <= d {
        return Err(Error::invalid(format!(
            "pref requires n > d >= 1 (got n = {n}, d = {d})"
        )));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::with_capacity(d * (d + 1) / 2 + (n - d - 1) * d);
    // Every edge contributes both endpoints, so a uniform draw from this list
    // picks a node with probability proportional to its degree.
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * edges.capacity());
    for i in 0..=d {
        for j in (i + 1)..=d {
            edges.push((i, j));
            endpoints.extend([i, j]);
        }
    }
    let mut targets = Vec::with_capacity(d);
    for v in (d + 1)..n {
        targets.clear();
        while targets.len() < d {
            let t = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            endpoints.extend([t, v]);
        }
    }
    Graph::from_edges(n, edges)
}

/// Watts–Strogatz style small world: a ring lattice where each node links to
/// its `d` nearest neighbours on either side, plus, for each node
/// independently with probability `p`, one shortcut to a uniformly chosen
/// node. Loops and repeated edges are dropped.
pub fn generate_smallw(n: usize, d: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!(
            "shortcut probability p = {p} is outside [0, 1]"
        )));
    }
    let mut edges = ring_edges(n, d)?;
    let mut rng = rng(seed);
    for i in 0..n {
        if rng.random::<f64>() < p {
            let j = rng.random_range(0..n);
            if j != i {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn ring_edges(n: usize, d: usize) -> Result<Vec<(usize, usize)>> {
    if d == 0 || n <= 2 * d {
        return Err(Error::invalid(format!(
            "ring lattice requires d >= 1 and n > 2d (got n = {n}, d = {d})"
        )));
    }
    Ok((0..n)
        .flat_map(|i| (1..=d).map(move |k| (i, (i + k) % n)))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceKind {
    Complete,
    Star,
    Path,
    Cycle,
    RingLattice,
}

/// Small deterministic graphs with known spectra. `d` is the ring radius and
/// is only read for [`ReferenceKind::RingLattice`] (default 1).
pub fn generate_reference(kind: ReferenceKind, n: usize, d: Option<usize>) -> Result<Graph> {
    let min_n = if kind == ReferenceKind::Cycle { 3 } else { 2 };
    if n < min_n {
        return Err(Error::invalid(format!(
            "{kind:?} graph requires n >= {min_n} (got {n})"
        )));
    }
    let edges: Vec<(usize, usize)> = match kind {
        ReferenceKind::Complete => (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect(),
        ReferenceKind::Star => (1..n).map(|j| (0, j)).collect(),
        ReferenceKind::Path => (1..n).map(|j| (j - 1, j)).collect(),
        ReferenceKind::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        ReferenceKind::RingLattice => ring_edges(n, d.unwrap_or(1))?,
    };
    Graph::from_edges(n, edges)
}
