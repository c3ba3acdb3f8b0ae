//! Exact walk counts and truncated power series for small graphs.
//!
//! `(A^k)_ij` counts walks of length `k` from `i` to `j`. The counts grow
//! like `lambda_1^k`, so they are kept as arbitrary-precision integers and
//! only converted to `f64` when weighted into a series. This gives an
//! independent check of the Krylov and dense paths on graphs of up to
//! [`REFERENCE_CAP`] nodes.

use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::krylov::DenseSpectrum;

pub const REFERENCE_CAP: usize = 200;

fn check_size(g: &Graph) -> Result<usize> {
    let n = g.num_nodes();
    if n > REFERENCE_CAP {
        return Err(Error::TooLarge {
            n,
            cap: REFERENCE_CAP,
        });
    }
    Ok(n)
}

/// Walks `A^k` for successive `k`, starting from `A^0 = I`.
struct Powers<'a> {
    g: &'a Graph,
    current: Vec<Vec<BigUint>>,
}

impl<'a> Powers<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.num_nodes();
        let current = (0..n)
            .map(|i| {
                let mut row = vec![BigUint::zero(); n];
                row[i] = BigUint::from(1u8);
                row
            })
            .collect();
        Powers { g, current }
    }

    fn advance(&mut self) {
        let n = self.g.num_nodes();
        self.current = self
            .current
            .iter()
            .map(|row| {
                (0..n)
                    .map(|j| self.g.neighbors(j).iter().map(|&l| &row[l]).sum())
                    .collect()
            })
            .collect();
    }
}

/// Closed walks and walks leaving each node, for lengths `0..=k_max`.
#[derive(Debug, Clone)]
pub struct WalkTable {
    closed: Vec<Vec<BigUint>>,
    from_node: Vec<Vec<BigUint>>,
}

impl WalkTable {
    pub fn max_length(&self) -> usize {
        self.closed.len() - 1
    }

    /// `(A^k)_ii`.
    pub fn closed_walks(&self, k: usize, i: usize) -> &BigUint {
        &self.closed[k][i]
    }

    /// `(A^k 1)_i`.
    pub fn walks_from(&self, k: usize, i: usize) -> &BigUint {
        &self.from_node[k][i]
    }

    /// `trace(A^k)`.
    pub fn trace(&self, k: usize) -> BigUint {
        self.closed[k].iter().sum()
    }

    /// `1' A^k 1`.
    pub fn total_walks(&self, k: usize) -> BigUint {
        self.from_node[k].iter().sum()
    }
}

pub fn walk_table(g: &Graph, k_max: usize) -> Result<WalkTable> {
    let n = check_size(g)?;
    let mut powers = Powers::new(g);
    let mut closed = Vec::with_capacity(k_max + 1);
    let mut from_node = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        if k > 0 {
            powers.advance();
        }
        closed.push((0..n).map(|i| powers.current[i][i].clone()).collect());
        from_node.push(powers.current.iter().map(|row| row.iter().sum()).collect());
    }
    Ok(WalkTable { closed, from_node })
}

/// `w * count` without overflowing when `count` alone exceeds `f64::MAX`.
fn weighted(w: f64, count: &BigUint) -> f64 {
    let bits = count.bits();
    if bits <= 1000 {
        return w * count.to_f64().expect("fits in f64");
    }
    if w == 0.0 {
        return 0.0;
    }
    let shift = bits - 64;
    let top = (count >> shift).to_f64().expect("64-bit value");
    w.signum() * (w.abs().ln() + top.ln() + shift as f64 * std::f64::consts::LN_2).exp()
}

fn weighted_series(g: &Graph, k_max: usize, weight: impl Fn(usize) -> f64) -> Result<DMatrix<f64>> {
    let n = check_size(g)?;
    let mut out = DMatrix::<f64>::zeros(n, n);
    let mut powers = Powers::new(g);
    for k in 0..=k_max {
        if k > 0 {
            powers.advance();
        }
        let w = weight(k);
        for (i, row) in powers.current.iter().enumerate() {
            for (j, count) in row.iter().enumerate() {
                if !count.is_zero() {
                    out[(i, j)] += weighted(w, count);
                }
            }
        }
    }
    Ok(out)
}

/// `sum_{k=0..k_max} beta^k A^k / k!`.
pub fn truncated_exp_series(g: &Graph, beta: f64, k_max: usize) -> Result<DMatrix<f64>> {
    let mut weights = Vec::with_capacity(k_max + 1);
    let mut w = 1.0;
    for k in 0..=k_max {
        if k > 0 {
            w *= beta / k as f64;
        }
        weights.push(w);
    }
    weighted_series(g, k_max, |k| weights[k])
}

/// `sum_{k=0..k_max} alpha^k A^k`; requires `0 <= alpha < 1/lambda_1`.
pub fn truncated_resolvent_series(g: &Graph, alpha: f64, k_max: usize) -> Result<DMatrix<f64>> {
    check_size(g)?;
    let lambda1 = DenseSpectrum::new(g, REFERENCE_CAP)?.lambda_max().max(0.0);
    if !(alpha >= 0.0) || alpha * lambda1 >= 1.0 {
        return Err(Error::AlphaOutOfRange {
            alpha,
            lambda1: Some(lambda1),
        });
    }
    weighted_series(g, k_max, |k| alpha.powi(k as i32))
}
