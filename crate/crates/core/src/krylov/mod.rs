//! Matrix-function kernels for symmetric adjacency matrices.
//!
//! Everything here touches the graph only through [`spmv`]. The pieces are:
//!
//! * [`lanczos`]: Lanczos tridiagonalization with full reorthogonalization.
//! * [`expm_multiply`]: `exp(beta*A) v` by restarted Lanczos. Each cycle
//!   appends its tridiagonal block to a growing block-bidiagonal matrix `H`.
//!   The cycle's correction is the trailing block of `exp(beta*H) e1`.
//!   Iteration stops when the correction is small relative to the result.
//! * [`quadrature_diag`]: Gauss-rule estimate `e1' f(T_k) e1` of a diagonal
//!   entry `f(A)_ii`, from `k` Lanczos steps started at `e_i`.
//! * [`dominant_eigs`]: `lambda_1`, `lambda_2` and the Perron vector.
//! * [`cg_solve_resolvent`]: conjugate gradients on `(I - alpha*A) x = b`.
//! * [`dense_oracle`]: full eigendecomposition reference for small graphs.

mod cg;
mod dense;
mod eigs;
mod expm;
mod lanczos;
mod quadrature;
mod tridiag;
pub(crate) mod vecops;

pub use cg::{cg_solve_resolvent, cg_solve_resolvent_with_limit};
pub use dense::{dense_oracle, dense_oracle_with_cap, DenseSpectrum, DEFAULT_DENSE_CAP};
pub use eigs::{dominant_eigs, dominant_eigs_with_limit, SpectralEstimate};
pub use expm::expm_multiply;
pub use lanczos::{lanczos, LanczosDecomposition};
pub use quadrature::{quadrature_diag, quadrature_diag_all};
pub use tridiag::{tridiagonal_eigen, SymTridiagEigen};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Settings shared by the Krylov kernels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KrylovConfig {
    /// Lanczos steps per restart cycle of [`expm_multiply`].
    pub restart_length: usize,
    pub max_restarts: usize,
    /// Stop when a cycle's correction norm is below `tolerance * |result|`.
    pub tolerance: f64,
    /// Lanczos steps per node for Gauss-rule diagonal estimates.
    pub quadrature_steps: usize,
}

impl Default for KrylovConfig {
    fn default() -> Self {
        KrylovConfig {
            restart_length: 10,
            max_restarts: 50,
            tolerance: 1e-12,
            quadrature_steps: 5,
        }
    }
}

impl KrylovConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restart_length == 0 || self.max_restarts == 0 || self.quadrature_steps == 0 {
            return Err(Error::invalid(
                "restart_length, max_restarts and quadrature_steps must be positive",
            ));
        }
        if !(self.tolerance > 0.0 && self.tolerance < 1.0) {
            return Err(Error::invalid(format!(
                "tolerance must lie in (0, 1), got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

/// Scalar function applied to the adjacency spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MatrixFunction {
    /// `exp(beta * x)`
    Exp { beta: f64 },
    /// `1 / (1 - alpha * x)`
    Resolvent { alpha: f64 },
}

impl MatrixFunction {
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            MatrixFunction::Exp { beta } => (beta * x).exp(),
            MatrixFunction::Resolvent { alpha } => 1.0 / (1.0 - alpha * x),
        }
    }
}

const PARALLEL_SPMV_THRESHOLD: usize = 50_000;

/// `y = A x`.
pub fn spmv(g: &Graph, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != g.num_nodes() {
        return Err(Error::DimensionMismatch {
            expected: g.num_nodes(),
            found: x.len(),
        });
    }
    let mut y = vec![0.0; x.len()];
    spmv_into(g, x, &mut y);
    Ok(y)
}

/// Unchecked `y = A x`; rows are summed in column order, so the result does
/// not depend on how rows are split across threads.
pub(crate) fn spmv_into(g: &Graph, x: &[f64], y: &mut [f64]) {
    let row = |i: usize| g.neighbors(i).iter().map(|&j| x[j]).sum::<f64>();
    if y.len() >= PARALLEL_SPMV_THRESHOLD {
        y.par_iter_mut()
            .enumerate()
            .for_each(|(i, yi)| *yi = row(i));
    } else {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = row(i);
        }
    }
}
