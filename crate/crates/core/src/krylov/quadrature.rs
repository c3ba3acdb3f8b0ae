use rayon::prelude::*;

use super::lanczos::LanczosProcess;
use super::tridiag::tridiagonal_eigen;
use super::{KrylovConfig, MatrixFunction};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Gauss-rule estimate of `f(A)_ii`.
///
/// Runs `cfg.quadrature_steps` Lanczos steps from `e_i` (fewer if the
/// Krylov space closes earlier, in which case the estimate is exact) and
/// returns `e1' f(T_k) e1`.
pub fn quadrature_diag(g: &Graph, i: usize, f: MatrixFunction, cfg: &KrylovConfig) -> Result<f64> {
    let n = g.num_nodes();
    if i >= n {
        return Err(Error::invalid(format!("node {i} out of range 0..{n}")));
    }
    if cfg.quadrature_steps == 0 {
        return Err(Error::invalid("quadrature_steps must be positive"));
    }
    let mut e_i = vec![0.0; n];
    e_i[i] = 1.0;
    let mut process = LanczosProcess::new(g, &e_i, Vec::new())?;
    while process.steps() < cfg.quadrature_steps && process.step() {}
    let k = process.steps();
    let eig = tridiagonal_eigen(&process.alpha, &process.beta[..k - 1]);
    Ok(eig.quadratic_form_e1(|x| f.eval(x)))
}

/// [`quadrature_diag`] for every node, computed in parallel. Each entry is
/// produced independently, so the output does not depend on scheduling.
pub fn quadrature_diag_all(g: &Graph, f: MatrixFunction, cfg: &KrylovConfig) -> Result<Vec<f64>> {
    (0..g.num_nodes())
        .into_par_iter()
        .map(|i| quadrature_diag(g, i, f, cfg))
        .collect()
}
