use super::spmv_into;
use super::vecops::{axpy, dot, norm2};
use crate::error::{Error, NonConvergence, Result};
use crate::graph::Graph;

/// Solves `(I - alpha A) x = b` by conjugate gradients to relative residual
/// `tol`.
///
/// `I - alpha A` is positive definite exactly when `0 <= alpha < 1/lambda_1`
/// (for graphs with `lambda_min >= -lambda_1`). A non-positive curvature
/// `p'(I - alpha A)p` proves the constraint is violated and is reported as
/// [`Error::AlphaOutOfRange`].
pub fn cg_solve_resolvent(g: &Graph, alpha: f64, b: &[f64], tol: f64) -> Result<Vec<f64>> {
    let limit = (10 * g.num_nodes()).max(1000);
    cg_solve_resolvent_with_limit(g, alpha, b, tol, limit)
}

pub fn cg_solve_resolvent_with_limit(
    g: &Graph,
    alpha: f64,
    b: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<Vec<f64>> {
    let n = g.num_nodes();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.len(),
        });
    }
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(Error::AlphaOutOfRange {
            alpha,
            lambda1: None,
        });
    }
    if !(tol > 0.0) {
        return Err(Error::invalid(format!(
            "CG tolerance must be positive, got {tol}"
        )));
    }
    if alpha == 0.0 {
        return Ok(b.to_vec());
    }
    let b_norm = norm2(b);
    let mut x = vec![0.0; n];
    if b_norm == 0.0 {
        return Ok(x);
    }

    let mut r = b.to_vec();
    let mut p = r.clone();
    let mut ap = vec![0.0; n];
    let mut rs = dot(&r, &r);
    for _ in 0..max_iter {
        spmv_into(g, &p, &mut ap);
        for (api, pi) in ap.iter_mut().zip(&p) {
            *api = pi - alpha * *api;
        }
        let curvature = dot(&p, &ap);
        if !(curvature > 0.0) {
            return Err(Error::AlphaOutOfRange {
                alpha,
                lambda1: None,
            });
        }
        let step = rs / curvature;
        axpy(step, &p, &mut x);
        axpy(-step, &ap, &mut r);
        let rs_new = dot(&r, &r);
        if rs_new.sqrt() <= tol * b_norm {
            return Ok(x);
        }
        let ratio = rs_new / rs;
        for (pi, ri) in p.iter_mut().zip(&r) {
            *pi = ri + ratio * *pi;
        }
        rs = rs_new;
    }
    Err(NonConvergence {
        method: "conjugate gradients on (I - alpha A)",
        iterations: max_iter,
        achieved: rs.sqrt() / b_norm,
        tolerance: tol,
        last_iterate: x,
    }
    .into())
}
