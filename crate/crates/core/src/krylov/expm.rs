use nalgebra::DMatrix;

use super::lanczos::LanczosProcess;
use super::vecops::{axpy, norm2};
use super::KrylovConfig;
use crate::error::{Error, NonConvergence, Result};
use crate::graph::Graph;

/// Approximates `exp(beta * A) v` with restarted Lanczos.
///
/// Each cycle runs `restart_length` Lanczos steps from the previous cycle's
/// residual vector. The tridiagonal blocks, coupled by the residual norms,
/// form a block lower-bidiagonal `H`. The cycle's correction is
/// `|v| V_c [exp(beta H) e1]_c`, with `c` the rows of the newest block.
/// Earlier rows of `exp(beta H) e1` do not change when a block is appended.
/// The loop ends once the correction norm drops below
/// `tolerance * |result|`, or when a cycle hits an invariant subspace.
pub fn expm_multiply(g: &Graph, v: &[f64], beta: f64, cfg: &KrylovConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::invalid(format!(
            "beta must be positive and finite, got {beta}"
        )));
    }
    let n = g.num_nodes();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    let v_norm = norm2(v);
    if !(v_norm > 0.0) {
        return Err(Error::invalid("expm_multiply needs a nonzero vector"));
    }

    let mut result = vec![0.0; n];
    let mut h = DMatrix::<f64>::zeros(0, 0);
    let mut start = v.to_vec();
    let mut coupling = 0.0;
    let mut achieved = f64::INFINITY;

    for _ in 0..cfg.max_restarts {
        let mut process = LanczosProcess::new(g, &start, Vec::new())?;
        while process.steps() < cfg.restart_length && process.step() {}
        let m = process.steps();

        let offset = h.nrows();
        let mut grown = DMatrix::<f64>::zeros(offset + m, offset + m);
        grown.view_mut((0, 0), (offset, offset)).copy_from(&h);
        if offset > 0 {
            grown[(offset, offset - 1)] = coupling;
        }
        for j in 0..m {
            grown[(offset + j, offset + j)] = process.alpha[j];
            if j + 1 < m {
                grown[(offset + j, offset + j + 1)] = process.beta[j];
                grown[(offset + j + 1, offset + j)] = process.beta[j];
            }
        }
        h = grown;

        let e = (&h * beta).exp();
        let mut correction = vec![0.0; n];
        for j in 0..m {
            axpy(
                v_norm * e[(offset + j, 0)],
                &process.basis[j],
                &mut correction,
            );
        }
        axpy(1.0, &correction, &mut result);

        let result_norm = norm2(&result);
        achieved = if result_norm > 0.0 {
            norm2(&correction) / result_norm
        } else {
            f64::INFINITY
        };
        if !achieved.is_finite() && !result_norm.is_finite() {
            break;
        }
        if process.invariant || achieved <= cfg.tolerance {
            return Ok(result);
        }
        coupling = process.beta[m - 1];
        start = process
            .next
            .take()
            .expect("non-invariant Lanczos leaves a next vector");
    }

    Err(NonConvergence {
        method: "restarted Lanczos exp(A)v",
        iterations: cfg.max_restarts,
        achieved,
        tolerance: cfg.tolerance,
        last_iterate: result,
    }
    .into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_pref, generate_reference, ReferenceKind};
    use crate::krylov::dense_oracle;
    use crate::krylov::MatrixFunction;

    fn rel_inf_err(a: &[f64], b: &[f64]) -> f64 {
        let num = a
            .iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        let den = b.iter().map(|y| y.abs()).fold(0.0, f64::max);
        num / den
    }

    #[test]
    fn ring_is_exact_eigenvector() {
        let ring = generate_reference(ReferenceKind::RingLattice, 5000, Some(1)).unwrap();
        let y = expm_multiply(&ring, &vec![1.0; 5000], 1.0, &KrylovConfig::default()).unwrap();
        let e2 = 2f64.exp();
        assert!(y.iter().all(|&yi| (yi - e2).abs() < 1e-12 * e2));
    }

    #[test]
    fn complete_graph_closed_form() {
        let k6 = generate_reference(ReferenceKind::Complete, 6, None).unwrap();
        let y = expm_multiply(&k6, &[1.0; 6], 1.0, &KrylovConfig::default()).unwrap();
        let e5 = 5f64.exp();
        assert!(y.iter().all(|&yi| (yi - e5).abs() < 1e-12 * e5));
    }

    #[test]
    fn matches_dense_oracle_with_restarts() {
        let g = generate_pref(400, 3, 2).unwrap();
        let cfg = KrylovConfig::default();
        let ones = vec![1.0; 400];
        let y = expm_multiply(&g, &ones, 1.0, &cfg).unwrap();
        let dense = dense_oracle(&g, MatrixFunction::Exp { beta: 1.0 }).unwrap();
        let expect: Vec<f64> = (0..400).map(|i| dense.row(i).sum()).collect();
        assert!(rel_inf_err(&y, &expect) <= 1e-8);

        let y_half = expm_multiply(&g, &ones, 0.5, &cfg).unwrap();
        let dense = dense_oracle(&g, MatrixFunction::Exp { beta: 0.5 }).unwrap();
        let expect: Vec<f64> = (0..400).map(|i| dense.row(i).sum()).collect();
        assert!(rel_inf_err(&y_half, &expect) <= 1e-8);
    }

    #[test]
    fn non_convergence_reports_last_iterate() {
        let g = generate_pref(400, 5, 2).unwrap();
        let cfg = KrylovConfig {
            restart_length: 2,
            max_restarts: 2,
            ..Default::default()
        };
        match expm_multiply(&g, &vec![1.0; 400], 1.0, &cfg) {
            Err(Error::NonConvergence(nc)) => {
                assert_eq!(nc.last_iterate.len(), 400);
                assert!(nc.achieved > nc.tolerance);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        let g = generate_reference(ReferenceKind::Path, 3, None).unwrap();
        let cfg = KrylovConfig::default();
        assert!(expm_multiply(&g, &[0.0; 3], 1.0, &cfg).is_err());
        assert!(expm_multiply(&g, &[1.0; 2], 1.0, &cfg).is_err());
        assert!(expm_multiply(&g, &[1.0; 3], 0.0, &cfg).is_err());
    }
}
