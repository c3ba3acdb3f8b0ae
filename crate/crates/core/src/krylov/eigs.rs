use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::lanczos::LanczosProcess;
use super::tridiag::tridiagonal_eigen;
use super::vecops::{axpy, norm2, scale};
use crate::error::{Error, Result};
use crate::graph::Graph;

const START_SEED: u64 = 0x5eed_1a4c;
const DEFLATED_SEED: u64 = 0x5eed_1a4d;
const DEFAULT_MAX_STEPS: usize = 300;
const CHECK_EVERY: usize = 5;

/// Two largest adjacency eigenvalues and the Perron vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralEstimate {
    pub lambda1: f64,
    /// `None` for a single-node graph.
    pub lambda2: Option<f64>,
    /// Unit-norm eigenvector for `lambda1`, oriented to a nonnegative sum.
    pub v1: Vec<f64>,
    pub converged: bool,
    /// Total Lanczos steps over both phases.
    pub iterations: usize,
    /// `lambda1 == lambda2` to working accuracy (e.g. disconnected graphs
    /// with two copies of the same component); `v1` is then one vector
    /// from a multidimensional eigenspace and need not be nonnegative.
    pub degenerate: bool,
}

impl SpectralEstimate {
    pub fn spectral_gap(&self) -> Option<f64> {
        self.lambda2.map(|l2| self.lambda1 - l2)
    }
}

struct Ritz {
    value: f64,
    vector: Vec<f64>,
    converged: bool,
    steps: usize,
}

fn seeded_start(n: usize, seed: u64, positive: bool) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            if positive {
                rng.random_range(0.5..1.5)
            } else {
                rng.random_range(-1.0..1.0)
            }
        })
        .collect()
}

/// Largest Ritz pair of `A` restricted to the complement of `deflate`.
/// `scale_floor` keeps the relative test meaningful when the target is 0.
fn largest_ritz(
    g: &Graph,
    start: &[f64],
    deflate: Vec<Vec<f64>>,
    tol: f64,
    max_steps: usize,
    scale_floor: f64,
) -> Result<Ritz> {
    let mut process = LanczosProcess::new(g, start, deflate)?;
    loop {
        if !process.step() {
            unreachable!("step only fails after an invariant step, which returns below");
        }
        let k = process.steps();
        if !(process.invariant || k % CHECK_EVERY == 0 || k >= max_steps) {
            continue;
        }
        let eig = tridiagonal_eigen(&process.alpha, &process.beta[..k - 1]);
        let value = eig.eigenvalues[k - 1];
        let z_last = eig.last_row()[k - 1];
        let residual = if process.invariant {
            0.0
        } else {
            process.beta[k - 1] * z_last.abs()
        };
        let converged = residual <= tol * value.abs().max(scale_floor);
        if converged || k >= max_steps {
            let n = g.num_nodes();
            let mut vector = vec![0.0; n];
            for (j, q) in process.basis.iter().enumerate() {
                axpy(eig.vectors[j][k - 1], q, &mut vector);
            }
            let nrm = norm2(&vector);
            scale(1.0 / nrm, &mut vector);
            return Ok(Ritz {
                value,
                vector,
                converged,
                steps: k,
            });
        }
    }
}

/// `lambda_1`, `lambda_2` and `v_1` by Lanczos with full reorthogonalization.
///
/// `lambda_1` comes from a run started at a fixed seeded positive vector.
/// `lambda_2` is the largest eigenvalue of `A` on the orthogonal complement
/// of `v_1`, from a second run deflated against `v_1`. A repeated
/// `lambda_1` therefore shows up as `lambda_2 == lambda_1` instead of being
/// skipped. `tol` bounds the relative Ritz residual.
pub fn dominant_eigs(g: &Graph, tol: f64) -> Result<SpectralEstimate> {
    dominant_eigs_with_limit(g, tol, DEFAULT_MAX_STEPS)
}

pub fn dominant_eigs_with_limit(g: &Graph, tol: f64, max_steps: usize) -> Result<SpectralEstimate> {
    let n = g.num_nodes();
    if n == 0 {
        return Err(Error::invalid(
            "spectral estimate of an empty (0-node) graph",
        ));
    }
    if !(tol > 0.0) || max_steps == 0 {
        return Err(Error::invalid("tolerance and step limit must be positive"));
    }

    let first = largest_ritz(
        g,
        &seeded_start(n, START_SEED, true),
        Vec::new(),
        tol,
        max_steps.min(n),
        f64::MIN_POSITIVE,
    )?;
    let lambda1 = first.value;
    let mut v1 = first.vector;
    if v1.iter().sum::<f64>() < 0.0 {
        scale(-1.0, &mut v1);
    }

    if n == 1 {
        return Ok(SpectralEstimate {
            lambda1,
            lambda2: None,
            v1,
            converged: first.converged,
            iterations: first.steps,
            degenerate: false,
        });
    }

    let floor = lambda1.abs().max(1.0);
    let second = largest_ritz(
        g,
        &seeded_start(n, DEFLATED_SEED, false),
        vec![v1.clone()],
        tol,
        max_steps.min(n - 1),
        floor,
    )?;
    let lambda2 = second.value.min(lambda1);
    let degenerate = lambda1 - lambda2 <= 10.0 * tol.max(1e-12) * floor;

    Ok(SpectralEstimate {
        lambda1,
        lambda2: Some(lambda2),
        v1,
        converged: first.converged && second.converged,
        iterations: first.steps + second.steps,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_pref, generate_reference, ReferenceKind};
    use crate::krylov::DenseSpectrum;

    #[test]
    fn complete_graph() {
        let k = generate_reference(ReferenceKind::Complete, 7, None).unwrap();
        let s = dominant_eigs(&k, 1e-12).unwrap();
        assert!((s.lambda1 - 6.0).abs() < 1e-10);
        assert!((s.lambda2.unwrap() + 1.0).abs() < 1e-10);
        assert!(s.converged && !s.degenerate);
        assert!(s.v1.iter().all(|&x| (x - 1.0 / 7f64.sqrt()).abs() < 1e-8));
    }

    #[test]
    fn star_graph() {
        let s5 = generate_reference(ReferenceKind::Star, 5, None).unwrap();
        let s = dominant_eigs(&s5, 1e-12).unwrap();
        assert!((s.lambda1 - 2.0).abs() < 1e-10);
        assert!(s.lambda2.unwrap().abs() < 1e-8);
    }

    #[test]
    fn matches_dense_spectrum() {
        let g = generate_pref(400, 2, 9).unwrap();
        let s = dominant_eigs(&g, 1e-10).unwrap();
        let ev = DenseSpectrum::new(&g, 1000).unwrap().eigenvalues_desc();
        assert!((s.lambda1 - ev[0]).abs() < 1e-8 * ev[0]);
        assert!((s.lambda2.unwrap() - ev[1]).abs() < 1e-6 * ev[0]);
        assert!(s.v1.iter().all(|&x| x > 0.0));
        assert!((norm2(&s.v1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn repeated_top_eigenvalue_is_reported() {
        // Two disjoint triangles: spectrum {2, 2, -1, -1, -1, -1}.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let s = dominant_eigs(&g, 1e-12).unwrap();
        assert!((s.lambda1 - 2.0).abs() < 1e-10);
        assert!((s.lambda2.unwrap() - 2.0).abs() < 1e-8);
        assert!(s.degenerate);
    }

    #[test]
    fn empty_and_single_node() {
        let s = dominant_eigs(&Graph::empty(5), 1e-12).unwrap();
        assert_eq!(s.lambda1, 0.0);
        assert_eq!(s.lambda2, Some(0.0));
        let s = dominant_eigs(&Graph::empty(1), 1e-12).unwrap();
        assert_eq!(s.lambda2, None);
        assert!(dominant_eigs(&Graph::empty(0), 1e-12).is_err());
    }
}
