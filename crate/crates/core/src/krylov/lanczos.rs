use super::spmv_into;
use super::tridiag::{tridiagonal_eigen, SymTridiagEigen};
use super::vecops::{axpy, dot, norm2, reorthogonalize, scale};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative size of `beta_j` below which the Krylov space is treated as
/// invariant.
const BREAKDOWN_TOL: f64 = 1e-12;

/// `k` steps of symmetric Lanczos: `A V = V T + beta_k v_{k+1} e_k'`.
#[derive(Debug, Clone)]
pub struct LanczosDecomposition {
    /// Orthonormal Lanczos vectors, one `Vec` per column of `V`.
    pub basis: Vec<Vec<f64>>,
    /// Diagonal of `T`.
    pub alpha: Vec<f64>,
    /// Off-diagonal of `T` (length `k - 1`), all nonnegative.
    pub beta: Vec<f64>,
    /// `beta_k`, the norm of the residual direction.
    pub residual_norm: f64,
    /// `v_{k+1}`; `None` when the process broke down.
    pub next_vector: Option<Vec<f64>>,
    /// The starting vector lies in an invariant subspace of dimension `k`;
    /// `T` then carries exact eigenvalues of `A`.
    pub invariant: bool,
}

impl LanczosDecomposition {
    pub fn steps(&self) -> usize {
        self.alpha.len()
    }

    pub fn eigen(&self) -> SymTridiagEigen {
        tridiagonal_eigen(&self.alpha, &self.beta)
    }

    /// `max |(V'V - I)_jk|`.
    pub fn orthogonality_error(&self) -> f64 {
        let k = self.basis.len();
        let mut worst: f64 = 0.0;
        for i in 0..k {
            for j in 0..=i {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot(&self.basis[i], &self.basis[j]) - target).abs());
            }
        }
        worst
    }

    /// Frobenius norm of `A V - V T - beta_k v_{k+1} e_k'`.
    pub fn recurrence_residual(&self, g: &Graph) -> f64 {
        let k = self.steps();
        let n = g.num_nodes();
        let mut total = 0.0;
        let mut av = vec![0.0; n];
        for j in 0..k {
            spmv_into(g, &self.basis[j], &mut av);
            axpy(-self.alpha[j], &self.basis[j], &mut av);
            if j > 0 {
                axpy(-self.beta[j - 1], &self.basis[j - 1], &mut av);
            }
            if j + 1 < k {
                axpy(-self.beta[j], &self.basis[j + 1], &mut av);
            } else if let Some(next) = &self.next_vector {
                axpy(-self.residual_norm, next, &mut av);
            }
            total += dot(&av, &av);
        }
        total.sqrt()
    }
}

/// Incremental Lanczos with full reorthogonalization, optionally restricted
/// to the orthogonal complement of a set of orthonormal `deflate` vectors.
pub(crate) struct LanczosProcess<'a> {
    graph: &'a Graph,
    pub basis: Vec<Vec<f64>>,
    pub alpha: Vec<f64>,
    /// `beta[j]` couples `basis[j]` and `basis[j + 1]`.
    pub beta: Vec<f64>,
    pub next: Option<Vec<f64>>,
    pub invariant: bool,
    deflate: Vec<Vec<f64>>,
    work: Vec<f64>,
}

impl<'a> LanczosProcess<'a> {
    pub fn new(graph: &'a Graph, v0: &[f64], deflate: Vec<Vec<f64>>) -> Result<Self> {
        let n = graph.num_nodes();
        if v0.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v0.len(),
            });
        }
        let mut q = v0.to_vec();
        reorthogonalize(&mut q, &deflate);
        let nrm = norm2(&q);
        if !(nrm > 0.0) || !nrm.is_finite() {
            return Err(Error::invalid(
                "Lanczos start vector must be nonzero and finite",
            ));
        }
        scale(1.0 / nrm, &mut q);
        Ok(LanczosProcess {
            graph,
            basis: Vec::new(),
            alpha: Vec::new(),
            beta: Vec::new(),
            next: Some(q),
            invariant: false,
            deflate,
            work: vec![0.0; n],
        })
    }

    pub fn steps(&self) -> usize {
        self.alpha.len()
    }

    /// Performs one step; returns false when no further step is possible.
    pub fn step(&mut self) -> bool {
        let Some(q) = self.next.take() else {
            return false;
        };
        let j = self.basis.len();
        spmv_into(self.graph, &q, &mut self.work);
        let mut w = std::mem::take(&mut self.work);
        let aq_norm = norm2(&w);
        let a = dot(&q, &w);
        axpy(-a, &q, &mut w);
        if j > 0 {
            axpy(-self.beta[j - 1], &self.basis[j - 1], &mut w);
        }
        self.basis.push(q);
        reorthogonalize(&mut w, &self.deflate);
        reorthogonalize(&mut w, &self.basis);
        let b = norm2(&w);
        self.alpha.push(a);
        self.beta.push(b);

        let dim = self.graph.num_nodes() - self.deflate.len();
        if b <= BREAKDOWN_TOL * aq_norm.max(a.abs()) || self.basis.len() >= dim {
            self.invariant = true;
            self.work = w;
        } else {
            let mut next = w;
            scale(1.0 / b, &mut next);
            self.next = Some(next);
            self.work = vec![0.0; self.graph.num_nodes()];
        }
        true
    }

    pub fn into_decomposition(self) -> LanczosDecomposition {
        let k = self.alpha.len();
        let residual_norm = if self.invariant {
            0.0
        } else {
            self.beta[k - 1]
        };
        LanczosDecomposition {
            basis: self.basis,
            alpha: self.alpha,
            beta: self.beta[..k - 1].to_vec(),
            residual_norm,
            next_vector: self.next,
            invariant: self.invariant,
        }
    }
}

/// Runs up to `k` Lanczos steps from `v0`.
///
/// Stops early, without error, if the Krylov space becomes invariant; the
/// returned decomposition then has fewer than `k` steps and `invariant` set.
pub fn lanczos(g: &Graph, v0: &[f64], k: usize) -> Result<LanczosDecomposition> {
    if k == 0 || k > g.num_nodes() {
        return Err(Error::invalid(format!(
            "Lanczos step count must lie in 1..={} (got {k})",
            g.num_nodes()
        )));
    }
    let mut process = LanczosProcess::new(g, v0, Vec::new())?;
    while process.steps() < k && process.step() {}
    Ok(process.into_decomposition())
}
