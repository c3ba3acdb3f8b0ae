use nalgebra::{DMatrix, DVector, SymmetricEigen};

use super::MatrixFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the dense reference path accepts by default.
pub const DEFAULT_DENSE_CAP: usize = 3000;

/// Full symmetric eigendecomposition `A = Q diag(lambda) Q'` of a small
/// adjacency matrix; any `f(A)` follows by mapping the eigenvalues.
#[derive(Debug, Clone)]
pub struct DenseSpectrum {
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<f64>,
}

impl DenseSpectrum {
    pub fn new(g: &Graph, cap: usize) -> Result<Self> {
        let n = g.num_nodes();
        if n > cap {
            return Err(Error::TooLarge { n, cap });
        }
        let mut a = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            for &j in g.neighbors(i) {
                a[(i, j)] = 1.0;
            }
        }
        let eig = SymmetricEigen::new(a);
        Ok(DenseSpectrum {
            eigenvalues: eig.eigenvalues,
            eigenvectors: eig.eigenvectors,
        })
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues_desc(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.eigenvalues.iter().copied().collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    fn mapped(&self, f: MatrixFunction) -> Result<DVector<f64>> {
        if let MatrixFunction::Resolvent { alpha } = f {
            let lmax = self.lambda_max().max(0.0);
            if !(alpha >= 0.0) || alpha * lmax >= 1.0 {
                return Err(Error::AlphaOutOfRange {
                    alpha,
                    lambda1: Some(lmax),
                });
            }
        }
        Ok(self.eigenvalues.map(|x| f.eval(x)))
    }

    pub fn matrix(&self, f: MatrixFunction) -> Result<DMatrix<f64>> {
        let fx = self.mapped(f)?;
        let q = &self.eigenvectors;
        let mut scaled = q.clone();
        for (j, mut col) in scaled.column_iter_mut().enumerate() {
            col *= fx[j];
        }
        Ok(scaled * q.transpose())
    }

    /// Diagonal of `f(A)` without forming the matrix.
    pub fn diag(&self, f: MatrixFunction) -> Result<Vec<f64>> {
        let fx = self.mapped(f)?;
        let q = &self.eigenvectors;
        Ok((0..q.nrows())
            .map(|i| (0..q.ncols()).map(|j| q[(i, j)] * q[(i, j)] * fx[j]).sum())
            .collect())
    }

    /// `f(A) v`.
    pub fn apply(&self, f: MatrixFunction, v: &[f64]) -> Result<Vec<f64>> {
        let fx = self.mapped(f)?;
        let q = &self.eigenvectors;
        if v.len() != q.nrows() {
            return Err(Error::DimensionMismatch {
                expected: q.nrows(),
                found: v.len(),
            });
        }
        let coeffs = q.tr_mul(&DVector::from_column_slice(v)).component_mul(&fx);
        Ok((q * coeffs).iter().copied().collect())
    }
}

/// `f(A)` by full eigendecomposition; refuses graphs above
/// [`DEFAULT_DENSE_CAP`] nodes.
pub fn dense_oracle(g: &Graph, f: MatrixFunction) -> Result<DMatrix<f64>> {
    dense_oracle_with_cap(g, f, DEFAULT_DENSE_CAP)
}

pub fn dense_oracle_with_cap(g: &Graph, f: MatrixFunction, cap: usize) -> Result<DMatrix<f64>> {
    DenseSpectrum::new(g, cap)?.matrix(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_reference, ReferenceKind};

    #[test]
    fn empty_graph_exp_is_identity() {
        let m = dense_oracle(&Graph::empty(4), MatrixFunction::Exp { beta: 1.0 }).unwrap();
        assert_eq!(m, DMatrix::identity(4, 4));
    }

    #[test]
    fn k2_closed_form() {
        let k2 = generate_reference(ReferenceKind::Complete, 2, None).unwrap();
        let m = dense_oracle(&k2, MatrixFunction::Exp { beta: 1.0 }).unwrap();
        let (c, s) = (1f64.cosh(), 1f64.sinh());
        for (got, want) in m.iter().zip([c, s, s, c]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn p3_resolvent_row_sums() {
        let p3 = generate_reference(ReferenceKind::Path, 3, None).unwrap();
        let m = dense_oracle(&p3, MatrixFunction::Resolvent { alpha: 0.1 }).unwrap();
        let sums: Vec<f64> = (0..3).map(|i| m.row(i).sum()).collect();
        let expect = [1.1 / 0.98, 1.2 / 0.98, 1.1 / 0.98];
        for (a, b) in sums.iter().zip(expect) {
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn cap_and_alpha_checks() {
        let k5 = generate_reference(ReferenceKind::Complete, 5, None).unwrap();
        assert!(matches!(
            dense_oracle_with_cap(&k5, MatrixFunction::Exp { beta: 1.0 }, 4),
            Err(Error::TooLarge { n: 5, cap: 4 })
        ));
        assert!(dense_oracle(&k5, MatrixFunction::Resolvent { alpha: 0.25 }).is_err());
    }

    #[test]
    fn diag_and_apply_agree_with_matrix() {
        let g = generate_reference(ReferenceKind::Star, 6, None).unwrap();
        let spec = DenseSpectrum::new(&g, 100).unwrap();
        let f = MatrixFunction::Exp { beta: 0.7 };
        let m = spec.matrix(f).unwrap();
        let d = spec.diag(f).unwrap();
        let r = spec.apply(f, &[1.0; 6]).unwrap();
        for i in 0..6 {
            assert!((m[(i, i)] - d[i]).abs() < 1e-13);
            assert!((m.row(i).sum() - r[i]).abs() < 1e-12);
        }
        assert!((spec.lambda_max() - 5f64.sqrt()).abs() < 1e-13);
    }
}
