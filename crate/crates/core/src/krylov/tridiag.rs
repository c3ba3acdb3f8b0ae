//! Eigendecomposition of small symmetric tridiagonal matrices by implicit QL
//! with Wilkinson shifts (the classical `tql2` scheme).

/// Eigenpairs of a symmetric tridiagonal matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct SymTridiagEigen {
    pub eigenvalues: Vec<f64>,
    /// `vectors[i][j]` is component `i` of eigenvector `j`.
    pub vectors: Vec<Vec<f64>>,
}

impl SymTridiagEigen {
    /// First components of every eigenvector (the Gauss weights are their
    /// squares).
    pub fn first_row(&self) -> &[f64] {
        &self.vectors[0]
    }

    pub fn last_row(&self) -> &[f64] {
        &self.vectors[self.vectors.len() - 1]
    }

    /// `e1' f(T) e1`.
    pub fn quadratic_form_e1(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.eigenvalues
            .iter()
            .zip(self.first_row())
            .map(|(&theta, &z)| z * z * f(theta))
            .sum()
    }
}

/// `diag` has length `k`, `offdiag` length `k - 1`.
pub fn tridiagonal_eigen(diag: &[f64], offdiag: &[f64]) -> SymTridiagEigen {
    let n = diag.len();
    assert_eq!(
        offdiag.len() + 1,
        n.max(1),
        "offdiag must have length k - 1"
    );
    let mut d = diag.to_vec();
    let mut e = vec![0.0; n];
    e[..n.saturating_sub(1)].copy_from_slice(offdiag);
    let mut z: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for row in z.iter_mut() {
                        let h = row[i + 1];
                        row[i + 1] = s * row[i] + c * h;
                        row[i] = c * row[i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 || iter >= 60 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    SymTridiagEigen {
        eigenvalues: order.iter().map(|&j| d[j]).collect(),
        vectors: z
            .iter()
            .map(|row| order.iter().map(|&j| row[j]).collect())
            .collect(),
    }
}
