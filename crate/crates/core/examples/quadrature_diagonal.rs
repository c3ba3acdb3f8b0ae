//! Gauss-rule estimates of `(e^A)_ii` from `k` Lanczos steps, converging
//! from below to the exact diagonal.
//!
//! ```text
//! cargo run --release --example quadrature_diagonal
//! ```

use netcomm::graph::load_matrix_market;
use netcomm::krylov::{quadrature_diag, DenseSpectrum, KrylovConfig, MatrixFunction};

fn main() -> netcomm::Result<()> {
    let g = load_matrix_market(include_str!("../data/karate.mtx").as_bytes())?;
    let f = MatrixFunction::Exp { beta: 1.0 };
    let exact = DenseSpectrum::new(&g, 100)?.diag(f)?;
    for node in [0, 33, 11] {
        println!(
            "node {} (degree {}), exact {:.10}",
            node + 1,
            g.neighbors(node).len(),
            exact[node]
        );
        for k in 1..=8 {
            let cfg = KrylovConfig {
                quadrature_steps: k,
                ..KrylovConfig::default()
            };
            let q = quadrature_diag(&g, node, f, &cfg)?;
            println!(
                "  k={k}  {q:.10}  rel. err {:.1e}",
                (exact[node] - q) / exact[node]
            );
        }
    }
    Ok(())
}
