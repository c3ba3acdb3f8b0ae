//! Row sums of `e^A` on a 200000-node graph, and the cost of estimating
//! diagonals one node at a time on the same graph.
//!
//! ```text
//! cargo run --release --example large_graph [n]
//! ```

use std::time::Instant;

use netcomm::centrality::{rank, total_communicability};
use netcomm::graph::generate_pref;
use netcomm::krylov::{dominant_eigs, quadrature_diag, KrylovConfig, MatrixFunction};

fn main() -> netcomm::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200_000);
    let cfg = KrylovConfig::default();

    let t = Instant::now();
    let g = generate_pref(n, 2, 0)?;
    println!(
        "pref({n}, 2): m = {}, built in {:.2}s",
        g.num_edges(),
        t.elapsed().as_secs_f64()
    );

    let t = Instant::now();
    let s = dominant_eigs(&g, 1e-10)?;
    println!(
        "lambda_1 = {:.6} ({} Lanczos steps, {:.2}s)",
        s.lambda1,
        s.iterations,
        t.elapsed().as_secs_f64()
    );

    let t = Instant::now();
    let total = total_communicability(&g, 1.0, &cfg)?;
    let secs = t.elapsed().as_secs_f64();
    println!(
        "e^A 1 in {secs:.2}s; top five nodes {:?}",
        rank(&total).top(5)
    );

    let sample = 200;
    let t = Instant::now();
    for i in 0..sample {
        quadrature_diag(
            &g,
            i * (n / sample),
            MatrixFunction::Exp { beta: 1.0 },
            &cfg,
        )?;
    }
    let per_node = t.elapsed().as_secs_f64() / sample as f64;
    println!(
        "quadrature: {:.2e}s per node, about {:.0}s for all {n} diagonals ({:.0}x the row sums)",
        per_node,
        per_node * n as f64,
        per_node * n as f64 / secs
    );
    Ok(())
}
