//! Exact walk counts `(A^k)_ij` with arbitrary-precision integers, and the
//! truncated series they feed.
//!
//! ```text
//! cargo run --release --example walk_counts
//! ```

use netcomm::graph::load_matrix_market;
use netcomm::krylov::{dense_oracle, MatrixFunction};
use netcomm::reference::{truncated_exp_series, walk_table};

fn main() -> netcomm::Result<()> {
    let g = load_matrix_market(include_str!("../data/karate.mtx").as_bytes())?;
    let t = walk_table(&g, 40)?;
    println!(
        "{:>3} {:>28} {:>28}",
        "k", "closed walks (trace A^k)", "all walks (1' A^k 1)"
    );
    for k in [1, 2, 3, 4, 10, 20, 40] {
        println!(
            "{k:>3} {:>28} {:>28}",
            t.trace(k).to_string(),
            t.total_walks(k).to_string()
        );
    }
    println!(
        "\nnode 34: {} closed walks of length 3 (twice its triangles)",
        t.closed_walks(3, 33)
    );

    let exact = dense_oracle(&g, MatrixFunction::Exp { beta: 1.0 })?;
    for k_max in [5, 10, 20, 40, 60] {
        let s = truncated_exp_series(&g, 1.0, k_max)?;
        println!(
            "series to k={k_max:>2}: max rel. error {:.1e}",
            (&s - &exact).amax() / exact.amax()
        );
    }
    Ok(())
}
