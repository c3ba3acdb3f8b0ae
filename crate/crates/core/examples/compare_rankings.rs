//! Correlation and intersection distance on hand-made rankings, plus the
//! `isim_k` curve of two centrality rankings.
//!
//! ```text
//! cargo run --release --example compare_rankings
//! ```

use netcomm::centrality::{rank, subgraph_centrality, total_communicability, Ranking};
use netcomm::compare::{intersection_distance, isim_curve, rank_correlation, top_k_correlation};
use netcomm::graph::generate_pref;
use netcomm::krylov::KrylovConfig;

fn main() -> netcomm::Result<()> {
    let x = Ranking::from_order(vec![0, 1, 2, 3, 4])?;
    let y = Ranking::from_order(vec![1, 0, 2, 4, 3])?;
    println!("x = {:?}\ny = {:?}", x.order, y.order);
    println!("cc = {:.3}", rank_correlation(&x, &y)?);
    for k in 1..=5 {
        let cc = top_k_correlation(&x, &y, k)?.map_or("--".into(), |v| format!("{v:.3}"));
        println!(
            "k={k}: isim = {:.4}, top-k cc = {cc}",
            intersection_distance(&x, &y, k)?
        );
    }

    let g = generate_pref(1000, 2, 7)?;
    let cfg = KrylovConfig::default();
    let a = rank(&subgraph_centrality(&g, 1.0, &cfg, 3000)?);
    let b = rank(&total_communicability(&g, 1.0, &cfg)?);
    let curve = isim_curve(&a, &b)?;
    println!("\npref n=1000 d=2, isim_k of diag vs row sums:");
    for k in [1, 2, 5, 10, 20, 50, 100, 200, 500, 1000] {
        println!("  k={k:>4}  {:.4}", curve[k - 1]);
    }
    Ok(())
}
