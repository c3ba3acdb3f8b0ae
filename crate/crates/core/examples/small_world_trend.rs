//! Mean `C/n` of small-world graphs as the shortcut probability grows.
//!
//! ```text
//! cargo run --release --example small_world_trend [instances]
//! ```

use netcomm::centrality::total_communicability;
use netcomm::graph::generate_smallw;
use netcomm::krylov::KrylovConfig;
use rayon::prelude::*;

fn main() -> netcomm::Result<()> {
    let reps: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    let (n, d) = (5000, 1);
    let cfg = KrylovConfig::default();
    println!("smallw n={n} d={d}, {reps} instances per row");
    println!(
        "{:>5} {:>10} {:>10} {:>8}",
        "p", "mean m", "mean C/n", "std"
    );
    for p in [0.0, 0.1, 0.2, 0.3, 0.5] {
        let rows: Vec<(f64, f64)> = (0..reps)
            .into_par_iter()
            .map(|seed| {
                let g = generate_smallw(n, d, p, seed)?;
                let c = total_communicability(&g, 1.0, &cfg)?.sum() / n as f64;
                Ok((g.num_edges() as f64, c))
            })
            .collect::<netcomm::Result<_>>()?;
        let k = rows.len() as f64;
        let mean_m = rows.iter().map(|r| r.0).sum::<f64>() / k;
        let mean_c = rows.iter().map(|r| r.1).sum::<f64>() / k;
        let std =
            (rows.iter().map(|r| (r.1 - mean_c).powi(2)).sum::<f64>() / (k - 1.0).max(1.0)).sqrt();
        println!("{p:>5} {mean_m:>10.1} {mean_c:>10.3} {std:>8.3}");
    }
    Ok(())
}
