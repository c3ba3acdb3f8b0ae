//! How quickly the diagonal and row-sum rankings of `e^A` coincide on
//! preferential-attachment graphs as the attachment degree `d` grows.
//!
//! ```text
//! cargo run --release --example pref_convergence [instances]
//! ```

use netcomm::centrality::{
    rank_with, subgraph_centrality, total_communicability, ScoreVector, TieBreak,
    DEFAULT_TIE_TOLERANCE,
};
use netcomm::compare::{compare_rankings, Cutoff};
use netcomm::graph::generate_pref;
use netcomm::krylov::{dominant_eigs, KrylovConfig};

fn main() -> netcomm::Result<()> {
    let reps: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let cfg = KrylovConfig::default();
    println!("pref n=1000, {reps} instances per row");
    println!(
        "{:>3} {:>8} {:>10} {:>10} {:>8}",
        "d", "cc", "isim", "isim_10%", "gap"
    );
    for d in 1..=10 {
        let (mut cc, mut isim, mut isim10, mut gap) = (0.0, 0.0, 0.0, 0.0);
        for seed in 0..reps {
            let g = generate_pref(1000, d, seed)?;
            let r = |s: &ScoreVector| rank_with(s, TieBreak::HigherIdFirst, DEFAULT_TIE_TOLERANCE);
            let a = r(&subgraph_centrality(&g, 1.0, &cfg, 3000)?);
            let b = r(&total_communicability(&g, 1.0, &cfg)?);
            let c = compare_rankings(&a, &b, &[Cutoff::Percent(10.0)], false)?;
            cc += c.cc_full;
            isim += c.isim_full;
            isim10 += c.top[0].isim;
            gap += dominant_eigs(&g, 1e-8)?.spectral_gap().unwrap_or(0.0);
        }
        let k = reps as f64;
        println!(
            "{d:>3} {:>8.3} {:>10.2e} {:>10.2e} {:>8.2}",
            cc / k,
            isim / k,
            isim10 / k,
            gap / k
        );
    }
    Ok(())
}
