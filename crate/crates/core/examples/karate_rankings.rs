//! Top of the Karate-club rankings under `diag(e^A)` and `e^A 1`.
//!
//! ```text
//! cargo run --release --example karate_rankings [path.mtx]
//! ```

use netcomm::centrality::{
    rank_with, subgraph_centrality, total_communicability, TieBreak, DEFAULT_EXACT_BELOW,
    DEFAULT_TIE_TOLERANCE,
};
use netcomm::compare::{compare_rankings, Cutoff};
use netcomm::graph::load_matrix_market;
use netcomm::krylov::KrylovConfig;

fn main() -> netcomm::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/karate.mtx").into());
    let g = load_matrix_market(std::fs::File::open(&path)?)?;
    let cfg = KrylovConfig::default();

    let sub = subgraph_centrality(&g, 1.0, &cfg, DEFAULT_EXACT_BELOW)?;
    let tot = total_communicability(&g, 1.0, &cfg)?;
    // tied scores go higher id first, the convention of the published tables
    let (rs, rt) = (
        rank_with(&sub, TieBreak::HigherIdFirst, DEFAULT_TIE_TOLERANCE),
        rank_with(&tot, TieBreak::HigherIdFirst, DEFAULT_TIE_TOLERANCE),
    );

    println!("{} nodes, {} edges\n", g.num_nodes(), g.num_edges());
    println!(
        "{:>4}  {:>6} {:>10}   {:>6} {:>10}",
        "rank", "node", "diag", "node", "row sum"
    );
    for r in 0..10 {
        let (a, b) = (rs.order[r], rt.order[r]);
        // 1-based ids, as in the file
        println!(
            "{:>4}  {:>6} {:>10.3}   {:>6} {:>10.3}",
            r + 1,
            a + 1,
            sub.scores[a],
            b + 1,
            tot.scores[b]
        );
    }

    let c = compare_rankings(&rs, &rt, &[Cutoff::Percent(10.0), Cutoff::Count(2)], false)?;
    println!("\ncc = {:.3}, isim = {:.3}", c.cc_full, c.isim_full);
    for t in &c.top {
        let cc = t.cc.map_or("--".to_string(), |v| format!("{v:.3}"));
        println!("top {:>2} nodes: cc = {cc}, isim = {:.3}", t.k, t.isim);
    }
    Ok(())
}
