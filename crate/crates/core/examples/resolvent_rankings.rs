//! Katz-style rankings from `(I - alpha A)^{-1}` at several fractions of
//! `1/lambda_1`, compared with the exponential rankings.
//!
//! ```text
//! cargo run --release --example resolvent_rankings
//! ```

use netcomm::centrality::{
    katz_subgraph, katz_total, rank_with, subgraph_centrality, AlphaChoice, ScoreVector, TieBreak,
    DEFAULT_TIE_TOLERANCE,
};
use netcomm::compare::{compare_rankings, Cutoff};
use netcomm::graph::load_matrix_market;
use netcomm::krylov::KrylovConfig;

fn main() -> netcomm::Result<()> {
    let g = load_matrix_market(include_str!("../data/karate.mtx").as_bytes())?;
    let cfg = KrylovConfig::default();
    let ties = TieBreak::HigherIdFirst;
    let ranked = |s: &ScoreVector| rank_with(s, ties, DEFAULT_TIE_TOLERANCE);
    let exp_sub = ranked(&subgraph_centrality(&g, 1.0, &cfg, 3000)?);

    println!(
        "{:>8} {:>10} {:>10} {:>12} {:>12}",
        "fraction", "cc(res)", "isim(res)", "cc vs exp", "top node"
    );
    for fraction in [0.1, 0.5, 0.85, 0.99] {
        let alpha = AlphaChoice::Fraction(fraction);
        let sub = katz_subgraph(&g, alpha, &cfg, 3000)?;
        let tot = katz_total(&g, alpha, &cfg)?;
        let (rs, rt) = (ranked(&sub), ranked(&tot));
        let c = compare_rankings(&rs, &rt, &[Cutoff::Count(2)], false)?;
        let vs_exp = compare_rankings(&rs, &exp_sub, &[], false)?;
        println!(
            "{fraction:>8} {:>10.3} {:>10.3} {:>12.3} {:>12}",
            c.cc_full,
            c.isim_full,
            vs_exp.cc_full,
            rt.order[0] + 1
        );
    }

    // A literal alpha past 1/lambda_1 is refused.
    let err = katz_total(&g, AlphaChoice::Literal(0.2), &cfg).unwrap_err();
    println!("\nalpha = 0.2: {err}");
    Ok(())
}
