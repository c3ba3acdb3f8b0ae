//! Network totals `C = 1' f(A) 1`, `EE = trace f(A)` and the spectral
//! upper bound, for a few graphs and both matrix functions.
//!
//! ```text
//! cargo run --release --example network_report
//! ```

use netcomm::centrality::{network_report, AlphaChoice, ReportFunction, DEFAULT_EXACT_BELOW};
use netcomm::graph::{generate_pref, generate_reference, load_matrix_market, ReferenceKind};
use netcomm::krylov::KrylovConfig;

fn main() -> netcomm::Result<()> {
    let karate = load_matrix_market(include_str!("../data/karate.mtx").as_bytes())?;
    let graphs = [
        ("karate", karate),
        (
            "ring n=5000",
            generate_reference(ReferenceKind::RingLattice, 5000, Some(1))?,
        ),
        (
            "star n=100",
            generate_reference(ReferenceKind::Star, 100, None)?,
        ),
        ("pref n=2000 d=3", generate_pref(2000, 3, 1)?),
    ];
    let cfg = KrylovConfig::default();
    let functions = [
        ("exp", ReportFunction::Exp { beta: 1.0 }),
        (
            "resolvent 0.85",
            ReportFunction::Resolvent {
                alpha: AlphaChoice::Fraction(0.85),
            },
        ),
    ];

    println!(
        "{:<16} {:<15} {:>8} {:>10} {:>10} {:>12} {:>6}",
        "graph", "f", "lambda1", "EE/n", "C/n", "bound/n", "ok"
    );
    for (name, g) in &graphs {
        for (fname, f) in functions {
            let r = network_report(g, f, &cfg, DEFAULT_EXACT_BELOW)?;
            println!(
                "{name:<16} {fname:<15} {:>8.4} {:>10.4} {:>10.4} {:>12.4} {:>6}",
                r.lambda1, r.ee_over_n, r.c_over_n, r.upper_bound_over_n, r.bounds_ok
            );
        }
    }
    Ok(())
}
