//! The seeded generators and their degree statistics; writes one graph
//! as a canonical edge list to stdout when given `--dump`.
//!
//! ```text
//! cargo run --release --example generate_graphs [--dump]
//! ```

use netcomm::graph::{
    generate_pref, generate_reference, generate_smallw, write_canonical, Graph, ReferenceKind,
    RNG_ALGORITHM,
};

fn describe(name: &str, g: &Graph) {
    let deg = g.degrees();
    println!(
        "{name:<24} n={:>6} m={:>7} degree min/mean/max = {}/{:.2}/{} connected={}",
        g.num_nodes(),
        g.num_edges(),
        deg.min(),
        deg.mean(),
        deg.max(),
        g.is_connected()
    );
}

fn main() -> netcomm::Result<()> {
    if std::env::args().any(|a| a == "--dump") {
        return write_canonical(&generate_pref(20, 2, 1)?, std::io::stdout().lock());
    }
    println!("rng: {RNG_ALGORITHM}\n");
    describe("pref(1000, 2) seed 0", &generate_pref(1000, 2, 0)?);
    describe("pref(1000, 2) seed 1", &generate_pref(1000, 2, 1)?);
    describe("pref(1000, 8) seed 0", &generate_pref(1000, 8, 0)?);
    describe("smallw(5000, 1, 0.1)", &generate_smallw(5000, 1, 0.1, 0)?);
    describe("smallw(5000, 2, 0.3)", &generate_smallw(5000, 2, 0.3, 0)?);
    describe(
        "ring(5000, 1)",
        &generate_reference(ReferenceKind::RingLattice, 5000, Some(1))?,
    );
    describe(
        "star(100)",
        &generate_reference(ReferenceKind::Star, 100, None)?,
    );
    describe(
        "complete(50)",
        &generate_reference(ReferenceKind::Complete, 50, None)?,
    );

    let hist = generate_pref(10_000, 2, 0)?.degrees().histogram();
    println!("\npref(10000, 2) degree histogram (degree: count)");
    for (d, c) in hist.iter().enumerate().filter(|(_, &c)| c > 0).take(12) {
        println!("  {d:>3}: {c}");
    }
    Ok(())
}
