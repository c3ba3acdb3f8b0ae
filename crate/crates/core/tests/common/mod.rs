#![allow(dead_code)]

use netcomm::graph::{
    generate_pref, generate_reference, generate_smallw, load_matrix_market, Graph, ReferenceKind,
};

pub fn karate() -> Graph {
    load_matrix_market(include_str!("../../data/karate.mtx").as_bytes()).unwrap()
}

pub fn reference_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in [2, 3, 5, 8] {
        out.push((
            format!("complete:{n}"),
            generate_reference(ReferenceKind::Complete, n, None).unwrap(),
        ));
    }
    for n in [2, 5, 20] {
        out.push((
            format!("star:{n}"),
            generate_reference(ReferenceKind::Star, n, None).unwrap(),
        ));
    }
    for n in [2, 7, 30] {
        out.push((
            format!("path:{n}"),
            generate_reference(ReferenceKind::Path, n, None).unwrap(),
        ));
    }
    for n in [3, 12] {
        out.push((
            format!("cycle:{n}"),
            generate_reference(ReferenceKind::Cycle, n, None).unwrap(),
        ));
    }
    for (n, d) in [(100, 1), (100, 3)] {
        out.push((
            format!("ring:{n},{d}"),
            generate_reference(ReferenceKind::RingLattice, n, Some(d)).unwrap(),
        ));
    }
    out.push(("empty:6".into(), Graph::empty(6)));
    out.push(("single".into(), Graph::empty(1)));
    out.push((
        "two-triangles".into(),
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap(),
    ));
    out.push((
        "loop".into(),
        Graph::from_edges(3, [(0, 0), (0, 1), (1, 2)]).unwrap(),
    ));
    out
}

/// Twenty seeded instances of each random family, at oracle-friendly sizes.
pub fn random_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for seed in 0..20u64 {
        let d = 1 + (seed as usize % 4);
        out.push((
            format!("pref:300,{d}#{seed}"),
            generate_pref(300, d, seed).unwrap(),
        ));
        let p = [0.0, 0.1, 0.2, 0.3][seed as usize % 4];
        out.push((
            format!("smallw:400,2,{p}#{seed}"),
            generate_smallw(400, 2, p, seed).unwrap(),
        ));
    }
    out
}

pub fn corpus() -> Vec<(String, Graph)> {
    let mut all = reference_graphs();
    all.push(("karate".into(), karate()));
    all.extend(random_graphs());
    all
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
