//! Loader round trips and malformed-input diagnostics.

use netcomm::graph::{load_edge_list, load_matrix_market, write_canonical, Graph};
use proptest::prelude::*;

fn edges(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..max_n).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..3 * n)))
}

fn to_matrix_market(g: &Graph, symmetric: bool) -> String {
    let mut entries = Vec::new();
    for (u, v) in g.edges() {
        entries.push((v + 1, u + 1));
        if !symmetric && u != v {
            entries.push((u + 1, v + 1));
        }
    }
    let kind = if symmetric { "symmetric" } else { "general" };
    let mut s = format!("%%MatrixMarket matrix coordinate pattern {kind}\n% generated\n");
    s += &format!("{} {} {}\n", g.num_nodes(), g.num_nodes(), entries.len());
    for (i, j) in entries {
        s += &format!("{i} {j}\n");
    }
    s
}

proptest! {
    #[test]
    fn canonical_dump_round_trips((n, e) in edges(60)) {
        let g = Graph::from_edges(n, e).unwrap();
        let mut buf = Vec::new();
        write_canonical(&g, &mut buf).unwrap();
        let text = format!("# n = {n}\n{}", String::from_utf8(buf).unwrap());
        let back = netcomm::graph::load_edge_list_sized(text.as_bytes(), 0, n).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn matrix_market_round_trips((n, e) in edges(60), symmetric in any::<bool>()) {
        let g = Graph::from_edges(n, e).unwrap();
        let back = load_matrix_market(to_matrix_market(&g, symmetric).as_bytes()).unwrap();
        prop_assert_eq!(back.num_edges(), g.num_edges());
        prop_assert_eq!(back, g);
    }
}

#[test]
fn diagnostics_name_the_problem() {
    let cases: [(&str, &str); 4] = [
        (
            "%%MatrixMarket matrix array real general\n2 2\n",
            "coordinate",
        ),
        (
            "%%MatrixMarket matrix coordinate pattern symmetric\n3 2 1\n2 1\n",
            "square",
        ),
        (
            "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n4 1\n",
            "line 3",
        ),
        (
            "%%MatrixMarket matrix coordinate pattern general\n3 3 1\n2 3\n",
            "no mirror",
        ),
    ];
    for (text, needle) in cases {
        let err = load_matrix_market(text.as_bytes()).unwrap_err().to_string();
        assert!(err.contains(needle), "{err} lacks '{needle}'");
    }
    let err = load_edge_list("1 2\n0 x\n".as_bytes(), 0)
        .unwrap_err()
        .to_string();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn karate_file_shape() {
    let g = load_matrix_market(include_str!("../data/karate.mtx").as_bytes()).unwrap();
    assert_eq!((g.num_nodes(), g.num_edges()), (34, 78));
    assert!(g.is_connected() && !g.has_loops());
    let deg = g.degrees();
    assert_eq!((deg.max(), deg.argmax()), (17, Some(33)));
}
