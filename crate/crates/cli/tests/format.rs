use connfactor_cli::format::{parse_graph, parse_instance, serialize_instance};
use connfactor_core::{DegreeSpec, Graph};
use proptest::prelude::*;

#[test]
fn triangle() {
    let inst = parse_instance("p ffactor 3 3 0\nf 2 2 2\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
    assert_eq!(inst.graph.vertex_count(), 3);
    assert_eq!(inst.graph.edges(), &[(0, 1), (1, 2), (0, 2)]);
    assert!(!inst.graph.is_weighted());
    assert_eq!(inst.f, Some(DegreeSpec::uniform(3, 2)));
    assert!(inst.warnings.is_empty());
}

#[test]
fn comments_and_blank_lines() {
    let text = "c hello\n\np ffactor 2 1 1\nc mid\nf 1 1\n  e 1 0 7\n";
    let inst = parse_instance(text).unwrap();
    assert_eq!(inst.graph.weight(0), Some(7));
}

fn err(text: &str) -> (usize, usize, String) {
    let e = parse_instance(text).unwrap_err();
    (e.line, e.column, e.message)
}

#[test]
fn missing_weight() {
    let (line, col, msg) = err("p ffactor 2 1 1\nf 1 1\ne 0 1\n");
    assert_eq!((line, col), (3, 6));
    assert!(msg.contains("missing weight"), "{msg}");
}

#[test]
fn self_loop() {
    let (line, col, msg) = err("p ffactor 2 1 0\nf 1 1\ne 0 0\n");
    assert_eq!((line, col), (3, 3));
    assert!(msg.contains("self-loop"), "{msg}");
}

#[test]
fn rejections() {
    let cases: &[(&str, usize, usize, &str)] = &[
        ("p ffactor 3 2 0\nf 1 1 0\ne 0 1\ne 1 0\n", 4, 3, "duplicate edge"),
        ("p ffactor 3 1 0\nf 1 1 0\ne 0 3\n", 3, 5, "out of range"),
        ("p ffactor 2 1 0\nf 1 1\ne 0 1 4\n", 3, 7, "unexpected weight"),
        ("p ffactor 2 1 0\nf 1\ne 0 1\n", 2, 4, "expected 2 degree values"),
        ("p ffactor 2 1 0\nf 1 x\ne 0 1\n", 2, 5, "expected a degree value"),
        ("p ffactor 2 2 0\nf 1 1\ne 0 1\n", 4, 1, "declared 2 edges"),
        ("p ffactor 2 1 0\ne 0 1\n", 3, 1, "missing f line"),
        ("f 1 1\n", 1, 1, "before the problem line"),
        ("p dimacs 2 1 0\n", 1, 3, "unknown problem type"),
        ("p ffactor 2 1 0\nx 1\n", 2, 1, "unknown line type"),
        ("p ffactor 2 1 1\nf 1 1\ne 0 1 -3\n", 3, 7, "negative weight"),
        ("", 1, 1, "missing problem line"),
    ];
    for &(text, line, col, needle) in cases {
        let (l, c, msg) = err(text);
        assert_eq!((l, c), (line, col), "{text:?}: {msg}");
        assert!(msg.contains(needle), "{text:?}: {msg}");
    }
}

#[test]
fn warnings_are_not_errors() {
    let inst = parse_instance("p ffactor 3 3 0\nf 1 1 1\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
    assert_eq!(inst.warnings.len(), 1);
    assert!(inst.warnings[0].contains("odd"));
    let inst = parse_instance("p ffactor 2 1 0\nf 2 2\ne 0 1\n").unwrap();
    assert!(inst.warnings.iter().any(|w| w.contains("exceeds degree")));
}

#[test]
fn graph_without_f() {
    let inst = parse_graph("p ffactor 3 2 0\ne 0 1\ne 1 2\n").unwrap();
    assert_eq!(inst.f, None);
    assert_eq!(serialize_instance(&inst.graph, None), "p ffactor 3 2 0\ne 0 1\ne 1 2\n");
}

fn instance() -> impl Strategy<Value = (Graph, DegreeSpec)> {
    (1usize..12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        (
            proptest::sample::subsequence(pairs, 0..=k).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), k),
            proptest::collection::vec(0usize..8, n),
            any::<bool>(),
            proptest::collection::vec(0i64..1000, k),
        )
            .prop_map(move |(edges, flip, f, weighted, w)| {
                let m = edges.len();
                let edges = edges.into_iter().zip(flip).map(|((u, v), s)| if s { (v, u) } else { (u, v) });
                let g = Graph::new(n, edges).unwrap();
                let g = if weighted { g.with_weights(w[..m].to_vec()).unwrap() } else { g };
                (g, DegreeSpec::new(f))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn round_trip((graph, f) in instance()) {
        let text = serialize_instance(&graph, Some(&f));
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back.graph, &graph);
        prop_assert_eq!(back.f.as_ref(), Some(&f));
        prop_assert_eq!(serialize_instance(&back.graph, back.f.as_ref()), text);
    }
}
