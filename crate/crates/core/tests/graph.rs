use edgecount::graph::{
    gen_gnm, gen_lowerbound_instance, gen_named, parse_edge_list, planted_set_size, read_edge_list,
    render_edge_list, write_edge_list, GraphError, Shape,
};
use edgecount::{build_graph, Graph, GraphSpec};
use proptest::prelude::*;

fn check_invariants(g: &Graph) -> Result<(), TestCaseError> {
    let n = g.n();
    prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
    prop_assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
    for v in 0..n {
        let nb = g.neighbors(v);
        prop_assert_eq!(nb.len(), g.degree(v));
        prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(!nb.contains(&v));
        for &u in nb {
            prop_assert!(g.has_edge(u, v) && g.has_edge(v, u));
            prop_assert!(g.neighbors(u).binary_search(&v).is_ok());
        }
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        prop_assert!(u < v && v < n);
    }
    Ok(())
}

fn arb_edges() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2usize..50).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..200)))
}

proptest! {
    #[test]
    fn built_graphs_are_simple_and_consistent((n, pairs) in arb_edges()) {
        let loops: Vec<_> = pairs.iter().copied().filter(|(u, v)| u != v).collect();
        let g = build_graph(n, loops.clone()).unwrap();
        check_invariants(&g)?;
        let mut distinct: Vec<_> = loops.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(g.m(), distinct.len());
    }

    #[test]
    fn gnm_has_exact_edge_count(n in 2usize..80, frac in 0.0f64..=1.0, seed in any::<u64>()) {
        let max = n * (n - 1) / 2;
        let m = (frac * max as f64) as usize;
        let g = gen_gnm(n, m, seed).unwrap();
        prop_assert_eq!(g.m(), m);
        check_invariants(&g)?;
        prop_assert_eq!(&g, &gen_gnm(n, m, seed).unwrap());
    }

    #[test]
    fn edge_list_round_trips((n, pairs) in arb_edges()) {
        let g = build_graph(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap();
        let back = parse_edge_list(&render_edge_list(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn skewed_graphs_are_simple(n in 2usize..300, exponent in 1.5f64..4.0, seed in any::<u64>()) {
        check_invariants(&gen_named(Shape::Skewed { exponent }, n, seed).unwrap())?;
    }
}

#[test]
fn named_shapes_have_expected_sizes() {
    let n = 1_000;
    assert_eq!(gen_named(Shape::Path, n, 0).unwrap().m(), n - 1);
    let star = gen_named(Shape::Star, n, 0).unwrap();
    assert_eq!(star.m(), n - 1);
    assert_eq!(star.max_degree(), n - 1);
    let c = gen_named(Shape::CliquePlusIsolated { k: 40 }, n, 0).unwrap();
    assert_eq!(c.m(), 780);
    assert_eq!(c.degrees().iter().filter(|&&d| d == 0).count(), n - 40);
    assert!(gen_named(Shape::CliquePlusIsolated { k: 1_001 }, n, 0).is_err());
    assert!(gen_named(Shape::Path, 1, 0).is_err());
}

#[test]
fn dense_regime_generator_reaches_eight_n() {
    let g = gen_named(Shape::CliquePlusIsolated { k: 500 }, 10_000, 0).unwrap();
    assert_eq!(g.m(), 124_750);
    assert!(g.m() >= 8 * g.n());
}

#[test]
fn spec_strings_round_trip() {
    for s in [
        "gnm:100,300",
        "path:10",
        "star:7",
        "clique_plus_isolated:50,10",
        "skewed:200,2.5",
    ] {
        let spec: GraphSpec = s.parse().unwrap();
        assert_eq!(spec.to_string(), s);
        assert_eq!(spec.generate(3).unwrap().n(), spec.n());
    }
    for bad in [
        "",
        "gnm:10",
        "path",
        "mesh:4",
        "clique_plus_isolated:10,x",
        "gnm:-1,2",
    ] {
        assert!(bad.parse::<GraphSpec>().is_err(), "{bad} parsed");
    }
}

#[test]
fn edge_list_errors_carry_context() {
    assert!(matches!(
        parse_edge_list("3\n0 0\n"),
        Err(GraphError::SelfLoop(0))
    ));
    assert!(matches!(
        parse_edge_list("3\n0 1\n1 x\n"),
        Err(GraphError::Parse { line: 3, .. })
    ));
    assert!(matches!(
        parse_edge_list("3\n0 3\n"),
        Err(GraphError::Parse { line: 2, .. })
    ));
    assert_eq!(parse_edge_list("4\n\n1 2\n2 1\n").unwrap().m(), 1);
}

#[test]
fn edge_list_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.el");
    let g = gen_gnm(300, 900, 4).unwrap();
    write_edge_list(&g, &path).unwrap();
    assert_eq!(read_edge_list(&path).unwrap(), g);
}

#[test]
fn lower_bound_instance_shapes() {
    assert_eq!(planted_set_size(100), 21);
    assert_eq!(21 * 20 / 2, 210);
    let inst = gen_lowerbound_instance(100, 5).unwrap();
    assert_eq!(inst.planted_set.len(), 21);
    assert_eq!(inst.graph_a.m(), 100);
    assert_eq!(inst.graph_b.m(), 100 / 2 - 1);
    for g in [&inst.graph_a, &inst.graph_b] {
        for v in 0..g.n() {
            if !inst.is_planted(v) {
                assert_eq!(g.degree(v), 0);
            }
        }
        assert!(g.edges().iter().all(|e| {
            let (u, v) = e.endpoints();
            inst.is_planted(u) && inst.is_planted(v)
        }));
    }
    let big = gen_lowerbound_instance(10_000, 1).unwrap();
    assert_eq!(
        (big.planted_set.len(), big.graph_a.m(), big.graph_b.m()),
        (201, 10_000, 4_999)
    );
    assert!(gen_lowerbound_instance(6, 0).is_err());
}
