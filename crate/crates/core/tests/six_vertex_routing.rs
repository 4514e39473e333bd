use circan_core::graph::GraphFixture;
use circan_core::metrics::all_pairs_distances;
use circan_core::routing::parse_routing_fixture;
use circan_core::Error;

const GRAPH: &str = include_str!("../fixtures/six_vertex.graph");
const R1: &str = include_str!("../fixtures/r1.routes");
const R2: &str = include_str!("../fixtures/r2.routes");

fn fixture() -> GraphFixture {
    GraphFixture::parse(GRAPH).unwrap()
}

#[test]
fn graph_has_expected_degrees() {
    let f = fixture();
    assert_eq!(f.graph.order(), 6);
    assert_eq!(f.graph.edge_count(), 8);
    assert_eq!(f.graph.degrees(), vec![3, 3, 3, 3, 2, 2]);
}

#[test]
fn minimal_routing_loads() {
    let f = fixture();
    let r = parse_routing_fixture(R1, &f.graph, f.indexing).unwrap();
    assert!(r.is_minimal());
    let loads = r.load_profile();
    assert_eq!(loads.vertex_loads, vec![2, 4, 4, 0, 2, 2]);
    assert_eq!(loads.vertex_loads[2], 4);
    assert_eq!(loads.max_vertex_load, 4);
}

#[test]
fn non_minimal_routing_loads() {
    let f = fixture();
    let r = parse_routing_fixture(R2, &f.graph, f.indexing).unwrap();
    assert!(!r.is_minimal());
    let loads = r.load_profile();
    assert_eq!(loads.vertex_loads, vec![5, 4, 9, 3, 1, 4]);
    assert_eq!(loads.vertex_loads[2], 9);
    assert_eq!(loads.max_vertex_load, 9);
}

#[test]
fn load_totals_count_inner_vertices_and_edges() {
    let f = fixture();
    for text in [R1, R2] {
        let r = parse_routing_fixture(text, &f.graph, f.indexing).unwrap();
        let hops: u64 = r.pairs().map(|(_, _, p)| p.len() as u64 - 1).sum();
        let inner: u64 = r.pairs().map(|(_, _, p)| p.len() as u64 - 2).sum();
        let loads = r.load_profile();
        assert_eq!(loads.vertex_loads.iter().sum::<u64>(), inner);
        assert_eq!(loads.edge_loads.total(), hops);
    }
}

/// Any minimal routing has total inner load `sum over ordered pairs of
/// (d(x, y) - 1)`, which is 14 here. A per-vertex profile summing to 15,
/// such as (3, 4, 4, 0, 2, 2), cannot come from a minimal routing of this graph.
#[test]
fn minimal_routings_have_fixed_total_load() {
    let f = fixture();
    let dm = all_pairs_distances(&f.graph).unwrap();
    let total: u64 = dm
        .rows()
        .flatten()
        .filter(|&&d| d > 0)
        .map(|&d| u64::from(d) - 1)
        .sum();
    assert_eq!(total, 14);
    let r = parse_routing_fixture(R1, &f.graph, f.indexing).unwrap();
    assert_eq!(r.load_profile().vertex_loads.iter().sum::<u64>(), total);
    assert_ne!([3u64, 4, 4, 0, 2, 2].iter().sum::<u64>(), total);
}

#[test]
fn dropping_a_path_is_reported_in_fixture_labels() {
    let f = fixture();
    let truncated: String = R1
        .lines()
        .filter(|l| *l != "6 5")
        .map(|l| format!("{l}\n"))
        .collect();
    let err = parse_routing_fixture(&truncated, &f.graph, f.indexing).unwrap_err();
    assert_eq!(err, Error::MissingPair { x: 6, y: 5 });
}
