mod common;

use nategory::berg::{
    certify_optimal, plan, schema_euclid, schema_geodesic, schema_steepness, BergPath, Bound, Connectivity, Domain,
    NodeId, Schema, SteepnessInterval, Terrain, TerrainGraph,
};

fn walk_length(graph: &TerrainGraph, nodes: &[NodeId]) -> f64 {
    nodes
        .windows(2)
        .map(|w| graph.edge_length(w[0], w[1]).expect("edge exists"))
        .sum()
}

#[test]
fn every_schema_finds_an_oracle_shortest_path_on_small_terrains() {
    for seed in 100..120 {
        let graph = common::random_graph(seed, 8, 8);
        let to = NodeId(graph.node_count() - 1);
        let oracle = common::dijkstra_to(&graph, to);
        for from in graph.nodes().step_by(5) {
            for schema in Schema::ALL {
                let r = plan(&graph, from, to, schema, Domain::Real).unwrap();
                match &r.path {
                    Some(p) => {
                        assert_eq!(p.source(), from);
                        assert_eq!(p.target(), to);
                        let walked = walk_length(&graph, p.nodes());
                        assert!(
                            (walked - oracle[from.0]).abs() <= 1e-9 * walked.max(1.0),
                            "seed {seed} {schema}"
                        );
                        assert!(r.certified);
                        assert!(certify_optimal(p, r.bound.value));
                    }
                    None => {
                        assert!(oracle[from.0].is_infinite(), "seed {seed} {schema} missed a path");
                        assert_eq!(r.bound.value, Bound::Infinite);
                    }
                }
            }
        }
    }
}

#[test]
fn schemas_are_admissible_and_ordered() {
    for seed in 0..10 {
        let graph = common::random_graph(seed, 10, 10);
        let to = NodeId(37);
        let oracle = common::dijkstra_to(&graph, to);
        for v in graph.nodes() {
            let e = schema_euclid(&graph, v, to).finite().unwrap();
            let g = schema_geodesic(&graph, v, to);
            assert!(e <= oracle[v.0] + 1e-9);
            match g {
                Bound::Finite(g) => assert!(g <= oracle[v.0] + 1e-9 && e <= g + 1e-9),
                Bound::Infinite => assert!(oracle[v.0].is_infinite()),
            }
            if let Bound::Finite(s) = schema_steepness(&graph, v, to) {
                assert!(s <= oracle[v.0] + 1e-9);
            }
        }
    }
}

#[test]
fn steepness_bound_uses_the_height_gap() {
    // Climbing 4 m at most 0.5 m per metre of ground needs at least 8 m of ground.
    let terrain = Terrain::from_fn(1, 12, 1.0, |_, c| 0.4 * c.min(10) as f64).unwrap();
    let graph = TerrainGraph::build(terrain, SteepnessInterval::new(-0.5, 0.5).unwrap(), Connectivity::Four);
    let (a, b) = (graph.node(0, 0).unwrap(), graph.node(0, 11).unwrap());
    let s = schema_steepness(&graph, a, b).finite().unwrap();
    let d = common::dijkstra(&graph, a)[b.0];
    assert!(s >= 8.0 - 1e-9, "{s}");
    assert!(d.is_finite() && s <= d + 1e-9);
}

#[test]
fn unreachable_goal_yields_an_infinite_certificate() {
    let terrain = Terrain::parse_csv("2,3,1\n0,0,5\n0,0,5\n").unwrap();
    let graph = TerrainGraph::build(terrain, SteepnessInterval::new(-1.0, 1.0).unwrap(), Connectivity::Eight);
    for schema in Schema::ALL {
        let r = plan(&graph, NodeId(0), NodeId(2), schema, Domain::NonNeg).unwrap();
        assert!(r.path.is_none());
        assert_eq!(r.bound.value, Bound::Infinite);
        assert!(r.certified);
    }
}

#[test]
fn asymmetric_steepness_makes_direction_matter() {
    let terrain = Terrain::from_fn(1, 4, 1.0, |_, c| c as f64).unwrap();
    let graph = TerrainGraph::build(terrain, SteepnessInterval::new(0.0, 1.5).unwrap(), Connectivity::Four);
    let (lo, hi) = (graph.node(0, 0).unwrap(), graph.node(0, 3).unwrap());
    assert!(plan(&graph, lo, hi, Schema::Euclid, Domain::Real)
        .unwrap()
        .path
        .is_some());
    assert!(plan(&graph, hi, lo, Schema::Euclid, Domain::Real)
        .unwrap()
        .path
        .is_none());
    assert!(common::dijkstra(&graph, hi)[lo.0].is_infinite());
}

#[test]
fn trivial_query_returns_the_empty_path() {
    let graph = common::random_graph(3, 5, 5);
    let r = plan(&graph, NodeId(7), NodeId(7), Schema::Geodesic, Domain::IntFloor).unwrap();
    assert_eq!(r.path, Some(BergPath::trivial(NodeId(7))));
    assert!(r.certified);
}

#[test]
fn unknown_nodes_are_rejected() {
    let graph = common::random_graph(3, 5, 5);
    assert!(plan(&graph, NodeId(0), NodeId(25), Schema::Zero, Domain::Real).is_err());
}
