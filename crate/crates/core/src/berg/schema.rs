use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use super::{BergError, Bound, NodeId, SteepnessInterval, TerrainGraph};

/// The built-in norphism schemas. Each yields a lower bound on the length of
/// every path between two nodes of the graph it is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Schema {
    /// Always `0`.
    Zero,
    /// Straight-line distance between the two 3D positions.
    Euclid,
    /// Shortest-path distance on the same terrain with every neighbor edge
    /// allowed, whatever its slope.
    Geodesic,
    /// Horizontal run needed to change altitude within the slope limits.
    Steepness,
}

impl Schema {
    pub const ALL: [Schema; 4] = [Schema::Zero, Schema::Euclid, Schema::Geodesic, Schema::Steepness];

    pub fn name(self) -> &'static str {
        match self {
            Schema::Zero => "zero",
            Schema::Euclid => "euclid",
            Schema::Geodesic => "geodesic",
            Schema::Steepness => "steepness",
        }
    }

    pub fn evaluate(self, graph: &TerrainGraph, x: NodeId, y: NodeId) -> Bound {
        match self {
            Schema::Zero => schema_zero(),
            Schema::Euclid => schema_euclid(graph, x, y),
            Schema::Geodesic => schema_geodesic(graph, x, y),
            Schema::Steepness => schema_steepness(graph, x, y),
        }
    }

    /// `self(v, goal)` for every node `v`, as raw distances (`+∞` allowed).
    pub fn heuristic(self, graph: &TerrainGraph, goal: NodeId) -> Vec<f64> {
        match self {
            // The unconstrained graph is symmetric, so one search from the
            // goal gives every node's distance to it.
            Schema::Geodesic => unconstrained_distances(graph, goal),
            _ => graph
                .nodes()
                .map(|v| match self.evaluate(graph, v, goal) {
                    Bound::Finite(d) => d,
                    Bound::Infinite => f64::INFINITY,
                })
                .collect(),
        }
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Schema {
    type Err = BergError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Schema::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| BergError::Usage(format!("unknown schema `{s}` (zero|euclid|geodesic|steepness)")))
    }
}

pub fn schema_zero() -> Bound {
    Bound::Finite(0.0)
}

pub fn schema_euclid(graph: &TerrainGraph, x: NodeId, y: NodeId) -> Bound {
    let (p, q) = (graph.position(x), graph.position(y));
    let d = [q[0] - p[0], q[1] - p[1], q[2] - p[2]];
    Bound::Finite((d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt())
}

pub fn schema_geodesic(graph: &TerrainGraph, x: NodeId, y: NodeId) -> Bound {
    Bound::from(unconstrained_distances(graph, x)[y.0])
}

/// Climbing `Δz` under slope at most `σ_U` needs `Δz / σ_U` of horizontal
/// run; descending needs `|Δz| / |σ_L|`. When the slope limit forbids the
/// required direction outright (`σ_U ≤ 0` for a climb, `σ_L ≥ 0` for a
/// descent) the bound is `+∞`. Level pairs give `0`.
pub fn schema_steepness(graph: &TerrainGraph, x: NodeId, y: NodeId) -> Bound {
    steepness_bound(graph.position(x)[2], graph.position(y)[2], graph.sigma())
}

fn steepness_bound(z1: f64, z2: f64, sigma: SteepnessInterval) -> Bound {
    let dz = (z2 - z1).abs();
    match z1.partial_cmp(&z2) {
        Some(Ordering::Less) if sigma.hi() > 0.0 => Bound::Finite(dz / sigma.hi()),
        Some(Ordering::Greater) if sigma.lo() < 0.0 => Bound::Finite(dz / sigma.lo().abs()),
        Some(Ordering::Equal) => Bound::Finite(0.0),
        _ => Bound::Infinite,
    }
}

fn unconstrained_distances(graph: &TerrainGraph, source: NodeId) -> Vec<f64> {
    let free = TerrainGraph::build(
        graph.terrain().clone(),
        SteepnessInterval::unconstrained(),
        graph.connectivity(),
    );
    dijkstra(&free, source)
}

/// Heap entry ordered so that `BinaryHeap` pops the smallest key first and,
/// among equal keys, the smallest node index.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Entry {
    pub key: f64,
    pub dist: f64,
    pub node: usize,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.key.total_cmp(&self.key).then_with(|| other.node.cmp(&self.node))
    }
}

pub(crate) fn dijkstra(graph: &TerrainGraph, source: NodeId) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; graph.node_count()];
    let mut heap = BinaryHeap::new();
    dist[source.0] = 0.0;
    heap.push(Entry {
        key: 0.0,
        dist: 0.0,
        node: source.0,
    });
    while let Some(Entry { dist: d, node, .. }) = heap.pop() {
        if d > dist[node] {
            continue;
        }
        for &(next, len) in graph.out_edges(NodeId(node)) {
            let nd = d + len;
            if nd < dist[next.0] {
                dist[next.0] = nd;
                heap.push(Entry {
                    key: nd,
                    dist: nd,
                    node: next.0,
                });
            }
        }
    }
    dist
}
