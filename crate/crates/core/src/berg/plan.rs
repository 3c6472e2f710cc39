use std::collections::BinaryHeap;

use super::schema::Entry;
use super::{BergError, BergNorphism, BergPath, Bound, Domain, NodeId, Schema, TerrainGraph};

/// Relative tolerance for length comparisons.
pub const EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PlanResult {
    /// A shortest path, or `None` when the goal is unreachable.
    pub path: Option<BergPath>,
    /// The lower bound established by the search, in the requested domain:
    /// the shortest distance, or `+∞` when no path exists.
    pub bound: BergNorphism,
    /// Whether `bound` certifies the returned path as optimal, or certifies
    /// infeasibility when there is no path.
    pub certified: bool,
    /// Number of heap pops that expanded a node.
    pub expansions: usize,
}

/// `length(f) ≤ n` up to [`EPSILON`]: with `n` a valid lower bound, `f` is optimal.
pub fn certify_optimal(f: &BergPath, n: Bound) -> bool {
    match n {
        Bound::Infinite => true,
        Bound::Finite(v) => f.length() <= v + EPSILON * f.length().abs().max(v.abs()),
    }
}

/// A* from `from` to `to` with `schema(v, to)` as heuristic.
///
/// Nodes are reopened when a cheaper route is found, so any admissible
/// schema yields a shortest path. Among equal priorities the smallest node
/// index is expanded first.
pub fn plan(
    graph: &TerrainGraph,
    from: NodeId,
    to: NodeId,
    schema: Schema,
    domain: Domain,
) -> Result<PlanResult, BergError> {
    for n in [from, to] {
        if !graph.contains(n) {
            return Err(BergError::UnknownNode(n.to_string()));
        }
    }
    let h = schema.heuristic(graph, to);
    let n = graph.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut parent: Vec<Option<NodeId>> = vec![None; n];
    let mut heap = BinaryHeap::new();
    let mut expansions = 0;
    dist[from.0] = 0.0;
    if h[from.0].is_finite() {
        heap.push(Entry {
            key: h[from.0],
            dist: 0.0,
            node: from.0,
        });
    }
    let mut reached = false;
    while let Some(Entry { dist: d, node, .. }) = heap.pop() {
        if d > dist[node] {
            continue;
        }
        if node == to.0 {
            reached = true;
            break;
        }
        expansions += 1;
        for &(next, len) in graph.out_edges(NodeId(node)) {
            let nd = d + len;
            if nd < dist[next.0] {
                dist[next.0] = nd;
                parent[next.0] = Some(NodeId(node));
                if h[next.0].is_finite() {
                    heap.push(Entry {
                        key: nd + h[next.0],
                        dist: nd,
                        node: next.0,
                    });
                }
            }
        }
    }
    if !reached {
        return Ok(PlanResult {
            path: None,
            bound: BergNorphism {
                source: from,
                target: to,
                value: Bound::Infinite,
            },
            certified: true,
            expansions,
        });
    }
    let mut nodes = vec![to];
    while let Some(p) = parent[nodes.last().expect("non-empty").0] {
        nodes.push(p);
        if p == from {
            break;
        }
    }
    nodes.reverse();
    let path = BergPath::from_nodes(graph, nodes)?;
    let value = domain.coerce(Bound::Finite(dist[to.0]));
    Ok(PlanResult {
        certified: certify_optimal(&path, value),
        path: Some(path),
        bound: BergNorphism {
            source: from,
            target: to,
            value,
        },
        expansions,
    })
}
