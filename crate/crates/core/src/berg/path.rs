use super::{BergError, NodeId, TerrainGraph};

/// A walk along graph edges. A single node is the trivial path of length 0.
///
/// Equality compares node sequences only; the cached length is derived data
/// and may differ in the last bits depending on how a path was assembled.
#[derive(Debug, Clone)]
pub struct BergPath {
    nodes: Vec<NodeId>,
    length: f64,
}

impl PartialEq for BergPath {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes
    }
}

impl Eq for BergPath {}

impl BergPath {
    pub fn trivial(node: NodeId) -> Self {
        BergPath {
            nodes: vec![node],
            length: 0.0,
        }
    }

    /// Checks every consecutive pair against the graph's edges.
    pub fn from_nodes(graph: &TerrainGraph, nodes: Vec<NodeId>) -> Result<Self, BergError> {
        let first = *nodes.first().ok_or(BergError::EmptyPath)?;
        if !graph.contains(first) {
            return Err(BergError::UnknownNode(first.to_string()));
        }
        let mut length = 0.0;
        for w in nodes.windows(2) {
            length += graph
                .edge_length(w[0], w[1])
                .ok_or(BergError::NotAnEdge { from: w[0], to: w[1] })?;
        }
        Ok(BergPath { nodes, length })
    }

    /// Appends an edge whose length the caller has already looked up.
    pub(crate) fn push_edge(&self, to: NodeId, len: f64) -> Self {
        let mut nodes = Vec::with_capacity(self.nodes.len() + 1);
        nodes.extend_from_slice(&self.nodes);
        nodes.push(to);
        BergPath {
            nodes,
            length: self.length + len,
        }
    }

    pub fn source(&self) -> NodeId {
        self.nodes[0]
    }

    pub fn target(&self) -> NodeId {
        *self.nodes.last().expect("paths are non-empty")
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.nodes.len() == 1
    }

    /// `self` followed by `next`; `length = self.length + next.length`.
    pub fn concat(&self, next: &BergPath) -> Result<Self, BergError> {
        if self.target() != next.source() {
            return Err(BergError::EndpointMismatch {
                end: self.target(),
                start: next.source(),
            });
        }
        Ok(self.concat_unchecked(next))
    }

    pub(crate) fn concat_unchecked(&self, next: &BergPath) -> Self {
        let mut nodes = Vec::with_capacity(self.nodes.len() + next.nodes.len() - 1);
        nodes.extend_from_slice(&self.nodes);
        nodes.extend_from_slice(&next.nodes[1..]);
        BergPath {
            nodes,
            length: self.length + next.length,
        }
    }
}

/// Every simple path with at most `max_edges` edges, grouped by source in
/// node order and, within a source, in depth-first order over sorted
/// out-edges. Trivial paths are included.
pub fn simple_paths(graph: &TerrainGraph, max_edges: usize) -> Vec<BergPath> {
    let mut out = Vec::new();
    let mut on_path = vec![false; graph.node_count()];
    for start in graph.nodes() {
        let p = BergPath::trivial(start);
        on_path[start.0] = true;
        extend(graph, max_edges, &p, &mut on_path, &mut out);
        on_path[start.0] = false;
    }
    out
}

fn extend(graph: &TerrainGraph, left: usize, p: &BergPath, on_path: &mut [bool], out: &mut Vec<BergPath>) {
    out.push(p.clone());
    if left == 0 {
        return;
    }
    for &(next, len) in graph.out_edges(p.target()) {
        if on_path[next.0] {
            continue;
        }
        on_path[next.0] = true;
        extend(graph, left - 1, &p.push_edge(next, len), on_path, out);
        on_path[next.0] = false;
    }
}
