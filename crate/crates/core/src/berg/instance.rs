use std::fmt;
use std::str::FromStr;

use crate::nategory::{ArrowSampler, Nategory, NategoryError};

use super::{simple_paths, BergError, BergPath, NodeId, Schema, TerrainGraph, EPSILON};

/// A lower bound on path length, possibly `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    Finite(f64),
    Infinite,
}

impl Bound {
    pub fn is_infinite(self) -> bool {
        matches!(self, Bound::Infinite)
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Bound::Finite(v) => Some(v),
            Bound::Infinite => None,
        }
    }

    /// Equal up to [`EPSILON`] relative to the larger magnitude (absolute
    /// below 1).
    pub fn approx_eq(self, other: Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => (a - b).abs() <= EPSILON * a.abs().max(b.abs()).max(1.0),
            (a, b) => a.is_infinite() && b.is_infinite(),
        }
    }

    /// `length < self`.
    pub fn excludes(self, length: f64) -> bool {
        match self {
            Bound::Finite(v) => length < v,
            Bound::Infinite => true,
        }
    }
}

impl From<f64> for Bound {
    fn from(v: f64) -> Self {
        if v == f64::INFINITY {
            Bound::Infinite
        } else {
            Bound::Finite(v)
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Infinite => f.write_str("inf"),
        }
    }
}

/// Value set and shift rule for norphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// `ℝ≥0 ∪ {+∞}`, shift `max(n − l, 0)`.
    NonNeg,
    /// `ℝ ∪ {+∞}`, shift `n − l`.
    Real,
    /// `ℤ ∪ {+∞}`, shift `floor(n − l)`.
    IntFloor,
}

impl Domain {
    pub const ALL: [Domain; 3] = [Domain::NonNeg, Domain::Real, Domain::IntFloor];

    pub fn name(self) -> &'static str {
        match self {
            Domain::NonNeg => "nonneg",
            Domain::Real => "real",
            Domain::IntFloor => "intfloor",
        }
    }

    /// The bound left over after walking `length` meters.
    pub fn shift(self, n: Bound, length: f64) -> Bound {
        match n {
            Bound::Infinite => Bound::Infinite,
            Bound::Finite(v) => Bound::Finite(match self {
                Domain::NonNeg => (v - length).max(0.0),
                Domain::Real => v - length,
                Domain::IntFloor => (v - length).floor(),
            }),
        }
    }

    pub fn admits(self, n: Bound) -> bool {
        match (self, n) {
            (_, Bound::Infinite) => true,
            (Domain::NonNeg, Bound::Finite(v)) => v.is_finite() && v >= 0.0,
            (Domain::Real, Bound::Finite(v)) => v.is_finite(),
            (Domain::IntFloor, Bound::Finite(v)) => v.is_finite() && v.fract() == 0.0,
        }
    }

    /// The strongest bound in this domain that is implied by the real bound
    /// `n`: floored for integers, clamped at zero for non-negative values.
    pub fn coerce(self, n: Bound) -> Bound {
        match (self, n) {
            (_, Bound::Infinite) => Bound::Infinite,
            (Domain::NonNeg, Bound::Finite(v)) => Bound::Finite(v.max(0.0)),
            (Domain::Real, b) => b,
            (Domain::IntFloor, Bound::Finite(v)) => Bound::Finite(v.floor()),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Domain {
    type Err = BergError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Domain::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| BergError::Usage(format!("unknown domain `{s}` (nonneg|real|intfloor)")))
    }
}

/// A norphism `source ⇢ target`: every path between them is at least `value` long.
///
/// Equality compares values up to [`EPSILON`] relative error, so that
/// shifting by `a` then `b` equals shifting by `a + b` despite rounding.
#[derive(Debug, Clone, Copy)]
pub struct BergNorphism {
    pub source: NodeId,
    pub target: NodeId,
    pub value: Bound,
}

impl PartialEq for BergNorphism {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.value.approx_eq(other.value)
    }
}

/// Paths on a terrain graph with numeric lower bounds as norphisms.
#[derive(Debug, Clone, Copy)]
pub struct BergNategory<'g> {
    graph: &'g TerrainGraph,
    domain: Domain,
}

impl<'g> BergNategory<'g> {
    pub fn new(graph: &'g TerrainGraph, domain: Domain) -> Self {
        BergNategory { graph, domain }
    }

    pub fn graph(&self) -> &'g TerrainGraph {
        self.graph
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// A norphism with a value checked against the domain.
    pub fn norphism(&self, source: NodeId, target: NodeId, value: Bound) -> Result<BergNorphism, BergError> {
        for n in [source, target] {
            if !self.graph.contains(n) {
                return Err(BergError::UnknownNode(n.to_string()));
            }
        }
        if !self.domain.admits(value) {
            return Err(BergError::Usage(format!("{value} is not a {} value", self.domain)));
        }
        Ok(BergNorphism { source, target, value })
    }
}

impl Nategory for BergNategory<'_> {
    type Object = NodeId;
    type Morphism = BergPath;
    type Norphism = BergNorphism;

    fn mor_source(&self, f: &BergPath) -> NodeId {
        f.source()
    }

    fn mor_target(&self, f: &BergPath) -> NodeId {
        f.target()
    }

    fn nor_source(&self, n: &BergNorphism) -> NodeId {
        n.source
    }

    fn nor_target(&self, n: &BergNorphism) -> NodeId {
        n.target
    }

    fn identity(&self, x: &NodeId) -> BergPath {
        BergPath::trivial(*x)
    }

    fn compose_unchecked(&self, f: &BergPath, g: &BergPath) -> BergPath {
        f.concat_unchecked(g)
    }

    fn incompat_unchecked(&self, n: &BergNorphism, f: &BergPath) -> bool {
        n.value.excludes(f.length())
    }

    fn ncompose_left_unchecked(&self, f: &BergPath, n: &BergNorphism) -> BergNorphism {
        BergNorphism {
            source: f.target(),
            target: n.target,
            value: self.domain.shift(n.value, f.length()),
        }
    }

    fn ncompose_right_unchecked(&self, n: &BergNorphism, g: &BergPath) -> BergNorphism {
        BergNorphism {
            source: n.source,
            target: g.source(),
            value: self.domain.shift(n.value, g.length()),
        }
    }
}

/// Bounded scope for law checking: all simple paths of at most `max_edges`
/// edges, and per object pair a fixed list of bound values plus the values
/// of the chosen schemas, coerced into the instance's domain.
#[derive(Debug, Clone)]
pub struct PathSampler {
    max_edges: usize,
    values: Vec<Bound>,
    schemas: Vec<Schema>,
}

impl PathSampler {
    pub fn new(max_edges: usize, values: Vec<Bound>, schemas: Vec<Schema>) -> Self {
        PathSampler {
            max_edges,
            values,
            schemas,
        }
    }

    pub fn max_edges(&self) -> usize {
        self.max_edges
    }

    /// Simple paths grouped by `(source, target)`, indexed `s * n + t`.
    pub fn paths_by_pair(&self, graph: &TerrainGraph) -> Vec<Vec<BergPath>> {
        let n = graph.node_count();
        let mut by_pair = vec![Vec::new(); n * n];
        for p in simple_paths(graph, self.max_edges) {
            by_pair[p.source().0 * n + p.target().0].push(p);
        }
        by_pair
    }

    fn bounds_for(&self, inst: &BergNategory<'_>, x: NodeId, y: NodeId) -> Vec<Bound> {
        let d = inst.domain;
        let mut out: Vec<Bound> = Vec::new();
        let candidates = self
            .values
            .iter()
            .copied()
            .chain(self.schemas.iter().map(|s| s.evaluate(inst.graph, x, y)));
        for b in candidates {
            let b = d.coerce(b);
            if d.admits(b) && !out.contains(&b) {
                out.push(b);
            }
        }
        out
    }
}

impl ArrowSampler<BergNategory<'_>> for PathSampler {
    fn objects(&self, inst: &BergNategory<'_>) -> Vec<NodeId> {
        inst.graph.nodes().collect()
    }

    fn morphisms(&self, inst: &BergNategory<'_>, x: &NodeId, y: &NodeId) -> Result<Vec<BergPath>, NategoryError> {
        // Depth-first from `x` only; cheaper than enumerating every source.
        let mut out = Vec::new();
        let mut on_path = vec![false; inst.graph.node_count()];
        on_path[x.0] = true;
        collect_to(
            inst.graph,
            self.max_edges,
            &BergPath::trivial(*x),
            *y,
            &mut on_path,
            &mut out,
        );
        Ok(out)
    }

    fn norphisms(&self, inst: &BergNategory<'_>, x: &NodeId, y: &NodeId) -> Result<Vec<BergNorphism>, NategoryError> {
        Ok(self
            .bounds_for(inst, *x, *y)
            .into_iter()
            .map(|value| BergNorphism {
                source: *x,
                target: *y,
                value,
            })
            .collect())
    }
}

fn collect_to(
    graph: &TerrainGraph,
    left: usize,
    p: &BergPath,
    goal: NodeId,
    on_path: &mut [bool],
    out: &mut Vec<BergPath>,
) {
    if p.target() == goal {
        out.push(p.clone());
    }
    if left == 0 {
        return;
    }
    for &(next, len) in graph.out_edges(p.target()) {
        if on_path[next.0] {
            continue;
        }
        on_path[next.0] = true;
        collect_to(graph, left - 1, &p.push_edge(next, len), goal, on_path, out);
        on_path[next.0] = false;
    }
}
