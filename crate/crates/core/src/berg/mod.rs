//! Hiking paths on a gridded terrain.
//!
//! Morphisms are walks along the edges of a [`TerrainGraph`], whose edges are
//! the neighbor pairs with slope inside a [`SteepnessInterval`]. Norphisms
//! are lower bounds on path length in one of three [`Domain`]s; a bound `n`
//! is incompatible with every path shorter than `n`. The [`plan`] function
//! runs A* with one of four bound [`Schema`]s as heuristic and reports the
//! bound it established, which certifies either optimality or infeasibility.
//!
//! Positions are `⟨col · cell, row · cell, height⟩`. Objects are positions
//! only; velocities play no role on a grid.

mod instance;
mod path;
mod plan;
mod schema;
mod terrain;

use thiserror::Error;

pub use instance::{BergNategory, BergNorphism, Bound, Domain, PathSampler};
pub use path::{simple_paths, BergPath};
pub use plan::{certify_optimal, plan, PlanResult, EPSILON};
pub use schema::{schema_euclid, schema_geodesic, schema_steepness, schema_zero, Schema};
pub use terrain::{edge_steepness, Connectivity, NodeId, SteepnessInterval, Terrain, TerrainGraph};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BergError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid terrain: {0}")]
    InvalidTerrain(String),
    #[error("invalid steepness interval [{lo}, {hi}]: lower end must not exceed upper end")]
    InvalidSigma { lo: f64, hi: f64 },
    #[error("points share a horizontal position; steepness is undefined")]
    DegenerateEdge,
    #[error("unknown node {0}")]
    UnknownNode(String),
    #[error("a path needs at least one node")]
    EmptyPath,
    #[error("no edge from {from} to {to}")]
    NotAnEdge { from: NodeId, to: NodeId },
    #[error("cannot concatenate: path ends at {end} but next starts at {start}")]
    EndpointMismatch { end: NodeId, start: NodeId },
    #[error("{0}")]
    Usage(String),
}
