use serde::Serialize;

use crate::berg::{plan, BergError, Connectivity, Domain, Schema, SteepnessInterval, Terrain, TerrainGraph};

/// Inputs of the `plan` command, already parsed from flags.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanRequest {
    pub terrain_csv: String,
    pub start: (usize, usize),
    pub goal: (usize, usize),
    pub sigma: (f64, f64),
    pub connectivity: Connectivity,
    pub schema: Schema,
    pub domain: Domain,
}

/// Field order is part of the output format.
#[derive(Debug, Serialize)]
struct PlanOutput {
    path: Vec<[usize; 2]>,
    length_m: f64,
    bound_m: f64,
    certified: bool,
    schema: &'static str,
    domain: &'static str,
    sigma: [f64; 2],
}

/// Parses `r,c`.
pub fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `row,col`, found `{s}`"))?;
    let p = |v: &str| {
        v.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid index `{}`", v.trim()))
    };
    Ok((p(r)?, p(c)?))
}

/// Parses `lo,hi`; `inf` and `-inf` are accepted.
pub fn parse_sigma(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `lo,hi`, found `{s}`"))?;
    let p = |v: &str| {
        v.trim()
            .parse::<f64>()
            .map_err(|_| format!("invalid number `{}`", v.trim()))
    };
    Ok((p(lo)?, p(hi)?))
}

/// Runs the planner and renders the result as TOML.
pub fn cmd_plan(req: &PlanRequest) -> Result<String, BergError> {
    let terrain = Terrain::parse_csv(&req.terrain_csv)?;
    let sigma = SteepnessInterval::new(req.sigma.0, req.sigma.1)?;
    let graph = TerrainGraph::build(terrain, sigma, req.connectivity);
    let node = |(r, c): (usize, usize)| {
        graph.node(r, c).ok_or_else(|| {
            BergError::UnknownNode(format!(
                "({r},{c}) outside the {}x{} grid",
                graph.terrain().rows(),
                graph.terrain().cols()
            ))
        })
    };
    let (from, to) = (node(req.start)?, node(req.goal)?);
    let result = plan(&graph, from, to, req.schema, req.domain)?;
    let (path, length_m) = match &result.path {
        Some(p) => (
            p.nodes()
                .iter()
                .map(|&n| {
                    let (r, c) = graph.cell(n);
                    [r, c]
                })
                .collect(),
            p.length(),
        ),
        None => (Vec::new(), f64::INFINITY),
    };
    let out = PlanOutput {
        path,
        length_m,
        bound_m: result.bound.value.finite().unwrap_or(f64::INFINITY),
        certified: result.certified,
        schema: req.schema.name(),
        domain: req.domain.name(),
        sigma: [sigma.lo(), sigma.hi()],
    };
    Ok(toml::to_string(&out).expect("plain fields serialise"))
}
