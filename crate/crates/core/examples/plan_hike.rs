//! Plans across a ridge with every heuristic schema and prints the bound
//! each search certifies.
//!
//! cargo run --example plan_hike

use nategory::berg::{plan, Connectivity, Domain, NodeId, Schema, SteepnessInterval, Terrain, TerrainGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let terrain = Terrain::parse_csv(include_str!("data/ridge.csv"))?;
    let sigma = SteepnessInterval::new(-1.5, 1.5)?;
    let graph = TerrainGraph::build(terrain, sigma, Connectivity::Four);
    let (from, to) = (graph.node(0, 0).unwrap(), graph.node(5, 5).unwrap());

    for schema in Schema::ALL {
        let r = plan(&graph, from, to, schema, Domain::Real)?;
        println!(
            "{:<10} heuristic at start {:>6}  length {:>5}  bound {:>5}  certified {}  expansions {}",
            schema.name(),
            schema.evaluate(&graph, from, to).to_string(),
            r.path.as_ref().map_or(f64::INFINITY, |p| p.length()),
            r.bound.value.to_string(),
            r.certified,
            r.expansions
        );
    }

    // A level-only walker cannot climb the ridge at all.
    let flat = TerrainGraph::build(
        graph.terrain().clone(),
        SteepnessInterval::new(0.0, 0.0)?,
        Connectivity::Eight,
    );
    let r = plan(&flat, NodeId(0), to, Schema::Geodesic, Domain::NonNeg)?;
    println!(
        "level walking: path {:?}, bound {}, certified {}",
        r.path.map(|p| p.length()),
        r.bound.value,
        r.certified
    );
    Ok(())
}
