//! Integer-valued bounds rounded down after each step do not compose: two
//! 1.5 m legs taken from a 10 m bound give 7 in one go but 6 step by step.
//!
//! cargo run --example integer_bounds

use nategory::berg::PathSampler;
use nategory::berg::{
    BergNategory, BergPath, Bound, Connectivity, Domain, NodeId, SteepnessInterval, Terrain, TerrainGraph,
};
use nategory::nategory::{check_pn_properties, Nategory, Scope};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let terrain = Terrain::from_fn(1, 3, 1.5, |_, _| 0.0)?;
    let graph = TerrainGraph::build(terrain, SteepnessInterval::unconstrained(), Connectivity::Four);
    let ints = BergNategory::new(&graph, Domain::IntFloor);

    let g = BergPath::from_nodes(&graph, vec![NodeId(0), NodeId(1)])?;
    let h = BergPath::from_nodes(&graph, vec![NodeId(1), NodeId(2)])?;
    let q = ints.norphism(NodeId(0), NodeId(2), Bound::Finite(10.0))?;
    let whole = ints.ncompose_right(&q, &ints.compose(&g, &h)?)?;
    let stepwise = ints.ncompose_right(&ints.ncompose_right(&q, &h)?, &g)?;
    println!("q ▸ (g ∘ h) = {}, (q ▸ h) ▸ g = {}", whole.value, stepwise.value);

    for domain in Domain::ALL {
        let inst = BergNategory::new(&graph, domain);
        let sampler = PathSampler::new(2, vec![Bound::Finite(10.0)], vec![]);
        let scope = Scope::sampled(&inst, &sampler)?;
        let contravar = &check_pn_properties(&inst, &scope)[3];
        println!(
            "{domain:<8} contravar: {} of {} cases fail",
            contravar.violations, contravar.checked
        );
    }
    Ok(())
}
