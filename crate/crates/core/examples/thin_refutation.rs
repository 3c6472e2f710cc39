//! In a preorder, a refutation X ⇢ Z exists exactly when Z is unreachable
//! from X, and then no intermediate Y splits a route X → Y → Z.
//!
//! cargo run --example thin_refutation

use nategory::category::{thin_decomposition_check, ThinCategory, ThinNategory};
use nategory::nategory::FiniteNategory;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names = ["camp", "col", "summit", "lake"];
    let thin = ThinCategory::from_graph_reachability(&names, &[(0, 1), (1, 2), (3, 0)])?;
    let inst = ThinNategory::new(&thin);
    for x in 0..thin.len() {
        for z in 0..thin.len() {
            if !inst.nom(&x, &z)?.is_empty() {
                println!("{} ⇢ {}: no route", thin.name(x), thin.name(z));
            }
        }
    }
    let report = thin_decomposition_check(&thin);
    println!(
        "decomposition: {} cases, {} violations",
        report.checked, report.violations
    );
    Ok(())
}
