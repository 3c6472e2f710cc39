//! Packages a nategory's hom-sets as dialectica objects and checks that
//! composition is a valid morphism out of the product of hom-objects.
//!
//! cargo run --example gset_bridge

use nategory::category::{family, PowersetNategory, WeakNategory};
use nategory::gset::{compare_bridge, g_product_obj, pn_composition_morphism, GObject, DEFAULT_CAP};
use nategory::nategory::Scope;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let o = GObject::from_fn(2, 2, |q, a| q == a);
    let p = g_product_obj(&o, &GObject::unit(), DEFAULT_CAP)?;
    println!(
        "o ⊔ unit: {} questions, {} answers, same κ: {}",
        p.questions(),
        p.answers(),
        p.kappa_table() == o.kappa_table()
    );

    let cats = family::standard(2);
    let cat = cats.iter().max_by_key(|c| c.morphism_count()).unwrap();
    let inst = PowersetNategory::new(cat);
    let scope = Scope::exhaustive(&inst)?;
    let m = pn_composition_morphism(&inst, &scope, 0, 1, 2, DEFAULT_CAP)?;
    println!(
        "powerset Hom(0,1) ⊔ Hom(1,2) -> Hom(0,2): valid {}, refined {}",
        m.is_valid(),
        m.report().refined()
    );

    for (name, cmp) in [
        ("powerset", compare_bridge(&inst, &scope, DEFAULT_CAP)?),
        ("weak", {
            let weak = WeakNategory::new(cat);
            compare_bridge(&weak, &Scope::exhaustive(&weak)?, DEFAULT_CAP)?
        }),
    ] {
        println!(
            "{name:<8} triples {:>3}  valid {:>3}  refined {:>3}  agrees with direct checks: {}",
            cmp.triples,
            cmp.valid,
            cmp.refined,
            cmp.agrees()
        );
    }
    Ok(())
}
