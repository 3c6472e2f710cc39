//! Infeasibility from feasibility: composing "pears cost 5 CHF/kg" (as an
//! infeasibility relation) with "raisins cost 10 CHF/kg" shows that 10 kg of
//! pears cannot come from a budget that only just buys 4 kg of raisins.
//!
//! cargo run --example codesign_pears

use nategory::codesign::{derived_nps, np_compose_right, parse_codesign, right_witnesses, PearsAndRaisins};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ex = PearsAndRaisins::new();
    let c = ex.composite();
    let w = right_witnesses(&ex.n, &ex.d, 10, 4)?;
    println!(
        "(n ▸ d)(10 kg pears, 4 kg raisins) = {} via q in {:?}..={:?} CHF",
        c.get(10, 4),
        w.first(),
        w.last()
    );
    let most = (0..ex.pears.len()).take_while(|&p| !c.get(p, 4)).last().unwrap();
    println!("with the budget of 4 kg of raisins, up to {most} kg of pears are not ruled out");

    let (a, b) = derived_nps(&ex.d);
    println!(
        "derived from d alone: 35 CHF cannot buy 4 kg raisins: {} / {}",
        a.get(35, 4),
        b.get(35, 3)
    );

    let doc = parse_codesign(include_str!("data/shapes.codesign"))?;
    let (lack, buy) = (doc.np("lack").unwrap(), doc.dp("buy").unwrap());
    let shape = doc.poset("Shape").unwrap();
    let composite = np_compose_right(lack, buy)?;
    for (i, p) in shape.elements().iter().enumerate() {
        let row: Vec<&str> = (0..shape.len())
            .map(|j| if composite.get(i, j) { "⊤" } else { "⊥" })
            .collect();
        println!("(lack ▸ buy)({p}, -) = {}", row.join(" "));
    }
    Ok(())
}
