use std::fmt::Write;

use crate::codesign::{derived_nps, dp_identity, incompat_dp, no_free_lunch, right_witnesses, PearsAndRaisins};

fn mark(b: bool) -> char {
    if b {
        '⊤'
    } else {
        '⊥'
    }
}

/// Raisin amounts shown; beyond 6 kg nothing fits in 60 CHF.
const RAISIN_COLUMNS: usize = 8;

/// The pears/CHF/raisins tables.
pub fn cmd_codesign_demo() -> String {
    let ex = PearsAndRaisins::new();
    let c = ex.composite();
    let mut s = String::new();
    let w = &mut s;
    writeln!(w, "posets: pears 0..20 kg, CHF 0..60, raisins 0..20 kg").unwrap();
    writeln!(w, "d : raisins -> CHF   d(r, q) = 10r <= q").unwrap();
    writeln!(w, "n : pears -> CHF     n(p, q) = 5p > q").unwrap();
    writeln!(w).unwrap();
    writeln!(w, "(n ▸ d)(p, r): p rows, r columns").unwrap();
    write!(w, "p\\r").unwrap();
    for r in 0..RAISIN_COLUMNS {
        write!(w, " {r:>2}").unwrap();
    }
    writeln!(w).unwrap();
    for p in 0..ex.pears.len() {
        write!(w, "{p:>3}").unwrap();
        for r in 0..RAISIN_COLUMNS {
            write!(w, "  {}", mark(c.get(p, r))).unwrap();
        }
        writeln!(w).unwrap();
    }
    let wit = right_witnesses(&ex.n, &ex.d, 10, 4).expect("shared CHF poset");
    let range = match (wit.first(), wit.last()) {
        (Some(a), Some(b)) => format!("q in {a}..={b}"),
        _ => "none".to_string(),
    };
    writeln!(w).unwrap();
    writeln!(w, "(n ▸ d)(10, 4) = {}   witnesses: {range}", mark(c.get(10, 4))).unwrap();

    let (via_resources, via_functionality) = derived_nps(&ex.d);
    writeln!(w).unwrap();
    writeln!(w, "derived infeasibility of d, CHF -> raisins").unwrap();
    writeln!(w, "  (n_CHF ▸ d)(c, r) = exists q: q < c and 10r <= q").unwrap();
    writeln!(w, "  (d • n_raisins)(c, r) = exists r': 10r' <= c and r < r'").unwrap();
    write!(w, "  c\\r").unwrap();
    for r in 0..RAISIN_COLUMNS {
        write!(w, "   {r:>2}").unwrap();
    }
    writeln!(w).unwrap();
    for chf in (0..=60).step_by(10) {
        write!(w, "  {chf:>3}").unwrap();
        for r in 0..RAISIN_COLUMNS {
            write!(
                w,
                "   {}{}",
                mark(via_resources.get(chf, r)),
                mark(via_functionality.get(chf, r))
            )
            .unwrap();
        }
        writeln!(w).unwrap();
    }
    writeln!(
        w,
        "\nincompat(no_free_lunch(CHF), dp_identity(CHF)) = {}",
        mark(incompat_dp(&no_free_lunch(&ex.chf), &dp_identity(&ex.chf)).expect("same poset"))
    )
    .unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_reports_the_cell_and_compatibility() {
        let out = cmd_codesign_demo();
        assert!(out.contains("(n ▸ d)(10, 4) = ⊤   witnesses: q in 40..=49"), "{out}");
        assert!(out.contains("dp_identity(CHF)) = ⊥"), "{out}");
    }

    #[test]
    fn zero_pears_row_is_all_bottom() {
        let out = cmd_codesign_demo();
        let row = out
            .lines()
            .find(|l| l.starts_with("  0 ") || l.starts_with("  0  "))
            .unwrap();
        assert!(!row.contains('⊤'), "{row}");
    }
}
