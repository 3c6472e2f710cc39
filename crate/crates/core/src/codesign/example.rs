use std::sync::Arc;

use super::{np_compose_right, CodesignError, DesignProblem, FinitePoset, NesignProblem};

/// Pears, CHF and raisins on integer grids.
///
/// `d(r, q) = 10 r ≤ q`: `r` kg of raisins can be bought with `q` CHF.
/// `n(p, q) = 5 p > q`: `p` kg of pears cannot be bought with `q` CHF.
/// Their composite `n ▸ d` says which pear amounts cannot be obtained from a
/// budget that also buys a given amount of raisins.
#[derive(Debug, Clone)]
pub struct PearsAndRaisins {
    pub pears: Arc<FinitePoset>,
    pub chf: Arc<FinitePoset>,
    pub raisins: Arc<FinitePoset>,
    pub d: DesignProblem,
    pub n: NesignProblem,
}

impl PearsAndRaisins {
    /// Pears and raisins in `0..=20` kg, CHF in `0..=60`.
    pub fn new() -> Self {
        PearsAndRaisins::with_ranges(20, 60, 20)
    }

    pub fn with_ranges(max_pears: i64, max_chf: i64, max_raisins: i64) -> Self {
        let pears = Arc::new(FinitePoset::chain("pears", 0, max_pears));
        let chf = Arc::new(FinitePoset::chain("CHF", 0, max_chf));
        let raisins = Arc::new(FinitePoset::chain("raisins", 0, max_raisins));
        let d = DesignProblem::from_fn(&raisins, &chf, |r, q| 10 * r <= q).expect("monotone");
        let n = NesignProblem::from_fn(&pears, &chf, |p, q| 5 * p > q).expect("monotone");
        PearsAndRaisins {
            pears,
            chf,
            raisins,
            d,
            n,
        }
    }

    /// `n ▸ d : pears ⇸ raisins`.
    pub fn composite(&self) -> NesignProblem {
        np_compose_right(&self.n, &self.d).expect("shared CHF poset")
    }
}

impl Default for PearsAndRaisins {
    fn default() -> Self {
        PearsAndRaisins::new()
    }
}

/// The middle elements `q` with `n(p, q) ∧ d(r, q)`; `(n ▸ d)(p, r)` holds
/// iff this is non-empty.
pub fn right_witnesses(n: &NesignProblem, d: &DesignProblem, p: usize, r: usize) -> Result<Vec<usize>, CodesignError> {
    np_compose_right(n, d)?;
    Ok((0..n.target().len()).filter(|&q| n.get(p, q) && d.get(r, q)).collect())
}
