use std::sync::Arc;

use crate::nategory::{FiniteNategory, Nategory, NategoryError};

use super::relation::{
    dp_compose_unchecked, incompat_unchecked, np_compose_left_unchecked, np_compose_right_unchecked,
};
use super::{dp_identity, DesignProblem, FinitePoset, NesignProblem};

/// Largest `|P| · |Q|` for which all monotone relations are enumerated.
pub const RELATION_CELL_CAP: usize = 16;

/// Posets with design problems as morphisms and nesign problems as
/// norphisms, over a fixed list of objects.
#[derive(Debug, Clone)]
pub struct CodesignNategory {
    posets: Vec<Arc<FinitePoset>>,
}

impl CodesignNategory {
    pub fn new(posets: Vec<Arc<FinitePoset>>) -> Self {
        CodesignNategory { posets }
    }

    /// The one-element poset, the two-element chain and antichain, and the
    /// three-element chain.
    pub fn small() -> Self {
        CodesignNategory::new(vec![
            Arc::new(FinitePoset::chain("1", 0, 0)),
            Arc::new(FinitePoset::chain("2", 0, 1)),
            Arc::new(FinitePoset::antichain("1+1", 2)),
            Arc::new(FinitePoset::chain("3", 0, 2)),
        ])
    }

    pub fn posets(&self) -> &[Arc<FinitePoset>] {
        &self.posets
    }
}

fn all_cells(p: &FinitePoset, q: &FinitePoset) -> Result<Vec<Vec<bool>>, NategoryError> {
    let cells = p.len() * q.len();
    if cells > RELATION_CELL_CAP {
        return Err(NategoryError::SizeCap {
            what: format!("relations {} × {}", p.name(), q.name()),
            size: cells as u128,
            cap: RELATION_CELL_CAP as u128,
        });
    }
    Ok((0u32..1 << cells)
        .map(|mask| (0..cells).map(|k| mask >> k & 1 == 1).collect())
        .collect())
}

/// Every monotone feasibility relation `P ⇸ Q`, in bitmask order.
pub fn enumerate_dps(p: &Arc<FinitePoset>, q: &Arc<FinitePoset>) -> Result<Vec<DesignProblem>, NategoryError> {
    Ok(all_cells(p, q)?
        .into_iter()
        .filter_map(|c| DesignProblem::new(p.clone(), q.clone(), c).ok())
        .collect())
}

/// Every monotone infeasibility relation `P ⇸ Q`, in bitmask order.
pub fn enumerate_nps(p: &Arc<FinitePoset>, q: &Arc<FinitePoset>) -> Result<Vec<NesignProblem>, NategoryError> {
    Ok(all_cells(p, q)?
        .into_iter()
        .filter_map(|c| NesignProblem::new(p.clone(), q.clone(), c).ok())
        .collect())
}

impl Nategory for CodesignNategory {
    type Object = Arc<FinitePoset>;
    type Morphism = DesignProblem;
    type Norphism = NesignProblem;

    fn mor_source(&self, f: &DesignProblem) -> Arc<FinitePoset> {
        f.source().clone()
    }

    fn mor_target(&self, f: &DesignProblem) -> Arc<FinitePoset> {
        f.target().clone()
    }

    fn nor_source(&self, n: &NesignProblem) -> Arc<FinitePoset> {
        n.source().clone()
    }

    fn nor_target(&self, n: &NesignProblem) -> Arc<FinitePoset> {
        n.target().clone()
    }

    fn identity(&self, x: &Arc<FinitePoset>) -> DesignProblem {
        dp_identity(x)
    }

    fn compose_unchecked(&self, f: &DesignProblem, g: &DesignProblem) -> DesignProblem {
        dp_compose_unchecked(f, g)
    }

    fn incompat_unchecked(&self, n: &NesignProblem, f: &DesignProblem) -> bool {
        incompat_unchecked(n, f)
    }

    fn ncompose_left_unchecked(&self, f: &DesignProblem, n: &NesignProblem) -> NesignProblem {
        np_compose_left_unchecked(f, n)
    }

    fn ncompose_right_unchecked(&self, n: &NesignProblem, g: &DesignProblem) -> NesignProblem {
        np_compose_right_unchecked(n, g)
    }
}

impl FiniteNategory for CodesignNategory {
    fn objects(&self) -> Vec<Arc<FinitePoset>> {
        self.posets.clone()
    }

    fn hom(&self, x: &Arc<FinitePoset>, y: &Arc<FinitePoset>) -> Result<Vec<DesignProblem>, NategoryError> {
        enumerate_dps(x, y)
    }

    fn nom(&self, x: &Arc<FinitePoset>, y: &Arc<FinitePoset>) -> Result<Vec<NesignProblem>, NategoryError> {
        enumerate_nps(x, y)
    }
}
