use crate::nategory::{Counterexample, Evidence, FiniteNategory, Law, LawReport, Nategory, NategoryError};

use super::{CategoryError, FiniteCategory};

/// The unique morphism `X → Y` of a thin category, stored as the pair `(X, Y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThinArrow(pub usize, pub usize);

/// The reflexive-transitive reachability preorder of a finite digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinCategory {
    names: Vec<String>,
    reach: Vec<bool>,
}

impl ThinCategory {
    /// Vertices are named by their position in `names`; `edges` are index pairs.
    pub fn from_graph_reachability(names: &[&str], edges: &[(usize, usize)]) -> Result<Self, CategoryError> {
        let n = names.len();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(CategoryError::Duplicate(a.to_string()));
            }
        }
        let mut reach = vec![false; n * n];
        for i in 0..n {
            reach[i * n + i] = true;
        }
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(CategoryError::Unknown(format!("vertex {}", a.max(b))));
            }
            reach[a * n + b] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if reach[i * n + k] {
                    for j in 0..n {
                        if reach[k * n + j] {
                            reach[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Ok(ThinCategory {
            names: names.iter().map(|s| s.to_string()).collect(),
            reach,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn reachable(&self, x: usize, y: usize) -> bool {
        self.reach[x * self.names.len() + y]
    }

    pub fn hom(&self, x: usize, y: usize) -> Option<ThinArrow> {
        self.reachable(x, y).then_some(ThinArrow(x, y))
    }

    /// The same preorder as an explicit [`FiniteCategory`]; the morphism
    /// `X → Y` for `X ≠ Y` is named `X<Y`.
    pub fn to_category(&self) -> FiniteCategory {
        let n = self.len();
        let mut b = FiniteCategory::builder();
        let objs: Vec<_> = self
            .names
            .iter()
            .map(|s| b.object(s).expect("names are distinct"))
            .collect();
        let mut mor = vec![None; n * n];
        for x in 0..n {
            mor[x * n + x] = Some(b.identity(objs[x]));
            for y in 0..n {
                if x != y && self.reachable(x, y) {
                    let name = format!("{}<{}", self.names[x], self.names[y]);
                    mor[x * n + y] = Some(b.morphism(&name, objs[x], objs[y]).expect("fresh name"));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if let (Some(f), Some(g)) = (mor[x * n + y], mor[y * n + z]) {
                        let h = mor[x * n + z].expect("reachability is transitive");
                        b.compose(f, g, h).expect("well-typed");
                    }
                }
            }
        }
        b.build().expect("a preorder is a category")
    }
}

/// Refutations in a thin category: a norphism `X ⇢ Z` exists exactly when
/// `Hom(X, Z)` is empty, and it is incompatible with everything.
#[derive(Debug, Clone, Copy)]
pub struct ThinNategory<'a> {
    thin: &'a ThinCategory,
}

impl<'a> ThinNategory<'a> {
    pub fn new(thin: &'a ThinCategory) -> Self {
        ThinNategory { thin }
    }
}

impl Nategory for ThinNategory<'_> {
    type Object = usize;
    type Morphism = ThinArrow;
    type Norphism = ThinArrow;

    fn mor_source(&self, f: &ThinArrow) -> usize {
        f.0
    }

    fn mor_target(&self, f: &ThinArrow) -> usize {
        f.1
    }

    fn nor_source(&self, n: &ThinArrow) -> usize {
        n.0
    }

    fn nor_target(&self, n: &ThinArrow) -> usize {
        n.1
    }

    fn identity(&self, x: &usize) -> ThinArrow {
        ThinArrow(*x, *x)
    }

    fn compose_unchecked(&self, f: &ThinArrow, g: &ThinArrow) -> ThinArrow {
        ThinArrow(f.0, g.1)
    }

    fn incompat_unchecked(&self, _: &ThinArrow, _: &ThinArrow) -> bool {
        true
    }

    fn ncompose_left_unchecked(&self, f: &ThinArrow, n: &ThinArrow) -> ThinArrow {
        ThinArrow(f.1, n.1)
    }

    fn ncompose_right_unchecked(&self, n: &ThinArrow, g: &ThinArrow) -> ThinArrow {
        ThinArrow(n.0, g.0)
    }
}

impl FiniteNategory for ThinNategory<'_> {
    fn objects(&self) -> Vec<usize> {
        (0..self.thin.len()).collect()
    }

    fn hom(&self, x: &usize, y: &usize) -> Result<Vec<ThinArrow>, NategoryError> {
        Ok(self.thin.hom(*x, *y).into_iter().collect())
    }

    fn nom(&self, x: &usize, y: &usize) -> Result<Vec<ThinArrow>, NategoryError> {
        Ok((!self.thin.reachable(*x, *y))
            .then_some(ThinArrow(*x, *y))
            .into_iter()
            .collect())
    }
}

/// For every refutation `X ⇢ Z` and every object `Y`, checks that
/// `Hom(X, Y)` or `Hom(Y, Z)` is empty. One case per `(X, Y, Z)` with `X ⇢ Z`.
pub fn thin_decomposition_check(thin: &ThinCategory) -> LawReport<usize, ThinArrow, ThinArrow> {
    let mut report = LawReport::new(Law::Decomposition);
    let n = thin.len();
    for x in 0..n {
        for z in 0..n {
            if thin.reachable(x, z) {
                continue;
            }
            for y in 0..n {
                let (f, g) = (thin.hom(x, y), thin.hom(y, z));
                let ok = f.is_none() || g.is_none();
                report.record(ok, |index| Counterexample {
                    clause: Law::Decomposition,
                    objects: vec![x, y, z],
                    morphisms: vec![f.expect("violation"), g.expect("violation")],
                    norphism: Some(ThinArrow(x, z)),
                    lhs: Evidence::Holds(true),
                    rhs: Evidence::Holds(ok),
                    index,
                });
            }
        }
    }
    report
}
