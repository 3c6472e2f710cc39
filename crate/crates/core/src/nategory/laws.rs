use std::fmt;
use std::str::FromStr;

use super::{Nategory, NategoryError, ScopeOf};

/// Counterexamples kept per report; the violation count is always exact.
pub const MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    /// Both equivariance clauses; clauses are [`Law::Equiv1`] and [`Law::Equiv2`].
    Equivariance,
    /// `i(f • n, g) ⇒ i(n, f ∘ g)`.
    Equiv1,
    /// `i(n ▸ g, f) ⇒ i(n, f ∘ g)`.
    Equiv2,
    /// Both equivariance clauses as biconditionals.
    Exactness,
    Exact1,
    Exact2,
    /// Associativity and identity laws of `∘`.
    CategoryLaws,
    Associativity,
    LeftIdentity,
    RightIdentity,
    /// `id • n = n`.
    Neut1,
    /// `n ▸ id = n`.
    Neut2,
    /// `(f ∘ g) • n = g • (f • n)`.
    Covar,
    /// `n ▸ (g ∘ h) = (n ▸ h) ▸ g`.
    Contravar,
    /// `f • (n ▸ h) = (f • n) ▸ h`.
    Comm,
    /// A refutation `X ⇢ Z` forces `Hom(X, Y) = ∅` or `Hom(Y, Z) = ∅` for every `Y`.
    Decomposition,
}

impl Law {
    pub const ALL: [Law; 16] = [
        Law::Equivariance,
        Law::Equiv1,
        Law::Equiv2,
        Law::Exactness,
        Law::Exact1,
        Law::Exact2,
        Law::CategoryLaws,
        Law::Associativity,
        Law::LeftIdentity,
        Law::RightIdentity,
        Law::Neut1,
        Law::Neut2,
        Law::Covar,
        Law::Contravar,
        Law::Comm,
        Law::Decomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Equivariance => "equivariance",
            Law::Equiv1 => "equiv-1",
            Law::Equiv2 => "equiv-2",
            Law::Exactness => "exactness",
            Law::Exact1 => "exact-1",
            Law::Exact2 => "exact-2",
            Law::CategoryLaws => "category",
            Law::Associativity => "associativity",
            Law::LeftIdentity => "left-identity",
            Law::RightIdentity => "right-identity",
            Law::Neut1 => "neut-1",
            Law::Neut2 => "neut-2",
            Law::Covar => "covar",
            Law::Contravar => "contravar",
            Law::Comm => "comm",
            Law::Decomposition => "decomposition",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown law `{s}`"))
    }
}

/// One side of a checked equation or implication.
#[derive(Debug, Clone, PartialEq)]
pub enum Evidence<M, R> {
    Holds(bool),
    Morphism(M),
    Norphism(R),
}

impl<M: fmt::Debug, R: fmt::Debug> fmt::Display for Evidence<M, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Holds(b) => write!(f, "{b}"),
            Evidence::Morphism(m) => write!(f, "{m:?}"),
            Evidence::Norphism(n) => write!(f, "{n:?}"),
        }
    }
}

/// A replayable violation: the arrows involved, in the clause's canonical
/// order, and both sides as evaluated.
///
/// Arrow order per clause: equivariance / exactness `[f, g]` with `n`;
/// associativity `[f, g, h]`; identities `[f]`; `covar` `[f, g]`;
/// `contravar` `[g, h]`; `comm` `[f, h]`; decomposition `[f, g]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample<O, M, R> {
    pub clause: Law,
    pub objects: Vec<O>,
    pub morphisms: Vec<M>,
    pub norphism: Option<R>,
    pub lhs: Evidence<M, R>,
    pub rhs: Evidence<M, R>,
    /// Position of this case in the checker's enumeration order.
    pub index: u64,
}

impl<O, M, R> Counterexample<O, M, R>
where
    O: Clone + PartialEq + fmt::Debug,
    M: Clone + PartialEq + fmt::Debug,
    R: Clone + PartialEq + fmt::Debug,
{
    /// Re-evaluates the clause on `inst`; `Ok(true)` means it is still violated.
    pub fn recheck<N>(&self, inst: &N) -> Result<bool, NategoryError>
    where
        N: Nategory<Object = O, Morphism = M, Norphism = R>,
    {
        let mors = &self.morphisms;
        let need = |k: usize| -> Result<(), NategoryError> {
            if mors.len() < k {
                return Err(NategoryError::Signature {
                    op: "recheck",
                    detail: format!("{} needs {k} morphisms", self.clause),
                });
            }
            Ok(())
        };
        let nor = || {
            self.norphism.as_ref().ok_or(NategoryError::Signature {
                op: "recheck",
                detail: format!("{} needs a norphism", self.clause),
            })
        };
        Ok(match self.clause {
            Law::Equiv1 | Law::Exact1 => {
                need(2)?;
                let n = nor()?;
                let lhs = inst.incompat(&inst.ncompose_left(&mors[0], n)?, &mors[1])?;
                let rhs = inst.incompat(n, &inst.compose(&mors[0], &mors[1])?)?;
                if self.clause == Law::Equiv1 {
                    lhs && !rhs
                } else {
                    lhs != rhs
                }
            }
            Law::Equiv2 | Law::Exact2 => {
                need(2)?;
                let n = nor()?;
                let lhs = inst.incompat(&inst.ncompose_right(n, &mors[1])?, &mors[0])?;
                let rhs = inst.incompat(n, &inst.compose(&mors[0], &mors[1])?)?;
                if self.clause == Law::Equiv2 {
                    lhs && !rhs
                } else {
                    lhs != rhs
                }
            }
            Law::Associativity => {
                need(3)?;
                let left = inst.compose(&inst.compose(&mors[0], &mors[1])?, &mors[2])?;
                let right = inst.compose(&mors[0], &inst.compose(&mors[1], &mors[2])?)?;
                left != right
            }
            Law::LeftIdentity => {
                need(1)?;
                let id = inst.identity(&inst.mor_source(&mors[0]));
                inst.compose(&id, &mors[0])? != mors[0]
            }
            Law::RightIdentity => {
                need(1)?;
                let id = inst.identity(&inst.mor_target(&mors[0]));
                inst.compose(&mors[0], &id)? != mors[0]
            }
            Law::Neut1 => {
                let n = nor()?;
                let id = inst.identity(&inst.nor_source(n));
                inst.ncompose_left(&id, n)? != *n
            }
            Law::Neut2 => {
                let n = nor()?;
                let id = inst.identity(&inst.nor_target(n));
                inst.ncompose_right(n, &id)? != *n
            }
            Law::Covar => {
                need(2)?;
                let n = nor()?;
                let left = inst.ncompose_left(&inst.compose(&mors[0], &mors[1])?, n)?;
                let right = inst.ncompose_left(&mors[1], &inst.ncompose_left(&mors[0], n)?)?;
                left != right
            }
            Law::Contravar => {
                need(2)?;
                let n = nor()?;
                let left = inst.ncompose_right(n, &inst.compose(&mors[0], &mors[1])?)?;
                let right = inst.ncompose_right(&inst.ncompose_right(n, &mors[1])?, &mors[0])?;
                left != right
            }
            Law::Comm => {
                need(2)?;
                let n = nor()?;
                let left = inst.ncompose_left(&mors[0], &inst.ncompose_right(n, &mors[1])?)?;
                let right = inst.ncompose_right(&inst.ncompose_left(&mors[0], n)?, &mors[1])?;
                left != right
            }
            Law::Decomposition => {
                need(2)?;
                let n = nor()?;
                let fg = inst.compose(&mors[0], &mors[1])?;
                inst.incompat(n, &fg)?
            }
            Law::Equivariance | Law::Exactness | Law::CategoryLaws => {
                return Err(NategoryError::Signature {
                    op: "recheck",
                    detail: format!("{} is a report-level law, not a clause", self.clause),
                })
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawReport<O, M, R> {
    pub law: Law,
    /// Number of cases evaluated.
    pub checked: u64,
    /// Number of cases that failed.
    pub violations: u64,
    /// The first [`MAX_COUNTEREXAMPLES`] failures in enumeration order.
    pub counterexamples: Vec<Counterexample<O, M, R>>,
}

pub type ReportOf<N> = LawReport<<N as Nategory>::Object, <N as Nategory>::Morphism, <N as Nategory>::Norphism>;

impl<O, M, R> LawReport<O, M, R> {
    pub fn new(law: Law) -> Self {
        LawReport {
            law,
            checked: 0,
            violations: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// Records one evaluated case; `make` is only called for failures that
    /// still fit in the counterexample buffer.
    pub fn record(&mut self, ok: bool, make: impl FnOnce(u64) -> Counterexample<O, M, R>) {
        let index = self.checked;
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(make(index));
            }
        }
    }

    /// Folds another report of the same law into this one, renumbering its
    /// case indices after ours.
    pub fn merge(&mut self, other: LawReport<O, M, R>) {
        let offset = self.checked;
        self.checked += other.checked;
        self.violations += other.violations;
        for mut cx in other.counterexamples {
            if self.counterexamples.len() >= MAX_COUNTEREXAMPLES {
                break;
            }
            cx.index += offset;
            self.counterexamples.push(cx);
        }
    }

    pub fn clause_violations(&self, clause: Law) -> impl Iterator<Item = &Counterexample<O, M, R>> {
        self.counterexamples.iter().filter(move |c| c.clause == clause)
    }
}

pub fn check_equivariance<N: Nategory>(inst: &N, scope: &ScopeOf<N>) -> ReportOf<N> {
    let mut report = LawReport::new(Law::Equivariance);
    for_each_triple(scope, |x, y, z| {
        report.merge(check_equivariance_at(inst, scope, x, y, z))
    });
    report
}

pub fn check_exactness<N: Nategory>(inst: &N, scope: &ScopeOf<N>) -> ReportOf<N> {
    let mut report = LawReport::new(Law::Exactness);
    for_each_triple(scope, |x, y, z| report.merge(check_exactness_at(inst, scope, x, y, z)));
    report
}

/// Equivariance restricted to `f : X → Y`, `g : Y → Z`, `n : X ⇢ Z` for the
/// scope objects at indices `x`, `y`, `z`.
pub fn check_equivariance_at<N: Nategory>(inst: &N, scope: &ScopeOf<N>, x: usize, y: usize, z: usize) -> ReportOf<N> {
    scan_triple(inst, scope, [x, y, z], false)
}

/// Exactness (biconditional equivariance) on one object triple.
pub fn check_exactness_at<N: Nategory>(inst: &N, scope: &ScopeOf<N>, x: usize, y: usize, z: usize) -> ReportOf<N> {
    scan_triple(inst, scope, [x, y, z], true)
}

fn for_each_triple<O, M, R>(scope: &super::Scope<O, M, R>, mut body: impl FnMut(usize, usize, usize)) {
    let n = scope.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                body(x, y, z);
            }
        }
    }
}

fn scan_triple<N: Nategory>(inst: &N, scope: &ScopeOf<N>, [x, y, z]: [usize; 3], exact: bool) -> ReportOf<N> {
    let law = if exact { Law::Exactness } else { Law::Equivariance };
    let mut report = LawReport::new(law);
    let fs = scope.homs(x, y);
    let gs = scope.homs(y, z);
    let ns = scope.noms(x, z);
    if fs.is_empty() || gs.is_empty() || ns.is_empty() {
        return report;
    }
    let objects = || {
        let o = scope.objects();
        vec![o[x].clone(), o[y].clone(), o[z].clone()]
    };
    // n ▸ g for every (g, n), reused across all f.
    let rights: Vec<Vec<N::Norphism>> = gs
        .iter()
        .map(|g| ns.iter().map(|n| inst.ncompose_right_unchecked(n, g)).collect())
        .collect();
    for f in fs {
        let lefts: Vec<N::Norphism> = ns.iter().map(|n| inst.ncompose_left_unchecked(f, n)).collect();
        for (g, right_row) in gs.iter().zip(&rights) {
            let fg = inst.compose_unchecked(f, g);
            for ((n, fn_), ng) in ns.iter().zip(&lefts).zip(right_row) {
                let excluded = inst.incompat_unchecked(n, &fg);
                let lhs1 = inst.incompat_unchecked(fn_, g);
                let lhs2 = inst.incompat_unchecked(ng, f);
                for (clause, lhs) in [(1, lhs1), (2, lhs2)] {
                    let ok = if exact { lhs == excluded } else { !lhs || excluded };
                    report.record(ok, |index| Counterexample {
                        clause: match (exact, clause) {
                            (false, 1) => Law::Equiv1,
                            (false, _) => Law::Equiv2,
                            (true, 1) => Law::Exact1,
                            (true, _) => Law::Exact2,
                        },
                        objects: objects(),
                        morphisms: vec![f.clone(), g.clone()],
                        norphism: Some(n.clone()),
                        lhs: Evidence::Holds(lhs),
                        rhs: Evidence::Holds(excluded),
                        index,
                    });
                }
            }
        }
    }
    report
}

/// Associativity and both identity laws over every composable tuple in scope.
pub fn check_category_laws<N: Nategory>(inst: &N, scope: &ScopeOf<N>) -> ReportOf<N> {
    let mut report = LawReport::new(Law::CategoryLaws);
    let objs = scope.objects();
    let n = scope.len();
    for x in 0..n {
        for y in 0..n {
            let id_x = inst.identity(&objs[x]);
            let id_y = inst.identity(&objs[y]);
            for f in scope.homs(x, y) {
                let left = inst.compose_unchecked(&id_x, f);
                report.record(left == *f, |index| Counterexample {
                    clause: Law::LeftIdentity,
                    objects: vec![objs[x].clone(), objs[y].clone()],
                    morphisms: vec![f.clone()],
                    norphism: None,
                    lhs: Evidence::Morphism(left.clone()),
                    rhs: Evidence::Morphism(f.clone()),
                    index,
                });
                let right = inst.compose_unchecked(f, &id_y);
                report.record(right == *f, |index| Counterexample {
                    clause: Law::RightIdentity,
                    objects: vec![objs[x].clone(), objs[y].clone()],
                    morphisms: vec![f.clone()],
                    norphism: None,
                    lhs: Evidence::Morphism(right.clone()),
                    rhs: Evidence::Morphism(f.clone()),
                    index,
                });
            }
        }
    }
    for w in 0..n {
        for x in 0..n {
            for f in scope.homs(w, x) {
                for y in 0..n {
                    for g in scope.homs(x, y) {
                        let fg = inst.compose_unchecked(f, g);
                        for z in 0..n {
                            for h in scope.homs(y, z) {
                                let left = inst.compose_unchecked(&fg, h);
                                let right = inst.compose_unchecked(f, &inst.compose_unchecked(g, h));
                                report.record(left == right, |index| Counterexample {
                                    clause: Law::Associativity,
                                    objects: vec![objs[w].clone(), objs[x].clone(), objs[y].clone(), objs[z].clone()],
                                    morphisms: vec![f.clone(), g.clone(), h.clone()],
                                    norphism: None,
                                    lhs: Evidence::Morphism(left.clone()),
                                    rhs: Evidence::Morphism(right.clone()),
                                    index,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// The five action laws, one report each, in the order
/// `neut-1, neut-2, covar, contravar, comm`.
pub fn check_pn_properties<N: Nategory>(inst: &N, scope: &ScopeOf<N>) -> Vec<ReportOf<N>> {
    let objs = scope.objects();
    let n = scope.len();
    let mut neut1 = LawReport::new(Law::Neut1);
    let mut neut2 = LawReport::new(Law::Neut2);
    let mut covar = LawReport::new(Law::Covar);
    let mut contravar = LawReport::new(Law::Contravar);
    let mut comm = LawReport::new(Law::Comm);

    for x in 0..n {
        for z in 0..n {
            let id_x = inst.identity(&objs[x]);
            let id_z = inst.identity(&objs[z]);
            for nor in scope.noms(x, z) {
                let left = inst.ncompose_left_unchecked(&id_x, nor);
                neut1.record(left == *nor, |index| Counterexample {
                    clause: Law::Neut1,
                    objects: vec![objs[x].clone(), objs[z].clone()],
                    morphisms: vec![],
                    norphism: Some(nor.clone()),
                    lhs: Evidence::Norphism(left.clone()),
                    rhs: Evidence::Norphism(nor.clone()),
                    index,
                });
                let right = inst.ncompose_right_unchecked(nor, &id_z);
                neut2.record(right == *nor, |index| Counterexample {
                    clause: Law::Neut2,
                    objects: vec![objs[x].clone(), objs[z].clone()],
                    morphisms: vec![],
                    norphism: Some(nor.clone()),
                    lhs: Evidence::Norphism(right.clone()),
                    rhs: Evidence::Norphism(nor.clone()),
                    index,
                });
            }
        }
    }

    // covar: f : X → Y, g : Y → Z, n : X ⇢ W.
    for x in 0..n {
        for y in 0..n {
            for f in scope.homs(x, y) {
                for z in 0..n {
                    for g in scope.homs(y, z) {
                        let fg = inst.compose_unchecked(f, g);
                        for w in 0..n {
                            for nor in scope.noms(x, w) {
                                let left = inst.ncompose_left_unchecked(&fg, nor);
                                let right = inst.ncompose_left_unchecked(g, &inst.ncompose_left_unchecked(f, nor));
                                covar.record(left == right, |index| Counterexample {
                                    clause: Law::Covar,
                                    objects: vec![objs[x].clone(), objs[y].clone(), objs[z].clone(), objs[w].clone()],
                                    morphisms: vec![f.clone(), g.clone()],
                                    norphism: Some(nor.clone()),
                                    lhs: Evidence::Norphism(left.clone()),
                                    rhs: Evidence::Norphism(right.clone()),
                                    index,
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    // contravar: n : X ⇢ W, g : Y → Z, h : Z → W.
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for g in scope.homs(y, z) {
                    for w in 0..n {
                        for h in scope.homs(z, w) {
                            let gh = inst.compose_unchecked(g, h);
                            for nor in scope.noms(x, w) {
                                let left = inst.ncompose_right_unchecked(nor, &gh);
                                let right = inst.ncompose_right_unchecked(&inst.ncompose_right_unchecked(nor, h), g);
                                contravar.record(left == right, |index| Counterexample {
                                    clause: Law::Contravar,
                                    objects: vec![objs[x].clone(), objs[y].clone(), objs[z].clone(), objs[w].clone()],
                                    morphisms: vec![g.clone(), h.clone()],
                                    norphism: Some(nor.clone()),
                                    lhs: Evidence::Norphism(left.clone()),
                                    rhs: Evidence::Norphism(right.clone()),
                                    index,
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    // comm: f : X → Y, n : X ⇢ W, h : Z → W.
    for x in 0..n {
        for y in 0..n {
            for f in scope.homs(x, y) {
                for w in 0..n {
                    for nor in scope.noms(x, w) {
                        let fn_ = inst.ncompose_left_unchecked(f, nor);
                        for z in 0..n {
                            for h in scope.homs(z, w) {
                                let left = inst.ncompose_left_unchecked(f, &inst.ncompose_right_unchecked(nor, h));
                                let right = inst.ncompose_right_unchecked(&fn_, h);
                                comm.record(left == right, |index| Counterexample {
                                    clause: Law::Comm,
                                    objects: vec![objs[x].clone(), objs[y].clone(), objs[z].clone(), objs[w].clone()],
                                    morphisms: vec![f.clone(), h.clone()],
                                    norphism: Some(nor.clone()),
                                    lhs: Evidence::Norphism(left.clone()),
                                    rhs: Evidence::Norphism(right.clone()),
                                    index,
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    vec![neut1, neut2, covar, contravar, comm]
}
