//! The law suite behind `check`: fixtures, the expected-status registry and
//! a runner producing one [`Outcome`] per instance and law.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::berg::{
    BergNategory, BergNorphism, BergPath, Bound, Connectivity, Domain, NodeId, PathSampler, Schema, SteepnessInterval,
    Terrain, TerrainGraph,
};
use crate::category::{
    family, thin_decomposition_check, MorId, MorphismSet, NegationNategory, ObjId, PowersetNategory, Refutation,
    ThinArrow, ThinNategory, TrivialNategory, Void, WeakNategory,
};
use crate::codesign::{CodesignNategory, DesignProblem, FinitePoset, NesignProblem};
use crate::gset::{compare_bridge, DEFAULT_CAP};
use crate::nategory::{
    check_category_laws, check_equivariance, check_exactness, check_pn_properties, Counterexample, Evidence, LawReport,
    Nategory, Scope, ScopeOf,
};

/// Largest hom-set in the category family used for the finite constructions.
pub const FAMILY_MAX_HOM: usize = 2;

/// Bound values offered on every node pair, strongest first.
pub const BERG_VALUES: [f64; 6] = [10.0, 7.0, 4.5, 3.0, 1.0, 0.0];

/// Extra seeded bound values per run.
const BERG_RANDOM_VALUES: usize = 3;

/// 6 × 6 grid with cell 1.5 and rows at heights `0, 2, 4, 4, 2, 0`, so every
/// edge is 1.5 or 2.5 long and path lengths add exactly.
pub fn ridge_terrain() -> Terrain {
    const ROWS: [f64; 6] = [0.0, 2.0, 4.0, 4.0, 2.0, 0.0];
    Terrain::from_fn(6, 6, 1.5, |r, _| ROWS[r]).expect("valid terrain")
}

/// [`ridge_terrain`] with `σ = [-1.5, 1.5]` and 4-connectivity.
pub fn ridge_graph() -> TerrainGraph {
    TerrainGraph::build(
        ridge_terrain(),
        SteepnessInterval::new(-1.5, 1.5).expect("valid interval"),
        Connectivity::Four,
    )
}

/// Simple paths of up to `max_edges` edges; bounds [`BERG_VALUES`], `+∞`,
/// a few seeded quarter-metre values below 16 and all four schemas.
pub fn berg_sampler(seed: u64, max_edges: usize) -> PathSampler {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<Bound> = BERG_VALUES.iter().map(|&v| Bound::Finite(v)).collect();
    values.push(Bound::Infinite);
    values.extend((0..BERG_RANDOM_VALUES).map(|_| Bound::Finite(rng.gen_range(0..64) as f64 / 4.0)));
    PathSampler::new(max_edges, values, Schema::ALL.to_vec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Instance {
    Trivial,
    Negation,
    Powerset,
    Weak,
    Thin,
    BergNonNeg,
    BergReal,
    BergIntFloor,
    Codesign,
}

impl Instance {
    pub const ALL: [Instance; 9] = [
        Instance::Trivial,
        Instance::Negation,
        Instance::Powerset,
        Instance::Weak,
        Instance::Thin,
        Instance::BergNonNeg,
        Instance::BergReal,
        Instance::BergIntFloor,
        Instance::Codesign,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Instance::Trivial => "trivial",
            Instance::Negation => "negation",
            Instance::Powerset => "powerset",
            Instance::Weak => "weak",
            Instance::Thin => "thin",
            Instance::BergNonNeg => "berg-nonneg",
            Instance::BergReal => "berg-real",
            Instance::BergIntFloor => "berg-intfloor",
            Instance::Codesign => "codesign",
        }
    }
}

impl FromStr for Instance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Instance::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| {
            let names: Vec<_> = Instance::ALL.iter().map(|i| i.name()).collect();
            format!("unknown instance `{s}` (expected one of: {})", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteLaw {
    Equivariance,
    Exactness,
    Category,
    Neut1,
    Neut2,
    Covar,
    Contravar,
    Comm,
    PnBridge,
    Decomposition,
}

impl SuiteLaw {
    pub const ALL: [SuiteLaw; 10] = [
        SuiteLaw::Equivariance,
        SuiteLaw::Exactness,
        SuiteLaw::Category,
        SuiteLaw::Neut1,
        SuiteLaw::Neut2,
        SuiteLaw::Covar,
        SuiteLaw::Contravar,
        SuiteLaw::Comm,
        SuiteLaw::PnBridge,
        SuiteLaw::Decomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteLaw::Equivariance => "equivariance",
            SuiteLaw::Exactness => "exactness",
            SuiteLaw::Category => "category",
            SuiteLaw::Neut1 => "neut-1",
            SuiteLaw::Neut2 => "neut-2",
            SuiteLaw::Covar => "covar",
            SuiteLaw::Contravar => "contravar",
            SuiteLaw::Comm => "comm",
            SuiteLaw::PnBridge => "pn-bridge",
            SuiteLaw::Decomposition => "decomposition",
        }
    }

    /// Index into the output of [`check_pn_properties`].
    fn pn_index(self) -> Option<usize> {
        match self {
            SuiteLaw::Neut1 => Some(0),
            SuiteLaw::Neut2 => Some(1),
            SuiteLaw::Covar => Some(2),
            SuiteLaw::Contravar => Some(3),
            SuiteLaw::Comm => Some(4),
            _ => None,
        }
    }
}

impl FromStr for SuiteLaw {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteLaw::ALL.into_iter().find(|l| l.name() == s).ok_or_else(|| {
            let names: Vec<_> = SuiteLaw::ALL.iter().map(|l| l.name()).collect();
            format!("unknown law `{s}` (expected one of: {})", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// The status each law is expected to have on each instance; `None` when
/// the law does not apply.
///
/// The weak construction fails both neutrality laws and exactness. Integer
/// floor bounds fail exactness and both action laws that shift by a
/// composite. `pn-bridge` passes when the bridge agrees with the direct
/// checkers; Berg scopes are sampled, so composites of sampled bounds fall
/// outside them and the bridge does not apply.
pub fn expected(instance: Instance, law: SuiteLaw) -> Option<Status> {
    use Instance as I;
    use SuiteLaw as L;
    let berg = matches!(instance, I::BergNonNeg | I::BergReal | I::BergIntFloor);
    match (instance, law) {
        (I::Thin, L::Decomposition) => Some(Status::Pass),
        (_, L::Decomposition) => None,
        (_, L::PnBridge) if berg => None,
        (I::Weak, L::Exactness | L::Neut1 | L::Neut2) => Some(Status::Fail),
        (I::BergIntFloor, L::Exactness | L::Covar | L::Contravar) => Some(Status::Fail),
        _ => Some(Status::Pass),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub instance: Instance,
    pub law: SuiteLaw,
    pub expected: Option<Status>,
    /// `None` when the law was not run.
    pub observed: Option<Status>,
    pub checked: u64,
    pub violations: u64,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn meets_expectation(&self) -> bool {
        self.expected == self.observed
    }

    pub fn line(&self) -> String {
        let show = |s: Option<Status>| s.map_or("n/a".to_string(), |s| s.to_string());
        let verdict = match (self.expected, self.meets_expectation()) {
            (None, _) => "skipped",
            (_, true) => "ok",
            (_, false) => "unexpected",
        };
        format!(
            "instance={} law={} expected={} observed={} checked={} violations={} verdict={}",
            self.instance.name(),
            self.law.name(),
            show(self.expected),
            show(self.observed),
            self.checked,
            self.violations,
            verdict
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub max_path_len: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            max_path_len: 3,
        }
    }
}

/// Short text forms for witness lines.
pub trait Render {
    fn render(&self) -> String;
}

macro_rules! render_display {
    ($($t:ty),*) => {
        $(impl Render for $t {
            fn render(&self) -> String {
                self.to_string()
            }
        })*
    };
}

render_display!(usize, ObjId, MorId, NodeId);

impl Render for Void {
    fn render(&self) -> String {
        match *self {}
    }
}

impl Render for Refutation {
    fn render(&self) -> String {
        format!("refute({}->{})", self.source, self.target)
    }
}

impl Render for MorphismSet {
    fn render(&self) -> String {
        let m: Vec<String> = self.members().iter().map(|m| m.to_string()).collect();
        format!("{{{}}}", m.join(","))
    }
}

impl Render for ThinArrow {
    fn render(&self) -> String {
        format!("{}->{}", self.0, self.1)
    }
}

impl Render for BergPath {
    fn render(&self) -> String {
        let nodes: Vec<String> = self.nodes().iter().map(|n| n.to_string()).collect();
        format!("{}:{}", nodes.join(">"), self.length())
    }
}

impl Render for BergNorphism {
    fn render(&self) -> String {
        self.value.to_string()
    }
}

impl Render for Arc<FinitePoset> {
    fn render(&self) -> String {
        self.name().to_string()
    }
}

impl Render for DesignProblem {
    fn render(&self) -> String {
        format!("{self:?}")
    }
}

impl Render for NesignProblem {
    fn render(&self) -> String {
        format!("{self:?}")
    }
}

fn render_list<T: Render>(items: &[T]) -> String {
    let v: Vec<String> = items.iter().map(Render::render).collect();
    format!("[{}]", v.join(", "))
}

fn render_evidence<M: Render, R: Render>(e: &Evidence<M, R>) -> String {
    match e {
        Evidence::Holds(b) => b.to_string(),
        Evidence::Morphism(m) => m.render(),
        Evidence::Norphism(n) => n.render(),
    }
}

pub fn render_counterexample<O: Render, M: Render, R: Render>(cx: &Counterexample<O, M, R>) -> String {
    let mut s = format!(
        "clause={} objects={} morphisms={}",
        cx.clause,
        render_list(&cx.objects),
        render_list(&cx.morphisms)
    );
    if let Some(n) = &cx.norphism {
        s += &format!(" norphism={}", n.render());
    }
    s + &format!(" lhs={} rhs={}", render_evidence(&cx.lhs), render_evidence(&cx.rhs))
}

/// Counts and first witness for one law, accumulated over fixtures.
#[derive(Debug, Clone, Default)]
struct Tally {
    ran: bool,
    checked: u64,
    violations: u64,
    witness: Option<String>,
}

impl Tally {
    fn add<O: Render, M: Render, R: Render>(&mut self, report: &LawReport<O, M, R>, label: &str) {
        self.ran = true;
        self.checked += report.checked;
        self.violations += report.violations;
        if self.witness.is_none() {
            if let Some(cx) = report.counterexamples.first() {
                self.witness = Some(format!("{label}{}", render_counterexample(cx)));
            }
        }
    }
}

fn run_laws<N>(inst: &N, scope: &ScopeOf<N>, laws: &[SuiteLaw], tallies: &mut [Tally], label: &str)
where
    N: Nategory,
    N::Object: Render,
    N::Morphism: Render,
    N::Norphism: Render,
{
    let mut pn = None;
    for (law, tally) in laws.iter().zip(tallies.iter_mut()) {
        match law {
            SuiteLaw::Equivariance => tally.add(&check_equivariance(inst, scope), label),
            SuiteLaw::Exactness => tally.add(&check_exactness(inst, scope), label),
            SuiteLaw::Category => tally.add(&check_category_laws(inst, scope), label),
            SuiteLaw::PnBridge => match compare_bridge(inst, scope, DEFAULT_CAP) {
                Ok(c) => {
                    tally.ran = true;
                    tally.checked += c.triples as u64;
                    let bad: Vec<_> = c
                        .validity_disagreements
                        .iter()
                        .chain(&c.exactness_disagreements)
                        .collect();
                    tally.violations += bad.len() as u64;
                    if tally.witness.is_none() {
                        if let Some([x, y, z]) = bad.first() {
                            let o = scope.objects();
                            tally.witness = Some(format!(
                                "{label}bridge disagrees with direct check at {}",
                                render_list(&[o[*x].clone(), o[*y].clone(), o[*z].clone()])
                            ));
                        }
                    }
                }
                Err(e) => {
                    tally.ran = true;
                    tally.violations += 1;
                    tally.witness.get_or_insert_with(|| format!("{label}bridge error: {e}"));
                }
            },
            SuiteLaw::Decomposition => {}
            other => {
                let reports = pn.get_or_insert_with(|| check_pn_properties(inst, scope));
                tally.add(&reports[other.pn_index().expect("action law")], label);
            }
        }
    }
}

fn exhaustive<N: crate::nategory::FiniteNategory>(inst: &N) -> ScopeOf<N> {
    Scope::exhaustive(inst).expect("fixture enumerates")
}

fn run_instance(instance: Instance, laws: &[SuiteLaw], cfg: SuiteConfig) -> Vec<Tally> {
    let mut tallies = vec![Tally::default(); laws.len()];
    let family = || family::standard(FAMILY_MAX_HOM);
    match instance {
        Instance::Trivial | Instance::Negation | Instance::Powerset | Instance::Weak => {
            for (i, cat) in family().iter().enumerate() {
                let label = format!("category=#{i} ");
                match instance {
                    Instance::Trivial => {
                        let n = TrivialNategory::new(cat);
                        run_laws(&n, &exhaustive(&n), laws, &mut tallies, &label)
                    }
                    Instance::Negation => {
                        let n = NegationNategory::new(cat);
                        run_laws(&n, &exhaustive(&n), laws, &mut tallies, &label)
                    }
                    Instance::Powerset => {
                        let n = PowersetNategory::new(cat);
                        run_laws(&n, &exhaustive(&n), laws, &mut tallies, &label)
                    }
                    _ => {
                        let n = WeakNategory::new(cat);
                        run_laws(&n, &exhaustive(&n), laws, &mut tallies, &label)
                    }
                }
            }
        }
        Instance::Thin => {
            for (i, thin) in family::thin_preorders(3).iter().enumerate() {
                let label = format!("preorder=#{i} ");
                let n = ThinNategory::new(thin);
                run_laws(&n, &exhaustive(&n), laws, &mut tallies, &label);
                for (law, tally) in laws.iter().zip(tallies.iter_mut()) {
                    if *law == SuiteLaw::Decomposition {
                        tally.add(&thin_decomposition_check(thin), &label);
                    }
                }
            }
        }
        Instance::BergNonNeg | Instance::BergReal | Instance::BergIntFloor => {
            let domain = match instance {
                Instance::BergNonNeg => Domain::NonNeg,
                Instance::BergReal => Domain::Real,
                _ => Domain::IntFloor,
            };
            let graph = ridge_graph();
            let inst = BergNategory::new(&graph, domain);
            let scope = Scope::sampled(&inst, &berg_sampler(cfg.seed, cfg.max_path_len)).expect("sampler is total");
            let applicable: Vec<SuiteLaw> = laws.iter().copied().filter(|&l| l != SuiteLaw::PnBridge).collect();
            let mut sub = vec![Tally::default(); applicable.len()];
            run_laws(&inst, &scope, &applicable, &mut sub, "");
            let mut it = sub.into_iter();
            for (law, tally) in laws.iter().zip(tallies.iter_mut()) {
                if *law != SuiteLaw::PnBridge {
                    *tally = it.next().expect("one tally per applicable law");
                }
            }
        }
        Instance::Codesign => {
            let n = CodesignNategory::small();
            run_laws(&n, &exhaustive(&n), laws, &mut tallies, "");
        }
    }
    tallies
}

/// Runs every selected law on every selected instance, in the given order.
pub fn run_suite(instances: &[Instance], laws: &[SuiteLaw], cfg: SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for &instance in instances {
        let applicable: Vec<SuiteLaw> = laws
            .iter()
            .copied()
            .filter(|&l| expected(instance, l).is_some())
            .collect();
        let tallies = run_instance(instance, &applicable, cfg);
        for &law in laws {
            let t = applicable.iter().position(|&l| l == law).map(|k| &tallies[k]);
            let ran = t.filter(|t| t.ran);
            out.push(Outcome {
                instance,
                law,
                expected: expected(instance, law),
                observed: ran.map(|t| if t.violations == 0 { Status::Pass } else { Status::Fail }),
                checked: ran.map_or(0, |t| t.checked),
                violations: ran.map_or(0, |t| t.violations),
                witness: ran.and_then(|t| t.witness.clone()),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ridge_edges_are_dyadic() {
        let g = ridge_graph();
        for n in g.nodes() {
            for &(_, len) in g.out_edges(n) {
                assert!(len == 1.5 || len == 2.5, "edge length {len}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for i in Instance::ALL {
            assert_eq!(i.name().parse::<Instance>().unwrap(), i);
        }
        for l in SuiteLaw::ALL {
            assert_eq!(l.name().parse::<SuiteLaw>().unwrap(), l);
        }
        assert!("bogus".parse::<SuiteLaw>().is_err());
    }

    #[test]
    fn sampler_is_seeded() {
        let a = format!("{:?}", berg_sampler(1, 2));
        assert_eq!(a, format!("{:?}", berg_sampler(1, 2)));
        assert_ne!(a, format!("{:?}", berg_sampler(2, 2)));
    }

    #[test]
    fn integer_contravariance_witness_leads() {
        let out = run_suite(
            &[Instance::BergIntFloor],
            &[SuiteLaw::Contravar],
            SuiteConfig {
                seed: 0,
                max_path_len: 2,
            },
        );
        assert_eq!(out[0].observed, Some(Status::Fail));
        let w = out[0].witness.as_deref().unwrap();
        assert!(w.contains("norphism=10 lhs=7 rhs=6"), "{w}");
    }
}
