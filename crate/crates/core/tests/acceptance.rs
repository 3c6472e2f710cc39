//! Acceptance criteria. Each check prints one `criterion N: PASS|FAIL ...`
//! line and then asserts; the runner reports every check and exits non-zero
//! if any failed.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use nategory::berg::{
    plan, BergNategory, BergNorphism, Bound, Connectivity, Domain, NodeId, PathSampler, Schema, SteepnessInterval,
    Terrain, TerrainGraph,
};
use nategory::category::{
    family, FiniteCategory, NegationNategory, PowersetNategory, ThinNategory, TrivialNategory, WeakNategory,
};
use nategory::cli::suite::{berg_sampler, ridge_graph};
use nategory::codesign::{right_witnesses, CodesignNategory, PearsAndRaisins};
use nategory::gset::{
    compare_bridge, enumerate_morphisms, enumerate_objects, g_compose, g_identity, g_product_mor, g_product_obj,
    g_validate, GMorphism, GObject, DEFAULT_CAP,
};
use nategory::nategory::{check_equivariance, check_exactness, check_pn_properties, Evidence, Law, Scope, ScopeOf};
use nategory::{FiniteNategory, Nategory};

fn verdict(n: u32, ok: bool, detail: &str, elapsed: Duration) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n}: {status} {detail} ({:.2}s)", elapsed.as_secs_f64());
}

fn strip() -> TerrainGraph {
    let terrain = Terrain::from_fn(1, 3, 1.5, |_, _| 0.0).unwrap();
    TerrainGraph::build(terrain, SteepnessInterval::unconstrained(), Connectivity::Four)
}

fn value(e: &Evidence<nategory::berg::BergPath, BergNorphism>) -> Option<Bound> {
    match e {
        Evidence::Norphism(n) => Some(n.value),
        _ => None,
    }
}

fn criterion_1_intfloor_contravar_witness() {
    let t = Instant::now();
    let graph = strip();
    let inst = BergNategory::new(&graph, Domain::IntFloor);
    let scope = Scope::sampled(&inst, &PathSampler::new(2, vec![Bound::Finite(10.0)], vec![])).unwrap();
    let reports = check_pn_properties(&inst, &scope);
    let contravar = reports.iter().find(|r| r.law == Law::Contravar).unwrap();
    let witnesses: Vec<_> = contravar
        .counterexamples
        .iter()
        .map(|cx| {
            let lens: Vec<f64> = cx.morphisms.iter().map(|m| m.length()).collect();
            (
                cx.norphism.as_ref().map(|n| n.value),
                lens,
                value(&cx.lhs),
                value(&cx.rhs),
            )
        })
        .collect();
    let expected = (
        Some(Bound::Finite(10.0)),
        vec![1.5, 1.5],
        Some(Bound::Finite(7.0)),
        Some(Bound::Finite(6.0)),
    );
    let ok = !witnesses.is_empty() && witnesses.iter().all(|w| *w == expected);
    let elapsed = t.elapsed();
    verdict(
        1,
        ok && elapsed < Duration::from_secs(1),
        &format!("{} contravar witnesses, first {:?}", witnesses.len(), witnesses.first()),
        elapsed,
    );
    assert!(ok, "{witnesses:?}");
}

fn criterion_2_pears_and_raisins() {
    let t = Instant::now();
    let ex = PearsAndRaisins::new();
    let holds = ex.composite().get(10, 4);
    let w = right_witnesses(&ex.n, &ex.d, 10, 4).unwrap();
    let ok = holds && !w.is_empty() && w.iter().all(|&q| (40..50).contains(&q));
    let elapsed = t.elapsed();
    verdict(
        2,
        ok && elapsed < Duration::from_secs(1),
        &format!("(n ▸ d)(10, 4) = {holds}, witnesses {:?}..={:?}", w.first(), w.last()),
        elapsed,
    );
    assert!(ok);
    assert_eq!(w, (40..50).collect::<Vec<_>>());
}

/// Every category of the harness family with at most three morphisms per hom-set.
fn categories() -> Vec<FiniteCategory> {
    let cats = family::standard(3);
    assert!(cats.iter().all(|c| c.object_count() <= 3 && c.max_hom_size() <= 3));
    cats
}

fn equivariance_violations<N: FiniteNategory>(inst: &N) -> (u64, u64) {
    let scope = Scope::exhaustive(inst).unwrap();
    let r = check_equivariance(inst, &scope);
    (r.checked, r.violations)
}

fn berg_scope<'g>(inst: &BergNategory<'g>, max_edges: usize) -> ScopeOf<BergNategory<'g>> {
    Scope::sampled(inst, &berg_sampler(0, max_edges)).unwrap()
}

fn criterion_3_equivariance() {
    let t = Instant::now();
    let cats = categories();
    let mut checked = 0;
    let mut violations = 0;
    for cat in &cats {
        for (c, v) in [
            equivariance_violations(&TrivialNategory::new(cat)),
            equivariance_violations(&NegationNategory::new(cat)),
            equivariance_violations(&PowersetNategory::new(cat)),
            equivariance_violations(&WeakNategory::new(cat)),
        ] {
            checked += c;
            violations += v;
        }
    }
    let graph = ridge_graph();
    for domain in Domain::ALL {
        let inst = BergNategory::new(&graph, domain);
        let scope = berg_scope(&inst, 6);
        let r = check_equivariance(&inst, &scope);
        checked += r.checked;
        violations += r.violations;
    }
    let elapsed = t.elapsed();
    let ok = violations == 0;
    verdict(
        3,
        ok && elapsed < Duration::from_secs(60),
        &format!(
            "{} categories x 4 constructions + 3 terrain domains: {checked} cases, {violations} violations",
            cats.len()
        ),
        elapsed,
    );
    assert!(ok);
}

fn criterion_4_exactness_statuses() {
    let t = Instant::now();
    let cats = categories();
    let powerset_exact = cats.iter().all(|cat| {
        let inst = PowersetNategory::new(cat);
        check_exactness(&inst, &Scope::exhaustive(&inst).unwrap()).passed()
    });
    let graph = ridge_graph();
    let exact = |domain| {
        let inst = BergNategory::new(&graph, domain);
        let scope = berg_scope(&inst, 6);
        let r = check_exactness(&inst, &scope);
        (r.passed(), r.violations)
    };
    let (real_exact, _) = exact(Domain::Real);
    let (intfloor_exact, intfloor_violations) = exact(Domain::IntFloor);
    let codesign = CodesignNategory::small();
    let codesign_exact = check_exactness(&codesign, &Scope::exhaustive(&codesign).unwrap()).passed();
    let ok = powerset_exact && real_exact && !intfloor_exact && codesign_exact;
    let elapsed = t.elapsed();
    verdict(
        4,
        ok,
        &format!(
            "powerset exact={powerset_exact} real exact={real_exact} intfloor exact={intfloor_exact} \
             ({intfloor_violations} violations) codesign exact={codesign_exact}; nonneg reported separately"
        ),
        elapsed,
    );
    assert!(ok);
}

/// The non-negative clamped domain is claimed inexact. With `i(n, f)` read as
/// `length(f) < n`, clamping at zero never changes an answer, so no witness
/// exists and this sub-item fails.
fn criterion_4_nonneg_clamping_witness() {
    let t = Instant::now();
    let graph = ridge_graph();
    let inst = BergNategory::new(&graph, Domain::NonNeg);
    let scope = berg_scope(&inst, 6);
    let r = check_exactness(&inst, &scope);
    let clamping = r.counterexamples.iter().find(|cx| {
        let n = cx.norphism.as_ref().and_then(|n| n.value.finite());
        let f = cx.morphisms.first().map(|f| f.length());
        matches!((n, f), (Some(n), Some(f)) if f > n)
    });
    let ok = !r.passed() && clamping.is_some();
    verdict(
        4,
        ok,
        &format!(
            "nonneg inexact with clamping witness: {} cases, {} violations",
            r.checked, r.violations
        ),
        t.elapsed(),
    );
    assert!(ok, "no exactness violation among {} cases", r.checked);
}

fn pn_status<N: Nategory>(inst: &N, scope: &ScopeOf<N>) -> Vec<(Law, bool)> {
    check_pn_properties(inst, scope)
        .into_iter()
        .map(|r| (r.law, r.passed()))
        .collect()
}

fn passes(statuses: &[(Law, bool)], law: Law) -> bool {
    statuses.iter().find(|(l, _)| *l == law).unwrap().1
}

fn criterion_5_action_law_statuses() {
    let t = Instant::now();
    let cats = family::standard(2);
    let mut powerset_all = true;
    let mut weak_neut_fails = false;
    for cat in &cats {
        let p = PowersetNategory::new(cat);
        powerset_all &= pn_status(&p, &Scope::exhaustive(&p).unwrap()).iter().all(|(_, ok)| *ok);
        let w = WeakNategory::new(cat);
        let s = pn_status(&w, &Scope::exhaustive(&w).unwrap());
        weak_neut_fails |= !passes(&s, Law::Neut1) && !passes(&s, Law::Neut2);
    }
    let graph = ridge_graph();
    let real = BergNategory::new(&graph, Domain::Real);
    let s = pn_status(&real, &berg_scope(&real, 3));
    let real_ok = [Law::Covar, Law::Contravar, Law::Comm].iter().all(|&l| passes(&s, l));
    let ints = BergNategory::new(&graph, Domain::IntFloor);
    let intfloor_fails = !passes(&pn_status(&ints, &berg_scope(&ints, 3)), Law::Contravar);

    let mut out = Vec::new();
    let code = nategory::cli::run(["nategory", "check"], &mut out, &mut Vec::new());
    let ok = powerset_all && weak_neut_fails && real_ok && intfloor_fails && code == 0;
    verdict(
        5,
        ok,
        &format!(
            "powerset all={powerset_all} weak neut fails={weak_neut_fails} real covar/contravar/comm={real_ok} \
             intfloor contravar fails={intfloor_fails} check exit={code}"
        ),
        t.elapsed(),
    );
    assert!(ok, "{}", String::from_utf8_lossy(&out));
}

const TERRAINS: u64 = 50;
const QUERIES_PER_TERRAIN: usize = 4;

fn criterion_6_planner_matches_dijkstra() {
    use rand::{Rng, SeedableRng};
    let t = Instant::now();
    let mut queries = 0;
    let mut feasible = 0;
    let mut failures = Vec::new();
    for seed in 0..TERRAINS {
        let graph = common::random_graph(seed, 20, 20);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1000 + seed);
        for _ in 0..QUERIES_PER_TERRAIN {
            let from = NodeId(rng.gen_range(0..graph.node_count()));
            let to = NodeId(rng.gen_range(0..graph.node_count()));
            let oracle = common::dijkstra_to(&graph, to);
            let best = oracle[from.0];
            for schema in Schema::ALL {
                queries += 1;
                for v in graph.nodes() {
                    if let Bound::Finite(h) = schema.evaluate(&graph, v, to) {
                        if h > oracle[v.0] * (1.0 + 1e-9) + 1e-12 {
                            failures.push(format!(
                                "seed {seed} {schema} inadmissible at {v}: {h} > {}",
                                oracle[v.0]
                            ));
                        }
                    }
                }
                let r = plan(&graph, from, to, schema, Domain::Real).unwrap();
                match (&r.path, best.is_finite()) {
                    (Some(p), true) => {
                        feasible += 1;
                        if (p.length() - best).abs() > 1e-9 * best.max(1.0) || !r.certified {
                            failures.push(format!(
                                "seed {seed} {schema}: length {} vs {best}, certified {}",
                                p.length(),
                                r.certified
                            ));
                        }
                    }
                    (None, false) => {}
                    (path, _) => failures.push(format!("seed {seed} {schema}: path {path:?}, oracle {best}")),
                }
            }
        }
    }
    let elapsed = t.elapsed();
    let ok = failures.is_empty();
    verdict(
        6,
        ok && elapsed < Duration::from_secs(30),
        &format!(
            "{TERRAINS} terrains, {queries} queries ({feasible} feasible), {} failures",
            failures.len()
        ),
        elapsed,
    );
    assert!(ok, "{failures:#?}");
    assert!(feasible > 0);
}

fn criterion_7_infeasibility_certificate() {
    let t = Instant::now();
    let terrain = Terrain::parse_csv(include_str!("../examples/data/step.csv")).unwrap();
    let graph = TerrainGraph::build(terrain, SteepnessInterval::new(0.0, 0.0).unwrap(), Connectivity::Eight);
    let (from, to) = (graph.node(0, 0).unwrap(), graph.node(0, 2).unwrap());
    let mut ok = true;
    for schema in Schema::ALL {
        for domain in Domain::ALL {
            let r = plan(&graph, from, to, schema, domain).unwrap();
            ok &= r.path.is_none() && r.bound.value == Bound::Infinite && r.certified;
        }
    }
    let elapsed = t.elapsed();
    verdict(
        7,
        ok && elapsed < Duration::from_secs(1),
        "level walking across a step: no path, bound +inf, every schema and domain",
        elapsed,
    );
    assert!(ok);
}

/// `κ₁(b q₂, a₁) ⇒ κ₂(q₂, f a₁)`, evaluated directly on the tables.
fn valid(o1: &GObject, o2: &GObject, r: &GMorphism) -> bool {
    (0..o2.questions())
        .all(|q2| (0..o1.answers()).all(|a1| !o1.get(r.backward()[q2], a1) || o2.get(q2, r.forward()[a1])))
}

fn criterion_8_gset_laws() {
    let t = Instant::now();
    let objects = enumerate_objects(2, 2);
    let k = objects.len();
    let homs: Vec<Vec<GMorphism>> = (0..k * k)
        .map(|i| enumerate_morphisms(&objects[i / k], &objects[i % k]))
        .collect();
    let hom = |a: usize, b: usize| &homs[a * k + b];
    let total: usize = homs.iter().map(Vec::len).sum();
    let mut violations = Vec::new();

    for a in 0..k {
        for b in 0..k {
            for r in hom(a, b) {
                if !valid(&objects[a], &objects[b], r) {
                    violations.push(format!("enumerated invalid {r:?}"));
                }
                if g_compose(&g_identity(&objects[a]), r).unwrap() != *r
                    || g_compose(r, &g_identity(&objects[b])).unwrap() != *r
                {
                    violations.push(format!("unit {r:?}"));
                }
                for c in 0..k {
                    for s in hom(b, c) {
                        let rs = g_compose(r, s).unwrap();
                        if !g_validate(&rs, &objects[a], &objects[c]).unwrap() {
                            violations.push(format!("composite invalid {r:?} {s:?}"));
                        }
                        for d in 0..k {
                            for u in hom(c, d) {
                                if g_compose(&rs, u).unwrap() != g_compose(r, &g_compose(s, u).unwrap()).unwrap() {
                                    violations.push(format!("associativity {r:?} {s:?} {u:?}"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // Interchange depends only on the maps, so composable pairs are deduplicated.
    let mut pairs = HashSet::new();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for r in hom(a, b) {
                    for s in hom(b, c) {
                        pairs.insert((r.clone(), s.clone()));
                    }
                }
            }
        }
    }
    let pairs: Vec<_> = pairs.into_iter().collect();
    for (r, r2) in &pairs {
        let rr2 = g_compose(r, r2).unwrap();
        for (s, s2) in &pairs {
            let lhs = g_compose(
                &g_product_mor(r, s, DEFAULT_CAP).unwrap(),
                &g_product_mor(r2, s2, DEFAULT_CAP).unwrap(),
            )
            .unwrap();
            let rhs = g_product_mor(&rr2, &g_compose(s, s2).unwrap(), DEFAULT_CAP).unwrap();
            if lhs != rhs {
                violations.push(format!("interchange {r:?} {r2:?} {s:?} {s2:?}"));
            }
        }
    }

    // The product of valid morphisms is valid between product objects.
    let mut products = 0;
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for d in 0..k {
                    let (rs, ss) = (hom(a, b), hom(c, d));
                    if rs.is_empty() || ss.is_empty() {
                        continue;
                    }
                    let src = g_product_obj(&objects[a], &objects[c], DEFAULT_CAP).unwrap();
                    let dst = g_product_obj(&objects[b], &objects[d], DEFAULT_CAP).unwrap();
                    for r in rs {
                        for s in ss {
                            products += 1;
                            if !valid(&src, &dst, &g_product_mor(r, s, DEFAULT_CAP).unwrap()) {
                                violations.push(format!("product invalid {r:?} {s:?}"));
                            }
                        }
                    }
                }
            }
        }
    }

    let elapsed = t.elapsed();
    let ok = violations.is_empty();
    verdict(
        8,
        ok && elapsed < Duration::from_secs(60),
        &format!(
            "{k} objects, {total} valid morphisms, {} distinct composable pairs, {products} products: {} violations",
            pairs.len(),
            violations.len()
        ),
        elapsed,
    );
    assert!(ok, "{:#?}", &violations[..violations.len().min(10)]);
}

#[derive(Default)]
struct Tally {
    instances: usize,
    triples: usize,
    skipped: usize,
    disagreements: Vec<String>,
}

impl Tally {
    fn add<N: FiniteNategory>(&mut self, name: &str, inst: &N) {
        let scope = Scope::exhaustive(inst).unwrap();
        let c = compare_bridge(inst, &scope, DEFAULT_CAP).unwrap();
        self.instances += 1;
        self.triples += c.triples;
        self.skipped += c.skipped;
        if !c.agrees() {
            self.disagreements.push(format!(
                "{name}: validity {:?} exactness {:?}",
                c.validity_disagreements, c.exactness_disagreements
            ));
        }
    }
}

fn criterion_9_bridge_equivalence() {
    let t = Instant::now();
    let mut tally = Tally::default();
    for cat in &family::standard(2) {
        tally.add("trivial", &TrivialNategory::new(cat));
        tally.add("negation", &NegationNategory::new(cat));
        tally.add("powerset", &PowersetNategory::new(cat));
        tally.add("weak", &WeakNategory::new(cat));
    }
    for thin in &family::thin_preorders(3) {
        tally.add("thin", &ThinNategory::new(thin));
    }
    tally.add("codesign", &CodesignNategory::small());
    let broken_cat = common::collapsing_category();
    let broken = common::BrokenPowerset { cat: &broken_cat };
    tally.add("broken", &broken);
    let broken_scope = Scope::exhaustive(&broken).unwrap();
    let broken_cmp = compare_bridge(&broken, &broken_scope, DEFAULT_CAP).unwrap();
    let caught = broken_cmp.valid < broken_cmp.triples;

    let elapsed = t.elapsed();
    let ok = tally.disagreements.is_empty() && caught;
    verdict(
        9,
        ok,
        &format!(
            "{} instances, {} triples ({} over the cap), {} disagreements, broken actions rejected={caught}",
            tally.instances,
            tally.triples,
            tally.skipped,
            tally.disagreements.len()
        ),
        elapsed,
    );
    assert!(ok, "{:#?}", tally.disagreements);
}

fn main() {
    let checks: [(&str, fn()); 10] = [
        (
            "criterion_1_intfloor_contravar_witness",
            criterion_1_intfloor_contravar_witness,
        ),
        ("criterion_2_pears_and_raisins", criterion_2_pears_and_raisins),
        ("criterion_3_equivariance", criterion_3_equivariance),
        ("criterion_4_exactness_statuses", criterion_4_exactness_statuses),
        (
            "criterion_4_nonneg_clamping_witness",
            criterion_4_nonneg_clamping_witness,
        ),
        ("criterion_5_action_law_statuses", criterion_5_action_law_statuses),
        (
            "criterion_6_planner_matches_dijkstra",
            criterion_6_planner_matches_dijkstra,
        ),
        (
            "criterion_7_infeasibility_certificate",
            criterion_7_infeasibility_certificate,
        ),
        ("criterion_8_gset_laws", criterion_8_gset_laws),
        ("criterion_9_bridge_equivalence", criterion_9_bridge_equivalence),
    ];
    std::panic::set_hook(Box::new(|info| eprintln!("  {info}")));
    let failed: Vec<&str> = checks
        .iter()
        .filter(|(_, check)| std::panic::catch_unwind(check).is_err())
        .map(|(name, _)| *name)
        .collect();
    println!(
        "\nacceptance: {} of {} checks passed",
        checks.len() - failed.len(),
        checks.len()
    );
    if !failed.is_empty() {
        println!("failed: {}", failed.join(", "));
        std::process::exit(1);
    }
}
