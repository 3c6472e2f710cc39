mod common;

use nategory::category::{
    family, parse_category, FiniteCategory, MorphismSet, NegationNategory, PowersetNategory, ThinCategory,
    ThinNategory, TrivialNategory, WeakNategory,
};
use nategory::nategory::{
    check_category_laws, check_equivariance, check_exactness, check_pn_properties, exclusion_set, Law, Scope,
};
use nategory::{FiniteNategory, Nategory};

/// Preimage under pre- and post-composition, computed from the composition
/// table alone.
fn preimages(cat: &FiniteCategory, n: &MorphismSet) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let (x, z) = (n.source(), n.target());
    let left = cat
        .objects()
        .flat_map(|y| cat.hom(x, y))
        .map(|&f| {
            let y = cat.target(f);
            cat.hom(y, z)
                .iter()
                .filter(|&&g| n.contains(cat.compose(f, g).unwrap()))
                .map(|g| g.0)
                .collect()
        })
        .collect();
    let right = cat
        .objects()
        .flat_map(|y| cat.hom(y, z).to_vec())
        .map(|g| {
            let y = cat.source(g);
            cat.hom(x, y)
                .iter()
                .filter(|&&f| n.contains(cat.compose(f, g).unwrap()))
                .map(|f| f.0)
                .collect()
        })
        .collect();
    (left, right)
}

#[test]
fn powerset_actions_are_preimages() {
    for cat in family::standard(2).iter().step_by(7) {
        let inst = PowersetNategory::new(cat);
        for x in cat.objects() {
            for z in cat.objects() {
                for n in inst.nom(&x, &z).unwrap() {
                    let (want_left, want_right) = preimages(cat, &n);
                    let got_left: Vec<Vec<usize>> = cat
                        .objects()
                        .flat_map(|y| cat.hom(x, y))
                        .map(|f| {
                            inst.ncompose_left(f, &n)
                                .unwrap()
                                .members()
                                .iter()
                                .map(|m| m.0)
                                .collect()
                        })
                        .collect();
                    let got_right: Vec<Vec<usize>> = cat
                        .objects()
                        .flat_map(|y| cat.hom(y, z).to_vec())
                        .map(|g| {
                            inst.ncompose_right(&n, &g)
                                .unwrap()
                                .members()
                                .iter()
                                .map(|m| m.0)
                                .collect()
                        })
                        .collect();
                    assert_eq!(got_left, want_left);
                    assert_eq!(got_right, want_right);
                }
            }
        }
    }
}

#[test]
fn exclusion_set_of_a_powerset_norphism_is_itself() {
    let cat = common::collapsing_category();
    let inst = PowersetNategory::new(&cat);
    let weak = WeakNategory::new(&cat);
    for x in cat.objects() {
        for y in cat.objects() {
            for n in inst.nom(&x, &y).unwrap() {
                assert_eq!(exclusion_set(&inst, &n).unwrap().members, n.members());
                assert_eq!(exclusion_set(&weak, &n).unwrap().members, n.members());
            }
        }
    }
}

#[test]
fn statuses_over_the_family() {
    for cat in family::standard(2) {
        let t = TrivialNategory::new(&cat);
        let s = Scope::exhaustive(&t).unwrap();
        assert!(check_category_laws(&t, &s).passed());
        assert!(check_exactness(&t, &s).passed());

        let n = NegationNategory::new(&cat);
        let s = Scope::exhaustive(&n).unwrap();
        assert!(check_equivariance(&n, &s).passed());
        assert!(check_pn_properties(&n, &s).iter().all(|r| r.passed()));

        let p = PowersetNategory::new(&cat);
        let s = Scope::exhaustive(&p).unwrap();
        assert!(check_exactness(&p, &s).passed());
    }
}

#[test]
fn weak_construction_breaks_neutrality_but_keeps_functoriality() {
    let cat = common::collapsing_category();
    let w = WeakNategory::new(&cat);
    let s = Scope::exhaustive(&w).unwrap();
    let reports = check_pn_properties(&w, &s);
    let passed = |law| reports.iter().find(|r| r.law == law).unwrap().passed();
    assert!(!passed(Law::Neut1) && !passed(Law::Neut2));
    assert!(passed(Law::Covar) && passed(Law::Contravar) && passed(Law::Comm));
    assert!(check_equivariance(&w, &s).passed());
    assert!(!check_exactness(&w, &s).passed());
}

#[test]
fn broken_actions_are_caught_and_replayable() {
    let cat = common::collapsing_category();
    let inst = common::BrokenPowerset { cat: &cat };
    let s = Scope::exhaustive(&inst).unwrap();
    let r = check_equivariance(&inst, &s);
    assert!(!r.passed());
    for cx in &r.counterexamples {
        assert!(cx.recheck(&inst).unwrap(), "{cx:?}");
        // The honest construction agrees on the arrows, so the replay is clean there.
        let honest = PowersetNategory::new(&cat);
        assert!(!cx.recheck(&honest).unwrap());
    }
}

#[test]
fn parsed_category_matches_a_built_one() {
    let parsed = parse_category(
        "objects: X, Y, Z\nf: X -> Y\nf2: X -> Y\ng: Y -> Z\nh1: X -> Z\nh2: X -> Z\nf;g = h1\nf2;g = h2\n",
    )
    .unwrap();
    let built = common::collapsing_category();
    assert_eq!(parsed.morphism_count(), built.morphism_count());
    let (f, g) = (
        parsed.morphism_by_name("f2").unwrap(),
        parsed.morphism_by_name("g").unwrap(),
    );
    assert_eq!(parsed.morphism_name(parsed.compose(f, g).unwrap()), "h2");
    assert!(parse_category("objects: X\nf: X -> Y\n").is_err());
}

#[test]
fn thin_nom_sets_are_unreachability() {
    for thin in family::thin_preorders(3) {
        let inst = ThinNategory::new(&thin);
        let s = Scope::exhaustive(&inst).unwrap();
        assert!(check_exactness(&inst, &s).passed());
        for x in 0..thin.len() {
            for z in 0..thin.len() {
                assert_eq!(inst.nom(&x, &z).unwrap().is_empty(), reachable(&thin, x, z));
            }
        }
    }
}

/// Breadth-first search over the arrows of the preorder itself.
fn reachable(thin: &ThinCategory, x: usize, z: usize) -> bool {
    let mut seen = vec![false; thin.len()];
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        if v == z {
            return true;
        }
        if std::mem::replace(&mut seen[v], true) {
            continue;
        }
        stack.extend((0..thin.len()).filter(|&w| thin.hom(v, w).is_some()));
    }
    false
}

#[test]
fn preorder_family_counts() {
    // Number of preorders on 1, 2, 3 labelled points.
    assert_eq!(family::thin_preorders(3).len(), 1 + 4 + 29);
}
