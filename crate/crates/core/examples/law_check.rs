//! Parses a small category and runs the law checkers on the four canonical
//! norphism constructions over it.
//!
//! cargo run --example law_check

use nategory::category::{parse_category, NegationNategory, PowersetNategory, TrivialNategory, WeakNategory};
use nategory::nategory::{check_equivariance, check_exactness, check_pn_properties, FiniteNategory, Scope};

const TEXT: &str = "\
objects: X, Y, Z
f: X -> Y
g: Y -> Z
h: X -> Z
k: X -> Z
f;g = h
";

fn report<N: FiniteNategory>(name: &str, inst: &N) {
    let scope = Scope::exhaustive(inst).expect("small category");
    let mut line = format!("{name:<9}");
    let eq = check_equivariance(inst, &scope);
    let ex = check_exactness(inst, &scope);
    line += &format!(
        " equivariance {:<4} exactness {:<4}",
        verdict(eq.passed()),
        verdict(ex.passed())
    );
    for r in check_pn_properties(inst, &scope) {
        line += &format!(" {} {}", r.law, verdict(r.passed()));
    }
    println!("{line}");
    if let Some(cx) = ex.counterexamples.first() {
        println!("          first exactness failure: {cx:?}");
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn main() {
    let cat = parse_category(TEXT).expect("valid category");
    report("trivial", &TrivialNategory::new(&cat));
    report("negation", &NegationNategory::new(&cat));
    report("powerset", &PowersetNategory::new(&cat));
    report("weak", &WeakNategory::new(&cat));
}
