//! Exhaustive families of small finite categories for law checking.

use super::{FiniteCategory, MorId, ObjId, ThinCategory};

const NAMES: [&str; 4] = ["A", "B", "C", "D"];

/// Every preorder on `1..=max_objects` labelled objects, obtained as the
/// reachability preorders of all digraphs and deduplicated.
pub fn thin_preorders(max_objects: usize) -> Vec<ThinCategory> {
    assert!(max_objects <= NAMES.len(), "at most {} objects", NAMES.len());
    let mut out = Vec::new();
    for n in 1..=max_objects {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        let mut seen: Vec<ThinCategory> = Vec::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let t = ThinCategory::from_graph_reachability(&NAMES[..n], &edges).expect("valid graph");
            if !seen.contains(&t) {
                seen.push(t);
            }
        }
        out.extend(seen);
    }
    out
}

/// [`thin_preorders`] as finite categories.
pub fn preorders(max_objects: usize) -> Vec<FiniteCategory> {
    thin_preorders(max_objects)
        .iter()
        .map(ThinCategory::to_category)
        .collect()
}

/// Every monoid structure on `{1, a, b, ...}` of order `1..=max_order`, as a
/// one-object category. Labelled, so isomorphic copies appear more than once.
pub fn monoids(max_order: usize) -> Vec<FiniteCategory> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        let k = order - 1;
        let cells = k * k;
        let total = order.pow(cells as u32);
        for code in 0..total {
            let mut b = FiniteCategory::builder();
            let x = b.object("M").expect("fresh");
            let mut elems = vec![b.identity(x)];
            for i in 0..k {
                elems.push(b.morphism(&format!("a{i}"), x, x).expect("fresh"));
            }
            let mut c = code;
            for i in 0..k {
                for j in 0..k {
                    let h = elems[c % order];
                    c /= order;
                    b.compose(elems[i + 1], elems[j + 1], h).expect("well-typed");
                }
            }
            if let Ok(cat) = b.build() {
                out.push(cat);
            }
        }
    }
    out
}

/// Categories `X → Y → Z` with `|Hom(X,Y)| = a`, `|Hom(Y,Z)| = b`,
/// `|Hom(X,Z)| = c` for all `a, b, c ≤ max_hom`, and every composition
/// function `Hom(X,Y) × Hom(Y,Z) → Hom(X,Z)`. Associativity is automatic.
pub fn composable_pairs(max_hom: usize) -> Vec<FiniteCategory> {
    let mut out = Vec::new();
    for a in 0..=max_hom {
        for b_ in 0..=max_hom {
            for c in 0..=max_hom {
                let cells = (a * b_) as u32;
                if cells > 0 && c == 0 {
                    continue;
                }
                let total = if cells == 0 { 1 } else { c.pow(cells) };
                for code in 0..total {
                    out.push(composable_pair(a, b_, c, code));
                }
            }
        }
    }
    out
}

fn composable_pair(a: usize, b_: usize, c: usize, mut code: usize) -> FiniteCategory {
    let mut b = FiniteCategory::builder();
    let [x, y, z]: [ObjId; 3] = ["X", "Y", "Z"].map(|n| b.object(n).expect("fresh"));
    let fs: Vec<MorId> = (0..a)
        .map(|i| b.morphism(&format!("f{i}"), x, y).expect("fresh"))
        .collect();
    let gs: Vec<MorId> = (0..b_)
        .map(|i| b.morphism(&format!("g{i}"), y, z).expect("fresh"))
        .collect();
    let hs: Vec<MorId> = (0..c)
        .map(|i| b.morphism(&format!("h{i}"), x, z).expect("fresh"))
        .collect();
    for &f in &fs {
        for &g in &gs {
            b.compose(f, g, hs[code % c]).expect("well-typed");
            code /= c;
        }
    }
    b.build().expect("no composable triples")
}

/// The standard family: [`preorders`] on up to 3 objects, [`monoids`] up to
/// order `max_hom`, and [`composable_pairs`] up to `max_hom`.
pub fn standard(max_hom: usize) -> Vec<FiniteCategory> {
    let mut out = preorders(3);
    out.extend(monoids(max_hom));
    out.extend(composable_pairs(max_hom));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preorder_counts() {
        // Labelled preorders on 1, 2, 3 points: 1, 4, 29.
        assert_eq!(preorders(3).len(), 1 + 4 + 29);
    }

    #[test]
    fn monoid_counts() {
        // Monoid tables with a fixed identity on 1, 2, 3 elements: 1, 2, 11.
        assert_eq!(monoids(3).len(), 1 + 2 + 11);
    }

    #[test]
    fn composable_pair_hom_sizes_are_bounded() {
        let fam = composable_pairs(2);
        assert!(fam.iter().all(|c| c.max_hom_size() <= 2));
        // a, b, c in 0..=2 with c ≥ 1 whenever a·b > 0.
        let expected: usize = (0..=2usize)
            .flat_map(|a| (0..=2usize).flat_map(move |b| (0..=2usize).map(move |c| (a, b, c))))
            .map(|(a, b, c)| if a * b == 0 { 1 } else { c.pow((a * b) as u32) })
            .sum();
        assert_eq!(fam.len(), expected);
    }
}
