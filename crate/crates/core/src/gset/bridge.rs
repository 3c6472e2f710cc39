use crate::nategory::{check_equivariance_at, check_exactness_at, Nategory, NategoryError, ScopeOf};

use super::morphism::first_violation;
use super::{GObject, GSetError, ProductQuestion, ProductView};

/// `⟨Nom(X, Y), Hom(X, Y), i⟩`, indexed by position in the scope's lists.
pub fn pn_homobject<N: Nategory>(inst: &N, scope: &ScopeOf<N>, x: usize, y: usize) -> GObject {
    let (noms, homs) = (scope.noms(x, y), scope.homs(x, y));
    GObject::from_fn(noms.len(), homs.len(), |q, a| {
        inst.incompat_unchecked(&noms[q], &homs[a])
    })
}

/// The candidate morphism `Hom(X, Y) ⊔ Hom(Y, Z) → Hom(X, Z)` of hom-objects:
/// forward `⟨f, g⟩ ↦ f ∘ g`, backward `n ↦ ⟨g ↦ n ▸ g, f ↦ f • n⟩`.
#[derive(Debug, Clone)]
pub struct CompositionMorphism {
    pub first: GObject,
    pub second: GObject,
    pub target: GObject,
    pub backward: Vec<ProductQuestion>,
    pub forward: Vec<usize>,
}

/// Outcome of scanning a composition morphism over `Nom(X, Z) × Hom(X, Y) × Hom(Y, Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BridgeReport {
    pub checked: u64,
    /// `i(n ▸ g, f) ⇒ i(n, f ∘ g)` failures, the left disjunct of validity.
    pub left_violations: u64,
    /// `i(f • n, g) ⇒ i(n, f ∘ g)` failures, the right disjunct.
    pub right_violations: u64,
    /// Cases where either disjunct differs from `i(n, f ∘ g)`.
    pub refined_violations: u64,
}

impl BridgeReport {
    /// The map pair is a valid morphism.
    pub fn valid(&self) -> bool {
        self.left_violations == 0 && self.right_violations == 0
    }

    /// Both implications hold as equivalences.
    pub fn refined(&self) -> bool {
        self.refined_violations == 0
    }
}

impl CompositionMorphism {
    pub fn source(&self) -> ProductView<'_> {
        ProductView::new(&self.first, &self.second)
    }

    /// Validity through the generic check on the lazily viewed product.
    pub fn is_valid(&self) -> bool {
        first_violation(&self.source(), &self.target, &self.backward, &self.forward)
            .expect("shapes built consistently")
            .is_none()
    }

    pub fn report(&self) -> BridgeReport {
        let src = self.source();
        let mut r = BridgeReport::default();
        for (q2, q1) in self.backward.iter().enumerate() {
            for (a1, &a2) in self.forward.iter().enumerate() {
                let (left, right) = src.kappa_parts(q1, a1);
                let rhs = self.target.get(q2, a2);
                r.checked += 1;
                r.left_violations += (left && !rhs) as u64;
                r.right_violations += (right && !rhs) as u64;
                r.refined_violations += (left != rhs || right != rhs) as u64;
            }
        }
        r
    }
}

/// Entries the composition morphism materialises on a triple.
pub fn bridge_size<N: Nategory>(scope: &ScopeOf<N>, x: usize, y: usize, z: usize) -> u128 {
    let (f, g, n) = (
        scope.homs(x, y).len() as u128,
        scope.homs(y, z).len() as u128,
        scope.noms(x, z).len() as u128,
    );
    n * (f + g) + f * g
}

fn position<T: PartialEq + std::fmt::Debug>(list: &[T], item: &T, what: &str) -> Result<usize, GSetError> {
    list.iter()
        .position(|t| t == item)
        .ok_or_else(|| NategoryError::NotEnumerated(format!("{what} {item:?}")).into())
}

/// Builds the composition morphism on the scope objects at `x`, `y`, `z`.
///
/// The product is never materialised; `cap` bounds the entries of the map
/// tables and hom-object κ tables instead. Every composite must appear in
/// the scope.
pub fn pn_composition_morphism<N: Nategory>(
    inst: &N,
    scope: &ScopeOf<N>,
    x: usize,
    y: usize,
    z: usize,
    cap: u128,
) -> Result<CompositionMorphism, GSetError> {
    let size = bridge_size::<N>(scope, x, y, z);
    if size > cap {
        return Err(GSetError::SizeCap {
            what: "composition morphism",
            size,
            cap,
        });
    }
    let (fs, gs) = (scope.homs(x, y), scope.homs(y, z));
    let (nxy, nyz, nxz) = (scope.noms(x, y), scope.noms(y, z), scope.noms(x, z));
    let backward = nxz
        .iter()
        .map(|n| {
            Ok(ProductQuestion {
                left: gs
                    .iter()
                    .map(|g| position(nxy, &inst.ncompose_right_unchecked(n, g), "norphism"))
                    .collect::<Result<_, GSetError>>()?,
                right: fs
                    .iter()
                    .map(|f| position(nyz, &inst.ncompose_left_unchecked(f, n), "norphism"))
                    .collect::<Result<_, GSetError>>()?,
            })
        })
        .collect::<Result<Vec<_>, GSetError>>()?;
    let hxz = scope.homs(x, z);
    let mut forward = vec![0; fs.len() * gs.len()];
    for (j, g) in gs.iter().enumerate() {
        for (i, f) in fs.iter().enumerate() {
            forward[i + fs.len() * j] = position(hxz, &inst.compose_unchecked(f, g), "morphism")?;
        }
    }
    Ok(CompositionMorphism {
        first: pn_homobject(inst, scope, x, y),
        second: pn_homobject(inst, scope, y, z),
        target: pn_homobject(inst, scope, x, z),
        backward,
        forward,
    })
}

/// Bridge results against the direct law checkers, over every object triple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BridgeComparison {
    pub triples: usize,
    /// Triples over the cap.
    pub skipped: usize,
    /// Triples whose bridge morphism is valid.
    pub valid: usize,
    /// Triples whose bridge morphism satisfies the refined check.
    pub refined: usize,
    /// Triples `(x, y, z)` where validity and equivariance disagree.
    pub validity_disagreements: Vec<[usize; 3]>,
    /// Triples where the refined check and exactness disagree.
    pub exactness_disagreements: Vec<[usize; 3]>,
}

impl BridgeComparison {
    pub fn agrees(&self) -> bool {
        self.validity_disagreements.is_empty() && self.exactness_disagreements.is_empty()
    }
}

pub fn compare_bridge<N: Nategory>(inst: &N, scope: &ScopeOf<N>, cap: u128) -> Result<BridgeComparison, GSetError> {
    let mut out = BridgeComparison::default();
    let k = scope.len();
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let m = match pn_composition_morphism(inst, scope, x, y, z, cap) {
                    Ok(m) => m,
                    Err(GSetError::SizeCap { .. }) => {
                        out.skipped += 1;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                out.triples += 1;
                let report = m.report();
                let valid = m.is_valid();
                debug_assert_eq!(valid, report.valid());
                out.valid += valid as usize;
                out.refined += report.refined() as usize;
                if valid != check_equivariance_at(inst, scope, x, y, z).passed() {
                    out.validity_disagreements.push([x, y, z]);
                }
                if report.refined() != check_exactness_at(inst, scope, x, y, z).passed() {
                    out.exactness_disagreements.push([x, y, z]);
                }
            }
        }
    }
    Ok(out)
}
