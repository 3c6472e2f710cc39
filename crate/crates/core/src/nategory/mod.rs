//! The nategory contract and its law checkers.
//!
//! Instances implement [`Nategory`]. The `*_unchecked` operations assume the
//! caller already matched signatures; the provided checked wrappers
//! ([`Nategory::compose`], [`Nategory::ncompose_left`], ...) validate
//! endpoints and return [`NategoryError::Signature`] on a mismatch.
//!
//! Hom-sets need not be finite. Law checkers run over a [`Scope`], which is
//! either the full enumeration of a [`FiniteNategory`] or the output of a
//! caller-supplied [`ArrowSampler`].

mod laws;
mod scope;

use std::fmt::Debug;

use thiserror::Error;

pub use laws::{
    check_category_laws, check_equivariance, check_equivariance_at, check_exactness, check_exactness_at,
    check_pn_properties, Counterexample, Evidence, Law, LawReport, ReportOf, MAX_COUNTEREXAMPLES,
};
pub use scope::{ArrowSampler, Scope, ScopeOf};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NategoryError {
    #[error("signature mismatch in {op}: {detail}")]
    Signature { op: &'static str, detail: String },
    #[error("enumeration unavailable: {0}")]
    Enumeration(String),
    #[error("size cap exceeded: {what} needs {size}, cap is {cap}")]
    SizeCap { what: String, size: u128, cap: u128 },
    #[error("{0} is not a member of the enumerated set")]
    NotEnumerated(String),
}

/// A category with norphisms.
pub trait Nategory {
    type Object: Clone + PartialEq + Debug;
    type Morphism: Clone + PartialEq + Debug;
    type Norphism: Clone + PartialEq + Debug;

    fn mor_source(&self, f: &Self::Morphism) -> Self::Object;
    fn mor_target(&self, f: &Self::Morphism) -> Self::Object;
    fn nor_source(&self, n: &Self::Norphism) -> Self::Object;
    fn nor_target(&self, n: &Self::Norphism) -> Self::Object;

    fn identity(&self, x: &Self::Object) -> Self::Morphism;

    /// `f ∘ g` for `f : X → Y`, `g : Y → Z`.
    fn compose_unchecked(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism;

    /// `i(n, f)` for parallel `n : X ⇢ Y`, `f : X → Y`.
    fn incompat_unchecked(&self, n: &Self::Norphism, f: &Self::Morphism) -> bool;

    /// `f • n : Y ⇢ Z` for `f : X → Y`, `n : X ⇢ Z`.
    fn ncompose_left_unchecked(&self, f: &Self::Morphism, n: &Self::Norphism) -> Self::Norphism;

    /// `n ▸ g : X ⇢ Y` for `n : X ⇢ Z`, `g : Y → Z`.
    fn ncompose_right_unchecked(&self, n: &Self::Norphism, g: &Self::Morphism) -> Self::Norphism;

    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism, NategoryError> {
        let (mid_f, mid_g) = (self.mor_target(f), self.mor_source(g));
        if mid_f != mid_g {
            return Err(NategoryError::Signature {
                op: "compose",
                detail: format!("target {mid_f:?} of first morphism != source {mid_g:?} of second"),
            });
        }
        Ok(self.compose_unchecked(f, g))
    }

    fn incompat(&self, n: &Self::Norphism, f: &Self::Morphism) -> Result<bool, NategoryError> {
        let nor = (self.nor_source(n), self.nor_target(n));
        let mor = (self.mor_source(f), self.mor_target(f));
        if nor != mor {
            return Err(NategoryError::Signature {
                op: "incompat",
                detail: format!("norphism {nor:?} is not parallel to morphism {mor:?}"),
            });
        }
        Ok(self.incompat_unchecked(n, f))
    }

    fn ncompose_left(&self, f: &Self::Morphism, n: &Self::Norphism) -> Result<Self::Norphism, NategoryError> {
        let (sf, sn) = (self.mor_source(f), self.nor_source(n));
        if sf != sn {
            return Err(NategoryError::Signature {
                op: "ncompose_left",
                detail: format!("morphism source {sf:?} != norphism source {sn:?}"),
            });
        }
        Ok(self.ncompose_left_unchecked(f, n))
    }

    fn ncompose_right(&self, n: &Self::Norphism, g: &Self::Morphism) -> Result<Self::Norphism, NategoryError> {
        let (tn, tg) = (self.nor_target(n), self.mor_target(g));
        if tn != tg {
            return Err(NategoryError::Signature {
                op: "ncompose_right",
                detail: format!("norphism target {tn:?} != morphism target {tg:?}"),
            });
        }
        Ok(self.ncompose_right_unchecked(n, g))
    }
}

/// Instances whose objects, hom-sets and nom-sets can all be listed.
pub trait FiniteNategory: Nategory {
    fn objects(&self) -> Vec<Self::Object>;
    fn hom(&self, x: &Self::Object, y: &Self::Object) -> Result<Vec<Self::Morphism>, NategoryError>;
    fn nom(&self, x: &Self::Object, y: &Self::Object) -> Result<Vec<Self::Norphism>, NategoryError>;
}

/// `J(n)`: the morphisms a norphism forbids.
#[derive(Debug, Clone, PartialEq)]
pub struct ExclusionSet<O, M> {
    pub source: O,
    pub target: O,
    pub members: Vec<M>,
}

impl<O, M: PartialEq> ExclusionSet<O, M> {
    pub fn contains(&self, f: &M) -> bool {
        self.members.contains(f)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Set inclusion, ignoring order.
    pub fn is_subset_of(&self, other: &[M]) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }
}

pub fn exclusion_set<N: FiniteNategory>(
    inst: &N,
    n: &N::Norphism,
) -> Result<ExclusionSet<N::Object, N::Morphism>, NategoryError> {
    let (x, y) = (inst.nor_source(n), inst.nor_target(n));
    let members = inst
        .hom(&x, &y)?
        .into_iter()
        .filter(|f| inst.incompat_unchecked(n, f))
        .collect();
    Ok(ExclusionSet {
        source: x,
        target: y,
        members,
    })
}

/// `pre_f⁻¹(S) = { g ∈ Hom(Y, Z) : f ∘ g ∈ S }` for `f : X → Y` and `S ⊆ Hom(X, Z)`.
pub fn precomposition_preimage<N: FiniteNategory>(
    inst: &N,
    f: &N::Morphism,
    set: &ExclusionSet<N::Object, N::Morphism>,
) -> Result<Vec<N::Morphism>, NategoryError> {
    if inst.mor_source(f) != set.source {
        return Err(NategoryError::Signature {
            op: "precomposition_preimage",
            detail: "morphism and set do not share a source".into(),
        });
    }
    let y = inst.mor_target(f);
    Ok(inst
        .hom(&y, &set.target)?
        .into_iter()
        .filter(|g| set.contains(&inst.compose_unchecked(f, g)))
        .collect())
}

/// `post_g⁻¹(S) = { f ∈ Hom(X, Y) : f ∘ g ∈ S }` for `g : Y → Z` and `S ⊆ Hom(X, Z)`.
pub fn postcomposition_preimage<N: FiniteNategory>(
    inst: &N,
    g: &N::Morphism,
    set: &ExclusionSet<N::Object, N::Morphism>,
) -> Result<Vec<N::Morphism>, NategoryError> {
    if inst.mor_target(g) != set.target {
        return Err(NategoryError::Signature {
            op: "postcomposition_preimage",
            detail: "morphism and set do not share a target".into(),
        });
    }
    let y = inst.mor_source(g);
    Ok(inst
        .hom(&set.source, &y)?
        .into_iter()
        .filter(|f| set.contains(&inst.compose_unchecked(f, g)))
        .collect())
}
