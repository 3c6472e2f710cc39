//! Finite dialectica objects and the hom-object view of a nategory.
//!
//! A [`GObject`] is `⟨Q, A, κ⟩` with `κ : Q × A → Bool`. A [`GMorphism`]
//! `⟨Q₁, A₁, κ₁⟩ → ⟨Q₂, A₂, κ₂⟩` pairs a backward map on questions with a
//! forward map on answers and is valid when
//! `κ₁(r_b q₂, a₁) ⇒ κ₂(q₂, r♯ a₁)` for all `q₂`, `a₁`.
//!
//! The product `⊔` has questions `(A₂ → Q₁) × (A₁ → Q₂)`; they are
//! materialised by [`g_product_obj`] under a size cap, or evaluated on demand
//! through a [`ProductView`].
//!
//! [`pn_homobject`] and [`pn_composition_morphism`] package a nategory's
//! hom-sets, nom-sets and `i` as objects and its composition as a candidate
//! morphism. That morphism is valid exactly when both equivariance laws hold
//! on the triple; it satisfies both implications as equivalences exactly
//! when the triple is exact.

mod bridge;
mod morphism;
mod object;
mod product;

use thiserror::Error;

use crate::nategory::NategoryError;

pub use bridge::{
    bridge_size, compare_bridge, pn_composition_morphism, pn_homobject, BridgeComparison, BridgeReport,
    CompositionMorphism,
};
pub use morphism::{enumerate_morphisms, g_compose, g_identity, g_validate, GMorphism};
pub use object::{enumerate_objects, GObject, GRelation};
pub use product::{encode_product_question, g_product_mor, g_product_obj, ProductQuestion, ProductView, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GSetError {
    #[error("{what} has {found} entries, expected {expected}")]
    Shape {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what} takes value {value}, outside 0..{bound}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("{0}")]
    Mismatch(String),
    #[error("map pair is not valid: κ₁ holds at question {question} and answer {answer} but κ₂ fails at their images")]
    Invalid { question: usize, answer: usize },
    #[error("size cap exceeded: {what} needs {size} entries, cap is {cap}")]
    SizeCap { what: &'static str, size: u128, cap: u128 },
    #[error(transparent)]
    Nategory(#[from] NategoryError),
}
