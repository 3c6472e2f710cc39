//! Categories that carry negative information.
//!
//! A *nategory* pairs every hom-set `Hom(X, Y)` with a nom-set `Nom(X, Y)` of
//! norphisms `X ⇢ Y`, an incompatibility relation saying which morphisms a
//! norphism forbids, and two mixed compositions:
//!
//! * `f • n : Y ⇢ Z` for `f : X → Y` and `n : X ⇢ Z` (shared source),
//! * `n ▸ g : X ⇢ Y` for `n : X ⇢ Z` and `g : Y → Z` (shared target).
//!
//! Composition is written in diagrammatic order throughout: `f ∘ g` means
//! "first `f`, then `g`".
//!
//! The crate is organised around the [`nategory::Nategory`] contract and its
//! law checkers, plus four families of instances:
//!
//! * [`category`]: finite categories given by tables, thin categories from
//!   reachability, and the canonical empty / negation / powerset / weak
//!   constructions.
//! * [`berg`]: hiking paths on a discretised terrain, with numeric lower
//!   bounds as norphisms and an A* planner that returns optimality and
//!   infeasibility certificates.
//! * [`codesign`]: design problems (feasibility relations) and nesign problems
//!   (infeasibility relations) between finite posets.
//! * [`gset`]: the finite dialectica category, its `⊔` product, and the bridge
//!   that packages a finite nategory as hom-objects and composition morphisms.
//!
//! The [`cli`] module holds the command implementations used by the
//! `nategory` binary.

pub mod berg;
pub mod category;
pub mod cli;
pub mod codesign;
pub mod gset;
pub mod nategory;

pub use nategory::{FiniteNategory, Nategory, NategoryError};
