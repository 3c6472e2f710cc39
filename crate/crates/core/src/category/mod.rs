//! Finite categories and the canonical nategory constructions over them.
//!
//! [`FiniteCategory`] stores an explicit composition table that is validated
//! when built. [`ThinCategory`] is the reachability preorder of a digraph.
//! The four constructions borrow a finite category and attach nom-sets:
//!
//! | construction          | `Nom(X, Y)`           | `i(n, f)`  | `f • n`, `n ▸ g`      |
//! |-----------------------|-----------------------|------------|-----------------------|
//! | [`TrivialNategory`]   | empty                 | n/a        | n/a                   |
//! | [`NegationNategory`]  | `{•}`                 | always ⊤   | `•`                   |
//! | [`PowersetNategory`]  | subsets of `Hom(X,Y)` | membership | preimages             |
//! | [`WeakNategory`]      | subsets of `Hom(X,Y)` | membership | `∅`                   |

mod constructions;
pub mod family;
mod finite;
mod parse;
mod thin;

use thiserror::Error;

pub use constructions::{
    MorphismSet, NegationNategory, PowersetNategory, Refutation, TrivialNategory, Void, WeakNategory, POWERSET_HOM_CAP,
};
pub use finite::{CategoryBuilder, FiniteCategory, MorId, ObjId};
pub use parse::{parse_category, ParseError};
pub use thin::{thin_decomposition_check, ThinArrow, ThinCategory, ThinNategory};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("unknown identifier `{0}`")]
    Unknown(String),
    #[error("`{first}` and `{second}` are not composable")]
    NotComposable { first: String, second: String },
    #[error("`{first};{second} = {result}` has the wrong signature")]
    BadSignature {
        first: String,
        second: String,
        result: String,
    },
    #[error("conflicting entries for `{first};{second}`")]
    Conflict { first: String, second: String },
    #[error("no composite given for `{first};{second}`")]
    Missing { first: String, second: String },
    #[error("composition is not associative on `{}`, `{}`, `{}`", names[0], names[1], names[2])]
    NotAssociative { names: [String; 3] },
}
