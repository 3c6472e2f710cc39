//! Co-design over finite posets.
//!
//! A [`DesignProblem`] `d : P ⇸ Q` is a feasibility relation, monotone as
//! `P^op × Q → Bool`: `d(p, q)` means functionality `p` is achievable from
//! resources `q`. A [`NesignProblem`] `n : F ⇸ R` is an infeasibility
//! relation, monotone as `F × R^op → Bool`. Matrices are indexed
//! `[source element][target element]` throughout, row-major.
//!
//! [`CodesignNategory`] packages both as a nategory over a list of posets.
//! [`PearsAndRaisins`] is the pears/CHF/raisins example on truncated integer posets.

mod example;
mod instance;
mod parse;
mod poset;
mod relation;

use thiserror::Error;

pub use example::{right_witnesses, PearsAndRaisins};
pub use instance::{enumerate_dps, enumerate_nps, CodesignNategory, RELATION_CELL_CAP};
pub use parse::{parse_codesign, CodesignDocument};
pub use poset::FinitePoset;
pub use relation::{
    derived_nps, dp_compose, dp_identity, incompat_dp, no_free_lunch, np_compose_left, np_compose_right, DesignProblem,
    NesignProblem,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodesignError {
    #[error("{poset} is not a partial order: {reason}")]
    NotAPoset { poset: String, reason: String },
    #[error("relation matrix has {found} cells, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("relation is not monotone: {detail}")]
    NotMonotone { detail: String },
    #[error("{op}: poset {left} does not match {right}")]
    PosetMismatch {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
