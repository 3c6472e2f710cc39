use std::fmt;
use std::sync::Arc;

use super::{CodesignError, FinitePoset};

/// Dense boolean matrix over `source × target`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Matrix {
    source: Arc<FinitePoset>,
    target: Arc<FinitePoset>,
    cells: Vec<bool>,
}

impl Matrix {
    fn new(source: Arc<FinitePoset>, target: Arc<FinitePoset>, cells: Vec<bool>) -> Result<Self, CodesignError> {
        if cells.len() != source.len() * target.len() {
            return Err(CodesignError::Shape {
                expected: source.len() * target.len(),
                found: cells.len(),
            });
        }
        Ok(Matrix { source, target, cells })
    }

    fn from_fn(source: &Arc<FinitePoset>, target: &Arc<FinitePoset>, f: impl Fn(usize, usize) -> bool) -> Self {
        let m = target.len();
        Matrix {
            source: source.clone(),
            target: target.clone(),
            cells: (0..source.len() * m).map(|k| f(k / m, k % m)).collect(),
        }
    }

    fn get(&self, a: usize, b: usize) -> bool {
        self.cells[a * self.target.len() + b]
    }

    /// First `(a, b, a', b')` with `self(a, b)` but not `self(a', b')`, where
    /// `a' ≤ a`, `b ≤ b'` for design relations and `a ≤ a'`, `b' ≤ b` otherwise.
    fn monotonicity_violation(&self, design: bool) -> Option<[usize; 4]> {
        let (n, m) = (self.source.len(), self.target.len());
        for a in 0..n {
            for b in 0..m {
                if !self.get(a, b) {
                    continue;
                }
                for a2 in 0..n {
                    let src_ok = if design {
                        self.source.leq(a2, a)
                    } else {
                        self.source.leq(a, a2)
                    };
                    if !src_ok {
                        continue;
                    }
                    for b2 in 0..m {
                        let dst_ok = if design {
                            self.target.leq(b, b2)
                        } else {
                            self.target.leq(b2, b)
                        };
                        if dst_ok && !self.get(a2, b2) {
                            return Some([a, b, a2, b2]);
                        }
                    }
                }
            }
        }
        None
    }

    fn fmt_table(&self, f: &mut fmt::Formatter<'_>, kind: &str) -> fmt::Result {
        write!(f, "{kind}({} -> {})[", self.source.name(), self.target.name())?;
        let mut first = true;
        for (k, &c) in self.cells.iter().enumerate() {
            if c {
                let m = self.target.len();
                if !first {
                    f.write_str(", ")?;
                }
                first = false;
                write!(
                    f,
                    "({},{})",
                    self.source.elements()[k / m],
                    self.target.elements()[k % m]
                )?;
            }
        }
        f.write_str("]")
    }
}

fn check_monotone(m: &Matrix, design: bool) -> Result<(), CodesignError> {
    match m.monotonicity_violation(design) {
        None => Ok(()),
        Some([a, b, a2, b2]) => Err(CodesignError::NotMonotone {
            detail: format!(
                "holds at ({}, {}) but not at ({}, {})",
                m.source.elements()[a],
                m.target.elements()[b],
                m.source.elements()[a2],
                m.target.elements()[b2]
            ),
        }),
    }
}

/// A feasibility relation `d : P^op × Q → Bool`; `d(p, q)` reads
/// "functionality `p` is achievable with resources `q`". Closed under
/// lowering `p` and raising `q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DesignProblem(Matrix);

/// An infeasibility relation `n : F × R^op → Bool`; `n(f, r)` reads
/// "functionality `f` cannot be obtained from resources `r`". Closed under
/// raising `f` and lowering `r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NesignProblem(Matrix);

impl fmt::Debug for DesignProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_table(f, "DP")
    }
}

impl fmt::Debug for NesignProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_table(f, "NP")
    }
}

macro_rules! relation_common {
    ($ty:ident, $design:expr) => {
        impl $ty {
            /// Validates shape and monotonicity.
            pub fn new(
                source: Arc<FinitePoset>,
                target: Arc<FinitePoset>,
                cells: Vec<bool>,
            ) -> Result<Self, CodesignError> {
                let m = Matrix::new(source, target, cells)?;
                check_monotone(&m, $design)?;
                Ok($ty(m))
            }

            /// Tabulates `f` and validates monotonicity.
            pub fn from_fn(
                source: &Arc<FinitePoset>,
                target: &Arc<FinitePoset>,
                f: impl Fn(usize, usize) -> bool,
            ) -> Result<Self, CodesignError> {
                let m = Matrix::from_fn(source, target, f);
                check_monotone(&m, $design)?;
                Ok($ty(m))
            }

            pub(crate) fn from_fn_unchecked(
                source: &Arc<FinitePoset>,
                target: &Arc<FinitePoset>,
                f: impl Fn(usize, usize) -> bool,
            ) -> Self {
                $ty(Matrix::from_fn(source, target, f))
            }

            pub fn source(&self) -> &Arc<FinitePoset> {
                &self.0.source
            }

            pub fn target(&self) -> &Arc<FinitePoset> {
                &self.0.target
            }

            pub fn get(&self, a: usize, b: usize) -> bool {
                self.0.get(a, b)
            }

            pub fn cells(&self) -> &[bool] {
                &self.0.cells
            }

            /// Re-runs the monotonicity scan.
            pub fn is_monotone(&self) -> bool {
                self.0.monotonicity_violation($design).is_none()
            }

            pub fn is_empty_relation(&self) -> bool {
                self.0.cells.iter().all(|c| !c)
            }
        }
    };
}

relation_common!(DesignProblem, true);
relation_common!(NesignProblem, false);

fn same(a: &Arc<FinitePoset>, b: &Arc<FinitePoset>, op: &'static str) -> Result<(), CodesignError> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(CodesignError::PosetMismatch {
            op,
            left: a.name().to_string(),
            right: b.name().to_string(),
        })
    }
}

/// `(d ∘ e)(p, r) = ⋁_q d(p, q) ∧ e(q, r)`.
pub fn dp_compose(d: &DesignProblem, e: &DesignProblem) -> Result<DesignProblem, CodesignError> {
    same(d.target(), e.source(), "dp_compose")?;
    Ok(dp_compose_unchecked(d, e))
}

pub(crate) fn dp_compose_unchecked(d: &DesignProblem, e: &DesignProblem) -> DesignProblem {
    let q = d.target().len();
    DesignProblem::from_fn_unchecked(d.source(), e.target(), |p, r| {
        (0..q).any(|k| d.get(p, k) && e.get(k, r))
    })
}

/// `id(p₁, p₂) = p₁ ≤ p₂`.
pub fn dp_identity(p: &Arc<FinitePoset>) -> DesignProblem {
    DesignProblem::from_fn_unchecked(p, p, |a, b| p.leq(a, b))
}

/// `∃ f, r : d(f, r) ∧ n(f, r)`.
pub fn incompat_dp(n: &NesignProblem, d: &DesignProblem) -> Result<bool, CodesignError> {
    same(n.source(), d.source(), "incompat_dp")?;
    same(n.target(), d.target(), "incompat_dp")?;
    Ok(incompat_unchecked(n, d))
}

pub(crate) fn incompat_unchecked(n: &NesignProblem, d: &DesignProblem) -> bool {
    n.cells().iter().zip(d.cells()).any(|(a, b)| *a && *b)
}

/// `(n ▸ d)(p, r) = ⋁_q n(p, q) ∧ d(r, q)` for `n : P ⇸ Q`, `d : R ⇸ Q`.
pub fn np_compose_right(n: &NesignProblem, d: &DesignProblem) -> Result<NesignProblem, CodesignError> {
    same(n.target(), d.target(), "np_compose_right")?;
    Ok(np_compose_right_unchecked(n, d))
}

pub(crate) fn np_compose_right_unchecked(n: &NesignProblem, d: &DesignProblem) -> NesignProblem {
    let q = n.target().len();
    NesignProblem::from_fn_unchecked(n.source(), d.source(), |p, r| {
        (0..q).any(|k| n.get(p, k) && d.get(r, k))
    })
}

/// `(d • n)(p, r) = ⋁_q d(q, p) ∧ n(q, r)` for `d : Q ⇸ P`, `n : Q ⇸ R`.
pub fn np_compose_left(d: &DesignProblem, n: &NesignProblem) -> Result<NesignProblem, CodesignError> {
    same(d.source(), n.source(), "np_compose_left")?;
    Ok(np_compose_left_unchecked(d, n))
}

pub(crate) fn np_compose_left_unchecked(d: &DesignProblem, n: &NesignProblem) -> NesignProblem {
    let q = d.source().len();
    NesignProblem::from_fn_unchecked(d.target(), n.target(), |p, r| {
        (0..q).any(|k| d.get(k, p) && n.get(k, r))
    })
}

/// `n_P(q, p) = p ≺ q`: nothing yields strictly more than it consumes.
pub fn no_free_lunch(p: &Arc<FinitePoset>) -> NesignProblem {
    NesignProblem::from_fn_unchecked(p, p, |q, r| p.lt(r, q))
}

/// For `d : F ⇸ R`, the two infeasibility relations `R ⇸ F` it induces:
/// `(n_R ▸ d, d • n_F)`.
pub fn derived_nps(d: &DesignProblem) -> (NesignProblem, NesignProblem) {
    (
        np_compose_right_unchecked(&no_free_lunch(d.target()), d),
        np_compose_left_unchecked(d, &no_free_lunch(d.source())),
    )
}
