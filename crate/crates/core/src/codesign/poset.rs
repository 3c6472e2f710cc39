use std::fmt;

use super::CodesignError;

/// A finite partial order stored as a dense `≤` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    name: String,
    elements: Vec<String>,
    leq: Vec<bool>,
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({} elements)", self.name, self.elements.len())
    }
}

impl FinitePoset {
    /// Validates reflexivity, antisymmetry and transitivity of `leq`
    /// (row-major, `leq[i * n + j]` meaning `i ≤ j`).
    pub fn new(name: &str, elements: Vec<String>, leq: Vec<bool>) -> Result<Self, CodesignError> {
        let n = elements.len();
        let bad = |why: String| CodesignError::NotAPoset {
            poset: name.to_string(),
            reason: why,
        };
        if leq.len() != n * n {
            return Err(bad(format!(
                "order matrix has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        for i in 0..n {
            if elements[..i].contains(&elements[i]) {
                return Err(bad(format!("duplicate element `{}`", elements[i])));
            }
            if !leq[i * n + i] {
                return Err(bad(format!(
                    "`{}` ≤ `{}` fails (reflexivity)",
                    elements[i], elements[i]
                )));
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(bad(format!(
                        "`{}` and `{}` are mutually below each other (antisymmetry)",
                        elements[i], elements[j]
                    )));
                }
                for k in 0..n {
                    if leq[i * n + j] && leq[j * n + k] && !leq[i * n + k] {
                        return Err(bad(format!(
                            "`{}` ≤ `{}` ≤ `{}` but not `{}` ≤ `{}` (transitivity)",
                            elements[i], elements[j], elements[k], elements[i], elements[k]
                        )));
                    }
                }
            }
        }
        Ok(FinitePoset {
            name: name.to_string(),
            elements,
            leq,
        })
    }

    /// Builds the reflexive-transitive closure of the given covering pairs.
    pub fn from_pairs(name: &str, elements: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, CodesignError> {
        let n = elements.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(CodesignError::NotAPoset {
                    poset: name.to_string(),
                    reason: format!("pair ({a}, {b}) out of range"),
                });
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        FinitePoset::new(name, elements, leq)
    }

    /// `lo ≤ lo+1 ≤ … ≤ hi`, elements named by their value.
    pub fn chain(name: &str, lo: i64, hi: i64) -> Self {
        let elements: Vec<String> = (lo..=hi).map(|v| v.to_string()).collect();
        let n = elements.len();
        let leq = (0..n * n).map(|k| k / n <= k % n).collect();
        FinitePoset {
            name: name.to_string(),
            elements,
            leq,
        }
    }

    pub fn antichain(name: &str, size: usize) -> Self {
        let n = size;
        FinitePoset {
            name: name.to_string(),
            elements: (0..n).map(|i| format!("a{i}")).collect(),
            leq: (0..n * n).map(|k| k / n == k % n).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, element: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == element)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.elements.len() + b]
    }

    /// `a ≤ b` and `a ≠ b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }
}
