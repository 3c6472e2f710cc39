use super::{GMorphism, GObject, GRelation, GSetError};

/// Default bound on the number of table entries a product may materialise.
pub const DEFAULT_CAP: u128 = 1_000_000;

/// Functions `0..domain → 0..codomain`, encoded in base `codomain` with the
/// value at `i` as digit `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct FunctionSpace {
    domain: usize,
    codomain: usize,
}

impl FunctionSpace {
    fn size(self) -> Option<u128> {
        (self.codomain as u128).checked_pow(self.domain.try_into().ok()?)
    }

    fn encode(self, table: impl IntoIterator<Item = usize>) -> usize {
        let mut code = 0;
        let mut place = 1;
        for v in table {
            code += v * place;
            place *= self.codomain;
        }
        code
    }

    fn decode(self, mut code: usize) -> Vec<usize> {
        (0..self.domain)
            .map(|_| {
                let d = code % self.codomain;
                code /= self.codomain;
                d
            })
            .collect()
    }
}

fn checked_size(what: &'static str, parts: &[Option<u128>], cap: u128) -> Result<usize, GSetError> {
    let size = parts
        .iter()
        .try_fold(1u128, |acc, p| acc.checked_mul((*p)?))
        .ok_or(GSetError::SizeCap {
            what,
            size: u128::MAX,
            cap,
        })?;
    if size > cap {
        return Err(GSetError::SizeCap { what, size, cap });
    }
    Ok(size as usize)
}

/// Product questions `⟨q₁ : A₂ → Q₁, q₂ : A₁ → Q₂⟩` as explicit tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductQuestion {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// `o₁ ⊔ o₂` without materialising its question set. Answers are pairs
/// `⟨a₁, a₂⟩` encoded as `a₁ + |A₁| · a₂`.
#[derive(Debug, Clone, Copy)]
pub struct ProductView<'a> {
    pub left: &'a GObject,
    pub right: &'a GObject,
}

impl<'a> ProductView<'a> {
    pub fn new(left: &'a GObject, right: &'a GObject) -> Self {
        ProductView { left, right }
    }

    pub fn answer(&self, a1: usize, a2: usize) -> usize {
        a1 + self.left.answers() * a2
    }

    pub fn split_answer(&self, a: usize) -> (usize, usize) {
        (a % self.left.answers(), a / self.left.answers())
    }

    /// The two disjuncts `κ₁(q₁(a₂), a₁)` and `κ₂(q₂(a₁), a₂)`.
    pub fn kappa_parts(&self, q: &ProductQuestion, a: usize) -> (bool, bool) {
        let (a1, a2) = self.split_answer(a);
        (self.left.get(q.left[a2], a1), self.right.get(q.right[a1], a2))
    }

    /// Number of product questions, if it fits in `u128`.
    pub fn question_count(&self) -> Option<u128> {
        let (l, r) = spaces(self.left, self.right);
        l.size()?.checked_mul(r.size()?)
    }
}

impl GRelation for ProductView<'_> {
    type Question = ProductQuestion;

    fn answer_count(&self) -> usize {
        self.left.answers() * self.right.answers()
    }

    fn kappa(&self, q: &ProductQuestion, a: usize) -> bool {
        let (x, y) = self.kappa_parts(q, a);
        x || y
    }
}

/// `(A₂ → Q₁, A₁ → Q₂)`.
fn spaces(o1: &GObject, o2: &GObject) -> (FunctionSpace, FunctionSpace) {
    (
        FunctionSpace {
            domain: o2.answers(),
            codomain: o1.questions(),
        },
        FunctionSpace {
            domain: o1.answers(),
            codomain: o2.questions(),
        },
    )
}

/// `o₁ ⊔ o₂` with questions encoded `code(q₁) + |Q₁|^|A₂| · code(q₂)`.
///
/// Fails when `|Q| · |A|` exceeds `cap`.
pub fn g_product_obj(o1: &GObject, o2: &GObject, cap: u128) -> Result<GObject, GSetError> {
    let (s1, s2) = spaces(o1, o2);
    let answers = o1.answers() * o2.answers();
    checked_size("product κ table", &[s1.size(), s2.size(), Some(answers as u128)], cap)?;
    let questions = checked_size("product questions", &[s1.size(), s2.size()], cap)?;
    let n1 = s1.size().expect("checked") as usize;
    let view = ProductView::new(o1, o2);
    let mut kappa = Vec::with_capacity(questions * answers);
    for q in 0..questions {
        let pq = ProductQuestion {
            left: s1.decode(q % n1),
            right: s2.decode(q / n1),
        };
        kappa.extend((0..answers).map(|a| view.kappa(&pq, a)));
    }
    GObject::new(questions, answers, kappa)
}

/// Encodes a product question of `o₁ ⊔ o₂` as an index of [`g_product_obj`].
pub fn encode_product_question(o1: &GObject, o2: &GObject, q: &ProductQuestion) -> usize {
    let (s1, s2) = spaces(o1, o2);
    let n1 = o1.questions().pow(o2.answers() as u32);
    s1.encode(q.left.iter().copied()) + n1 * s2.encode(q.right.iter().copied())
}

/// `r ⊔ s : o₁ ⊔ o₂ → o₃ ⊔ o₄` for `r : o₁ → o₃`, `s : o₂ → o₄`.
///
/// Forward is `r♯ × s♯`; backward sends `⟨q₃, q₄⟩` to
/// `⟨a₂ ↦ r_b(q₃(s♯ a₂)), a₁ ↦ s_b(q₄(r♯ a₁))⟩`. Fails when either product
/// question set exceeds `cap`.
pub fn g_product_mor(r: &GMorphism, s: &GMorphism, cap: u128) -> Result<GMorphism, GSetError> {
    let ((q1, a1), (q3, a3)) = (r.source_shape(), r.target_shape());
    let ((q2, a2), (q4, a4)) = (s.source_shape(), s.target_shape());
    let fs = |domain, codomain| FunctionSpace { domain, codomain };
    let (s12_l, s12_r) = (fs(a2, q1), fs(a1, q2));
    let (s34_l, s34_r) = (fs(a4, q3), fs(a3, q4));
    let source_questions = checked_size("product questions", &[s12_l.size(), s12_r.size()], cap)?;
    let target_questions = checked_size("product questions", &[s34_l.size(), s34_r.size()], cap)?;
    let n12 = s12_l.size().expect("checked") as usize;
    let n34 = s34_l.size().expect("checked") as usize;
    let (rb, rf, sb, sf) = (r.backward(), r.forward(), s.backward(), s.forward());
    let backward = (0..target_questions)
        .map(|q| {
            let t3 = s34_l.decode(q % n34);
            let t4 = s34_r.decode(q / n34);
            let left = s12_l.encode((0..a2).map(|x| rb[t3[sf[x]]]));
            let right = s12_r.encode((0..a1).map(|x| sb[t4[rf[x]]]));
            left + n12 * right
        })
        .collect();
    let forward = (0..a1 * a2).map(|a| rf[a % a1] + a3 * sf[a / a1]).collect();
    GMorphism::from_maps(source_questions, a3 * a4, backward, forward)
}
