use super::GSetError;

/// Something with answers indexed `0..answer_count()` and a relation
/// `κ(q, a)` against questions of type `Question`.
pub trait GRelation {
    type Question;

    fn answer_count(&self) -> usize;
    fn kappa(&self, q: &Self::Question, a: usize) -> bool;
}

/// A finite object `⟨Q, A, κ⟩` with `Q = 0..questions`, `A = 0..answers`
/// and `κ` stored row-major by question.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GObject {
    questions: usize,
    answers: usize,
    kappa: Vec<bool>,
}

impl GObject {
    pub fn new(questions: usize, answers: usize, kappa: Vec<bool>) -> Result<Self, GSetError> {
        if kappa.len() != questions * answers {
            return Err(GSetError::Shape {
                what: "κ table",
                expected: questions * answers,
                found: kappa.len(),
            });
        }
        Ok(GObject {
            questions,
            answers,
            kappa,
        })
    }

    pub fn from_fn(questions: usize, answers: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        GObject {
            questions,
            answers,
            kappa: (0..questions * answers).map(|k| f(k / answers, k % answers)).collect(),
        }
    }

    /// `⟨{•}, {•}, ⊥⟩`.
    pub fn unit() -> Self {
        GObject::from_fn(1, 1, |_, _| false)
    }

    pub fn questions(&self) -> usize {
        self.questions
    }

    pub fn answers(&self) -> usize {
        self.answers
    }

    pub fn get(&self, q: usize, a: usize) -> bool {
        self.kappa[q * self.answers + a]
    }

    pub fn kappa_table(&self) -> &[bool] {
        &self.kappa
    }
}

impl GRelation for GObject {
    type Question = usize;

    fn answer_count(&self) -> usize {
        self.answers
    }

    fn kappa(&self, q: &usize, a: usize) -> bool {
        self.get(*q, a)
    }
}

/// Every object with `|Q| ≤ max_questions`, `|A| ≤ max_answers`, ordered by
/// `(|Q|, |A|)` and then by the κ bitmask.
pub fn enumerate_objects(max_questions: usize, max_answers: usize) -> Vec<GObject> {
    let mut out = Vec::new();
    for q in 0..=max_questions {
        for a in 0..=max_answers {
            let cells = q * a;
            assert!(cells < 32, "κ tables of {cells} cells are too many to enumerate");
            for mask in 0u32..1 << cells {
                out.push(GObject::from_fn(q, a, |i, j| mask >> (i * a + j) & 1 == 1));
            }
        }
    }
    out
}
