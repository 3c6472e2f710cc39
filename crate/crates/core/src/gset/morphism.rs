use super::{GObject, GRelation, GSetError};

/// A map pair `⟨r_b : Q₂ → Q₁, r♯ : A₁ → A₂⟩` between objects with
/// `|Q₁| = question_codomain` and `|A₂| = answer_codomain`.
///
/// Equality and composition depend only on the maps, so a value may be
/// valid between several pairs of objects; validity is checked against a
/// given pair with [`g_validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GMorphism {
    question_codomain: usize,
    answer_codomain: usize,
    backward: Vec<usize>,
    forward: Vec<usize>,
}

impl GMorphism {
    /// Checks that all map values are in range; validity is not checked.
    pub fn from_maps(
        question_codomain: usize,
        answer_codomain: usize,
        backward: Vec<usize>,
        forward: Vec<usize>,
    ) -> Result<Self, GSetError> {
        for (what, map, bound) in [
            ("backward map", &backward, question_codomain),
            ("forward map", &forward, answer_codomain),
        ] {
            if let Some(&v) = map.iter().find(|&&v| v >= bound) {
                return Err(GSetError::OutOfRange { what, value: v, bound });
            }
        }
        Ok(GMorphism {
            question_codomain,
            answer_codomain,
            backward,
            forward,
        })
    }

    /// A valid morphism `src → dst`.
    pub fn new(src: &GObject, dst: &GObject, backward: Vec<usize>, forward: Vec<usize>) -> Result<Self, GSetError> {
        let r = GMorphism::from_maps(src.questions(), dst.answers(), backward, forward)?;
        match first_violation(src, dst, &r.backward, &r.forward)? {
            None => Ok(r),
            Some((q, a)) => Err(GSetError::Invalid { question: q, answer: a }),
        }
    }

    pub fn backward(&self) -> &[usize] {
        &self.backward
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    /// `(|Q₁|, |A₁|)`.
    pub fn source_shape(&self) -> (usize, usize) {
        (self.question_codomain, self.forward.len())
    }

    /// `(|Q₂|, |A₂|)`.
    pub fn target_shape(&self) -> (usize, usize) {
        (self.backward.len(), self.answer_codomain)
    }
}

fn check_shape(r: &GMorphism, src: &GObject, dst: &GObject) -> Result<(), GSetError> {
    let want = ((src.questions(), src.answers()), (dst.questions(), dst.answers()));
    let have = (r.source_shape(), r.target_shape());
    if want == have {
        Ok(())
    } else {
        Err(GSetError::Mismatch(format!(
            "map pair has shape {:?} -> {:?}, objects have {:?} -> {:?}",
            have.0, have.1, want.0, want.1
        )))
    }
}

/// First `(q₂, a₁)` where `κ₁(r_b q₂, a₁)` holds but `κ₂(q₂, r♯ a₁)` does
/// not, for a source given lazily.
pub(crate) fn first_violation<S: GRelation>(
    src: &S,
    dst: &GObject,
    backward: &[S::Question],
    forward: &[usize],
) -> Result<Option<(usize, usize)>, GSetError> {
    if backward.len() != dst.questions() || forward.len() != src.answer_count() {
        return Err(GSetError::Mismatch(format!(
            "backward map has {} entries for {} questions, forward map {} for {} answers",
            backward.len(),
            dst.questions(),
            forward.len(),
            src.answer_count()
        )));
    }
    for (q2, q1) in backward.iter().enumerate() {
        for (a1, &a2) in forward.iter().enumerate() {
            if src.kappa(q1, a1) && !dst.get(q2, a2) {
                return Ok(Some((q2, a1)));
            }
        }
    }
    Ok(None)
}

/// `∀ q₂, a₁ : κ₁(r_b q₂, a₁) ⇒ κ₂(q₂, r♯ a₁)`.
pub fn g_validate(r: &GMorphism, src: &GObject, dst: &GObject) -> Result<bool, GSetError> {
    check_shape(r, src, dst)?;
    Ok(first_violation(src, dst, &r.backward, &r.forward)?.is_none())
}

/// Component-wise: backward `s_b` then `r_b`, forward `r♯` then `s♯`.
pub fn g_compose(r: &GMorphism, s: &GMorphism) -> Result<GMorphism, GSetError> {
    if r.target_shape() != s.source_shape() {
        return Err(GSetError::Mismatch(format!(
            "cannot compose: first ends at shape {:?}, second starts at {:?}",
            r.target_shape(),
            s.source_shape()
        )));
    }
    Ok(GMorphism {
        question_codomain: r.question_codomain,
        answer_codomain: s.answer_codomain,
        backward: s.backward.iter().map(|&q| r.backward[q]).collect(),
        forward: r.forward.iter().map(|&a| s.forward[a]).collect(),
    })
}

pub fn g_identity(o: &GObject) -> GMorphism {
    GMorphism {
        question_codomain: o.questions(),
        answer_codomain: o.answers(),
        backward: (0..o.questions()).collect(),
        forward: (0..o.answers()).collect(),
    }
}

/// All maps `0..len → 0..codomain` in lexicographic order (last index fastest).
pub(crate) fn all_maps(len: usize, codomain: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len > 0 && codomain == 0 {
        return out;
    }
    let mut cur = vec![0; len];
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < codomain {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Every valid morphism `src → dst`.
pub fn enumerate_morphisms(src: &GObject, dst: &GObject) -> Vec<GMorphism> {
    let backs = all_maps(dst.questions(), src.questions());
    let fwds = all_maps(src.answers(), dst.answers());
    let mut out = Vec::new();
    for b in &backs {
        for f in &fwds {
            if first_violation(src, dst, b, f).expect("shapes match").is_none() {
                out.push(GMorphism {
                    question_codomain: src.questions(),
                    answer_codomain: dst.answers(),
                    backward: b.clone(),
                    forward: f.clone(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_valid() {
        let o = GObject::from_fn(2, 3, |q, a| (q + a) % 2 == 0);
        assert!(g_validate(&g_identity(&o), &o, &o).unwrap());
    }

    #[test]
    fn anything_into_total_kappa_is_valid() {
        let src = GObject::from_fn(2, 2, |q, a| q == a);
        let dst = GObject::from_fn(2, 2, |_, _| true);
        assert_eq!(enumerate_morphisms(&src, &dst).len(), 16);
    }

    #[test]
    fn total_into_empty_kappa_is_invalid() {
        let src = GObject::from_fn(1, 1, |_, _| true);
        let dst = GObject::from_fn(1, 1, |_, _| false);
        let r = GMorphism::from_maps(1, 1, vec![0], vec![0]).unwrap();
        assert!(!g_validate(&r, &src, &dst).unwrap());
        assert!(matches!(
            GMorphism::new(&src, &dst, vec![0], vec![0]),
            Err(GSetError::Invalid { .. })
        ));
    }

    #[test]
    fn identity_is_neutral() {
        let o = GObject::from_fn(2, 2, |q, a| q <= a);
        for r in enumerate_morphisms(&o, &o) {
            assert_eq!(g_compose(&g_identity(&o), &r).unwrap(), r);
            assert_eq!(g_compose(&r, &g_identity(&o)).unwrap(), r);
        }
    }

    #[test]
    fn map_enumeration_counts() {
        assert_eq!(all_maps(2, 3).len(), 9);
        assert_eq!(all_maps(0, 0).len(), 1);
        assert_eq!(all_maps(2, 0).len(), 0);
    }

    #[test]
    fn shape_errors() {
        assert!(GMorphism::from_maps(1, 1, vec![1], vec![]).is_err());
        let a = g_identity(&GObject::from_fn(1, 1, |_, _| true));
        let b = g_identity(&GObject::from_fn(2, 1, |_, _| true));
        assert!(g_compose(&a, &b).is_err());
    }
}
