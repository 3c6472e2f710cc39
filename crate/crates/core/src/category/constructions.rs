use crate::nategory::{FiniteNategory, Nategory, NategoryError};

use super::{FiniteCategory, MorId, ObjId};

/// Largest hom-set whose powerset is enumerated.
pub const POWERSET_HOM_CAP: usize = 12;

/// The empty norphism type of [`TrivialNategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Void {}

/// The single norphism `• : X ⇢ Y` of [`NegationNategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Refutation {
    pub source: ObjId,
    pub target: ObjId,
}

/// A subset of `Hom(source, target)`, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorphismSet {
    source: ObjId,
    target: ObjId,
    members: Vec<MorId>,
}

impl MorphismSet {
    /// Builds the set after checking every member lies in `Hom(source, target)`.
    pub fn new(
        cat: &FiniteCategory,
        source: ObjId,
        target: ObjId,
        members: impl IntoIterator<Item = MorId>,
    ) -> Result<Self, NategoryError> {
        let mut members: Vec<MorId> = members.into_iter().collect();
        for &m in &members {
            if m.0 >= cat.morphism_count() || cat.source(m) != source || cat.target(m) != target {
                return Err(NategoryError::Signature {
                    op: "morphism set",
                    detail: format!("{m} is not in Hom({source}, {target})"),
                });
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(MorphismSet {
            source,
            target,
            members,
        })
    }

    pub fn empty(source: ObjId, target: ObjId) -> Self {
        MorphismSet {
            source,
            target,
            members: Vec::new(),
        }
    }

    pub fn source(&self) -> ObjId {
        self.source
    }

    pub fn target(&self) -> ObjId {
        self.target
    }

    pub fn members(&self) -> &[MorId] {
        &self.members
    }

    pub fn contains(&self, f: MorId) -> bool {
        self.members.binary_search(&f).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn all_subsets(cat: &FiniteCategory, x: ObjId, y: ObjId) -> Result<Vec<MorphismSet>, NategoryError> {
    let hom = cat.hom(x, y);
    if hom.len() > POWERSET_HOM_CAP {
        return Err(NategoryError::SizeCap {
            what: format!("powerset of Hom({}, {})", cat.object_name(x), cat.object_name(y)),
            size: hom.len() as u128,
            cap: POWERSET_HOM_CAP as u128,
        });
    }
    Ok((0u32..1 << hom.len())
        .map(|mask| MorphismSet {
            source: x,
            target: y,
            members: hom
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &m)| m)
                .collect(),
        })
        .collect())
}

fn compose_in(cat: &FiniteCategory, f: MorId, g: MorId) -> MorId {
    cat.compose(f, g).unwrap_or_else(|| {
        panic!(
            "{} and {} are not composable",
            cat.morphism_name(f),
            cat.morphism_name(g)
        )
    })
}

/// Implements the category half of [`Nategory`] by delegating to a borrowed
/// [`FiniteCategory`].
macro_rules! category_part {
    () => {
        type Object = ObjId;
        type Morphism = MorId;

        fn mor_source(&self, f: &MorId) -> ObjId {
            self.cat.source(*f)
        }

        fn mor_target(&self, f: &MorId) -> ObjId {
            self.cat.target(*f)
        }

        fn identity(&self, x: &ObjId) -> MorId {
            self.cat.identity(*x)
        }

        fn compose_unchecked(&self, f: &MorId, g: &MorId) -> MorId {
            compose_in(self.cat, *f, *g)
        }
    };
}

macro_rules! finite_objects {
    () => {
        fn objects(&self) -> Vec<ObjId> {
            self.cat.objects().collect()
        }

        fn hom(&self, x: &ObjId, y: &ObjId) -> Result<Vec<MorId>, NategoryError> {
            Ok(self.cat.hom(*x, *y).to_vec())
        }
    };
}

/// A category with no norphisms.
#[derive(Debug, Clone, Copy)]
pub struct TrivialNategory<'a> {
    cat: &'a FiniteCategory,
}

impl<'a> TrivialNategory<'a> {
    pub fn new(cat: &'a FiniteCategory) -> Self {
        TrivialNategory { cat }
    }
}

impl Nategory for TrivialNategory<'_> {
    category_part!();
    type Norphism = Void;

    fn nor_source(&self, n: &Void) -> ObjId {
        match *n {}
    }

    fn nor_target(&self, n: &Void) -> ObjId {
        match *n {}
    }

    fn incompat_unchecked(&self, n: &Void, _: &MorId) -> bool {
        match *n {}
    }

    fn ncompose_left_unchecked(&self, _: &MorId, n: &Void) -> Void {
        *n
    }

    fn ncompose_right_unchecked(&self, n: &Void, _: &MorId) -> Void {
        *n
    }
}

impl FiniteNategory for TrivialNategory<'_> {
    finite_objects!();

    fn nom(&self, _: &ObjId, _: &ObjId) -> Result<Vec<Void>, NategoryError> {
        Ok(Vec::new())
    }
}

/// One norphism per object pair, incompatible with every morphism.
///
/// `•` is offered even when the hom-set is nonempty; asserting it there is
/// contradictory, but the construction does not forbid it.
#[derive(Debug, Clone, Copy)]
pub struct NegationNategory<'a> {
    cat: &'a FiniteCategory,
}

impl<'a> NegationNategory<'a> {
    pub fn new(cat: &'a FiniteCategory) -> Self {
        NegationNategory { cat }
    }
}

impl Nategory for NegationNategory<'_> {
    category_part!();
    type Norphism = Refutation;

    fn nor_source(&self, n: &Refutation) -> ObjId {
        n.source
    }

    fn nor_target(&self, n: &Refutation) -> ObjId {
        n.target
    }

    fn incompat_unchecked(&self, _: &Refutation, _: &MorId) -> bool {
        true
    }

    fn ncompose_left_unchecked(&self, f: &MorId, n: &Refutation) -> Refutation {
        Refutation {
            source: self.cat.target(*f),
            target: n.target,
        }
    }

    fn ncompose_right_unchecked(&self, n: &Refutation, g: &MorId) -> Refutation {
        Refutation {
            source: n.source,
            target: self.cat.source(*g),
        }
    }
}

impl FiniteNategory for NegationNategory<'_> {
    finite_objects!();

    fn nom(&self, x: &ObjId, y: &ObjId) -> Result<Vec<Refutation>, NategoryError> {
        Ok(vec![Refutation { source: *x, target: *y }])
    }
}

/// Norphisms are subsets of hom-sets, incompatibility is membership, and the
/// mixed compositions are preimages. This nategory is exact.
#[derive(Debug, Clone, Copy)]
pub struct PowersetNategory<'a> {
    cat: &'a FiniteCategory,
}

impl<'a> PowersetNategory<'a> {
    pub fn new(cat: &'a FiniteCategory) -> Self {
        PowersetNategory { cat }
    }

    pub fn category(&self) -> &'a FiniteCategory {
        self.cat
    }
}

impl Nategory for PowersetNategory<'_> {
    category_part!();
    type Norphism = MorphismSet;

    fn nor_source(&self, n: &MorphismSet) -> ObjId {
        n.source
    }

    fn nor_target(&self, n: &MorphismSet) -> ObjId {
        n.target
    }

    fn incompat_unchecked(&self, n: &MorphismSet, f: &MorId) -> bool {
        n.contains(*f)
    }

    /// `{ g : Y → Z | f ∘ g ∈ n }`.
    fn ncompose_left_unchecked(&self, f: &MorId, n: &MorphismSet) -> MorphismSet {
        let y = self.cat.target(*f);
        MorphismSet {
            source: y,
            target: n.target,
            members: self
                .cat
                .hom(y, n.target)
                .iter()
                .copied()
                .filter(|&g| n.contains(compose_in(self.cat, *f, g)))
                .collect(),
        }
    }

    /// `{ f : X → Y | f ∘ g ∈ n }`.
    fn ncompose_right_unchecked(&self, n: &MorphismSet, g: &MorId) -> MorphismSet {
        let y = self.cat.source(*g);
        MorphismSet {
            source: n.source,
            target: y,
            members: self
                .cat
                .hom(n.source, y)
                .iter()
                .copied()
                .filter(|&f| n.contains(compose_in(self.cat, f, *g)))
                .collect(),
        }
    }
}

impl FiniteNategory for PowersetNategory<'_> {
    finite_objects!();

    fn nom(&self, x: &ObjId, y: &ObjId) -> Result<Vec<MorphismSet>, NategoryError> {
        all_subsets(self.cat, *x, *y)
    }
}

/// Same norphisms and incompatibility as [`PowersetNategory`], but both mixed
/// compositions return the empty set. Equivariance holds vacuously; the
/// identity laws of the actions do not.
#[derive(Debug, Clone, Copy)]
pub struct WeakNategory<'a> {
    cat: &'a FiniteCategory,
}

impl<'a> WeakNategory<'a> {
    pub fn new(cat: &'a FiniteCategory) -> Self {
        WeakNategory { cat }
    }
}

impl Nategory for WeakNategory<'_> {
    category_part!();
    type Norphism = MorphismSet;

    fn nor_source(&self, n: &MorphismSet) -> ObjId {
        n.source
    }

    fn nor_target(&self, n: &MorphismSet) -> ObjId {
        n.target
    }

    fn incompat_unchecked(&self, n: &MorphismSet, f: &MorId) -> bool {
        n.contains(*f)
    }

    fn ncompose_left_unchecked(&self, f: &MorId, n: &MorphismSet) -> MorphismSet {
        MorphismSet::empty(self.cat.target(*f), n.target)
    }

    fn ncompose_right_unchecked(&self, n: &MorphismSet, g: &MorId) -> MorphismSet {
        MorphismSet::empty(n.source, self.cat.source(*g))
    }
}

impl FiniteNategory for WeakNategory<'_> {
    finite_objects!();

    fn nom(&self, x: &ObjId, y: &ObjId) -> Result<Vec<MorphismSet>, NategoryError> {
        all_subsets(self.cat, *x, *y)
    }
}
