use super::{FiniteNategory, Nategory, NategoryError};

/// Supplies the arrows a law checker quantifies over when hom-sets are too
/// large (or infinite) to enumerate.
pub trait ArrowSampler<N: Nategory> {
    fn objects(&self, inst: &N) -> Vec<N::Object>;
    fn morphisms(&self, inst: &N, x: &N::Object, y: &N::Object) -> Result<Vec<N::Morphism>, NategoryError>;
    fn norphisms(&self, inst: &N, x: &N::Object, y: &N::Object) -> Result<Vec<N::Norphism>, NategoryError>;
}

/// A materialised table of objects and per-pair arrow lists.
///
/// Pairs are addressed by object index; every stored arrow has been checked
/// to carry the signature of the cell it sits in.
#[derive(Debug, Clone)]
pub struct Scope<O, M, R> {
    objects: Vec<O>,
    homs: Vec<Vec<M>>,
    noms: Vec<Vec<R>>,
}

pub type ScopeOf<N> = Scope<<N as Nategory>::Object, <N as Nategory>::Morphism, <N as Nategory>::Norphism>;

impl<O, M, R> Scope<O, M, R>
where
    O: Clone + PartialEq + std::fmt::Debug,
{
    pub fn exhaustive<N>(inst: &N) -> Result<Self, NategoryError>
    where
        N: FiniteNategory<Object = O, Morphism = M, Norphism = R>,
    {
        Self::build(inst, inst.objects(), |x, y| inst.hom(x, y), |x, y| inst.nom(x, y))
    }

    pub fn sampled<N, S>(inst: &N, sampler: &S) -> Result<Self, NategoryError>
    where
        N: Nategory<Object = O, Morphism = M, Norphism = R>,
        S: ArrowSampler<N>,
    {
        Self::build(
            inst,
            sampler.objects(inst),
            |x, y| sampler.morphisms(inst, x, y),
            |x, y| sampler.norphisms(inst, x, y),
        )
    }

    fn build<N, FH, FN>(inst: &N, objects: Vec<O>, mut hom: FH, mut nom: FN) -> Result<Self, NategoryError>
    where
        N: Nategory<Object = O, Morphism = M, Norphism = R>,
        FH: FnMut(&O, &O) -> Result<Vec<M>, NategoryError>,
        FN: FnMut(&O, &O) -> Result<Vec<R>, NategoryError>,
    {
        let n = objects.len();
        let mut homs = Vec::with_capacity(n * n);
        let mut noms = Vec::with_capacity(n * n);
        for x in &objects {
            for y in &objects {
                let fs = hom(x, y)?;
                for f in &fs {
                    let sig = (inst.mor_source(f), inst.mor_target(f));
                    if sig.0 != *x || sig.1 != *y {
                        return Err(NategoryError::Signature {
                            op: "scope",
                            detail: format!("morphism {sig:?} listed under ({x:?}, {y:?})"),
                        });
                    }
                }
                let ns = nom(x, y)?;
                for m in &ns {
                    let sig = (inst.nor_source(m), inst.nor_target(m));
                    if sig.0 != *x || sig.1 != *y {
                        return Err(NategoryError::Signature {
                            op: "scope",
                            detail: format!("norphism {sig:?} listed under ({x:?}, {y:?})"),
                        });
                    }
                }
                homs.push(fs);
                noms.push(ns);
            }
        }
        Ok(Scope { objects, homs, noms })
    }
}

impl<O, M, R> Scope<O, M, R> {
    pub fn objects(&self) -> &[O] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn homs(&self, x: usize, y: usize) -> &[M] {
        &self.homs[x * self.objects.len() + y]
    }

    pub fn noms(&self, x: usize, y: usize) -> &[R] {
        &self.noms[x * self.objects.len() + y]
    }

    pub fn index_of(&self, o: &O) -> Option<usize>
    where
        O: PartialEq,
    {
        self.objects.iter().position(|p| p == o)
    }

    pub fn morphism_count(&self) -> usize {
        self.homs.iter().map(Vec::len).sum()
    }

    pub fn norphism_count(&self) -> usize {
        self.noms.iter().map(Vec::len).sum()
    }
}
