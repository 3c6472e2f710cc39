use std::collections::HashMap;
use std::fmt;

use super::CategoryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct MorphismInfo {
    name: String,
    source: ObjId,
    target: ObjId,
}

/// A category with finitely many objects and morphisms, given by an explicit
/// composition table. Identities are created by the builder and named
/// `id_<object>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismInfo>,
    identities: Vec<MorId>,
    homs: Vec<Vec<MorId>>,
    // Dense `m × m` table; `None` for non-composable pairs.
    table: Vec<Option<MorId>>,
}

impl FiniteCategory {
    pub fn builder() -> CategoryBuilder {
        CategoryBuilder::default()
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name).map(MorId)
    }

    pub fn source(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].source
    }

    pub fn target(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].target
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.source(f).0] == f
    }

    /// `Hom(x, y)` in ascending id order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    /// `f ∘ g` (first `f`, then `g`); `None` if not composable.
    pub fn compose(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.table[f.0 * self.morphisms.len() + g.0]
    }

    pub fn max_hom_size(&self) -> usize {
        self.homs.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Incremental construction of a [`FiniteCategory`]. `build` checks that the
/// table is total on composable pairs, well-typed, unital and associative.
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<MorphismInfo>,
    identities: Vec<MorId>,
    entries: HashMap<(MorId, MorId), MorId>,
}

impl CategoryBuilder {
    pub fn object(&mut self, name: &str) -> Result<ObjId, CategoryError> {
        if self.objects.iter().any(|o| o == name) {
            return Err(CategoryError::Duplicate(name.to_string()));
        }
        let id = ObjId(self.objects.len());
        self.objects.push(name.to_string());
        let idm = self.push_morphism(format!("id_{name}"), id, id)?;
        self.identities.push(idm);
        Ok(id)
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name).map(MorId)
    }

    /// The identity created alongside `x`.
    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn morphism(&mut self, name: &str, source: ObjId, target: ObjId) -> Result<MorId, CategoryError> {
        for o in [source, target] {
            if o.0 >= self.objects.len() {
                return Err(CategoryError::Unknown(o.to_string()));
            }
        }
        self.push_morphism(name.to_string(), source, target)
    }

    fn push_morphism(&mut self, name: String, source: ObjId, target: ObjId) -> Result<MorId, CategoryError> {
        if self.morphisms.iter().any(|m| m.name == name) {
            return Err(CategoryError::Duplicate(name));
        }
        let id = MorId(self.morphisms.len());
        self.morphisms.push(MorphismInfo { name, source, target });
        Ok(id)
    }

    /// Declares `f ∘ g = h`.
    pub fn compose(&mut self, f: MorId, g: MorId, h: MorId) -> Result<&mut Self, CategoryError> {
        let count = self.morphisms.len();
        for m in [f, g, h] {
            if m.0 >= count {
                return Err(CategoryError::Unknown(m.to_string()));
            }
        }
        let (mf, mg, mh) = (&self.morphisms[f.0], &self.morphisms[g.0], &self.morphisms[h.0]);
        if mf.target != mg.source {
            return Err(CategoryError::NotComposable {
                first: mf.name.clone(),
                second: mg.name.clone(),
            });
        }
        if mh.source != mf.source || mh.target != mg.target {
            return Err(CategoryError::BadSignature {
                first: mf.name.clone(),
                second: mg.name.clone(),
                result: mh.name.clone(),
            });
        }
        if let Some(prev) = self.entries.insert((f, g), h) {
            if prev != h {
                return Err(CategoryError::Conflict {
                    first: mf.name.clone(),
                    second: mg.name.clone(),
                });
            }
        }
        Ok(self)
    }

    pub fn build(&self) -> Result<FiniteCategory, CategoryError> {
        let m = self.morphisms.len();
        let n = self.objects.len();
        let mut table = vec![None; m * m];
        for (f, mf) in self.morphisms.iter().enumerate() {
            for (g, mg) in self.morphisms.iter().enumerate() {
                if mf.target != mg.source {
                    continue;
                }
                let (fi, gi) = (MorId(f), MorId(g));
                let declared = self.entries.get(&(fi, gi)).copied();
                let implied = if self.identities[mf.target.0] == gi {
                    Some(fi)
                } else if self.identities[mg.source.0] == fi {
                    Some(gi)
                } else {
                    None
                };
                let entry = match (declared, implied) {
                    (Some(d), Some(i)) if d != i => {
                        return Err(CategoryError::Conflict {
                            first: mf.name.clone(),
                            second: mg.name.clone(),
                        })
                    }
                    (Some(d), _) => d,
                    (None, Some(i)) => i,
                    (None, None) => {
                        return Err(CategoryError::Missing {
                            first: mf.name.clone(),
                            second: mg.name.clone(),
                        })
                    }
                };
                table[f * m + g] = Some(entry);
            }
        }
        let mut homs = vec![Vec::new(); n * n];
        for (i, info) in self.morphisms.iter().enumerate() {
            homs[info.source.0 * n + info.target.0].push(MorId(i));
        }
        let cat = FiniteCategory {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            identities: self.identities.clone(),
            homs,
            table,
        };
        // Associativity over every composable triple.
        for f in 0..m {
            for g in 0..m {
                let Some(fg) = cat.table[f * m + g] else { continue };
                for h in 0..m {
                    let Some(gh) = cat.table[g * m + h] else { continue };
                    if cat.compose(fg, MorId(h)) != cat.compose(MorId(f), gh) {
                        return Err(CategoryError::NotAssociative {
                            names: [
                                cat.morphisms[f].name.clone(),
                                cat.morphisms[g].name.clone(),
                                cat.morphisms[h].name.clone(),
                            ],
                        });
                    }
                }
            }
        }
        Ok(cat)
    }
}
