//! Oracles shared by the integration tests. Nothing here calls the code it
//! is used to check.

#![allow(dead_code)]

use std::sync::Arc;

use nategory::berg::{Connectivity, NodeId, SteepnessInterval, Terrain, TerrainGraph};
use nategory::category::{FiniteCategory, MorId, MorphismSet, ObjId};
use nategory::codesign::{FinitePoset, NesignProblem};
use nategory::{FiniteNategory, Nategory, NategoryError};
use petgraph::graph::{DiGraph, NodeIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Distances from `from` by petgraph's Dijkstra over the graph's edges.
pub fn dijkstra(graph: &TerrainGraph, from: NodeId) -> Vec<f64> {
    oracle_distances(graph, from, false)
}

/// Distances from every node to `to`.
pub fn dijkstra_to(graph: &TerrainGraph, to: NodeId) -> Vec<f64> {
    oracle_distances(graph, to, true)
}

fn oracle_distances(graph: &TerrainGraph, root: NodeId, reverse: bool) -> Vec<f64> {
    let mut g: DiGraph<(), f64> = DiGraph::new();
    let idx: Vec<NodeIndex> = graph.nodes().map(|_| g.add_node(())).collect();
    for v in graph.nodes() {
        for &(w, len) in graph.out_edges(v) {
            let (a, b) = if reverse { (w, v) } else { (v, w) };
            g.add_edge(idx[a.0], idx[b.0], len);
        }
    }
    let dist = petgraph::algo::dijkstra(&g, idx[root.0], None, |e| *e.weight());
    idx.iter()
        .map(|i| dist.get(i).copied().unwrap_or(f64::INFINITY))
        .collect()
}

/// Heights from a sum of a few seeded bumps, so slopes vary smoothly.
pub fn random_terrain(seed: u64, rows: usize, cols: usize) -> Terrain {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bumps: Vec<(f64, f64, f64, f64)> = (0..4)
        .map(|_| {
            (
                rng.gen_range(0.0..rows as f64),
                rng.gen_range(0.0..cols as f64),
                rng.gen_range(-6.0..12.0),
                rng.gen_range(2.0..6.0),
            )
        })
        .collect();
    let noise: Vec<f64> = (0..rows * cols).map(|_| rng.gen_range(0.0..0.5)).collect();
    Terrain::from_fn(rows, cols, 1.0, |r, c| {
        let bump: f64 = bumps
            .iter()
            .map(|&(br, bc, h, w)| h * (-((r as f64 - br).powi(2) + (c as f64 - bc).powi(2)) / (w * w)).exp())
            .sum();
        bump + noise[r * cols + c]
    })
    .expect("valid terrain")
}

/// A random terrain graph with a steepness window loose enough that most
/// queries are feasible and some are not.
pub fn random_graph(seed: u64, rows: usize, cols: usize) -> TerrainGraph {
    let conn = if seed.is_multiple_of(2) {
        Connectivity::Four
    } else {
        Connectivity::Eight
    };
    TerrainGraph::build(
        random_terrain(seed, rows, cols),
        SteepnessInterval::new(-1.2, 1.2).unwrap(),
        conn,
    )
}

/// `(n ▸ d)(p, r)` from the definition, on plain tables indexed `[row][col]`.
pub fn np_right_oracle(n: &[Vec<bool>], d: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let q = n.first().map_or(0, Vec::len);
    (0..n.len())
        .map(|p| (0..d.len()).map(|r| (0..q).any(|k| n[p][k] && d[r][k])).collect())
        .collect()
}

/// `(d • n)(p, r)` from the definition.
pub fn np_left_oracle(d: &[Vec<bool>], n: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let cols_p = d.first().map_or(0, Vec::len);
    let cols_r = n.first().map_or(0, Vec::len);
    (0..cols_p)
        .map(|p| (0..cols_r).map(|r| (0..d.len()).any(|k| d[k][p] && n[k][r])).collect())
        .collect()
}

/// Relational composition of two tables.
pub fn compose_oracle(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let cols = b.first().map_or(0, Vec::len);
    (0..a.len())
        .map(|i| (0..cols).map(|j| (0..b.len()).any(|k| a[i][k] && b[k][j])).collect())
        .collect()
}

pub fn table(rows: usize, cols: usize, get: impl Fn(usize, usize) -> bool) -> Vec<Vec<bool>> {
    (0..rows).map(|i| (0..cols).map(|j| get(i, j)).collect()).collect()
}

pub fn np_table(n: &NesignProblem) -> Vec<Vec<bool>> {
    table(n.source().len(), n.target().len(), |i, j| n.get(i, j))
}

pub fn chain(name: &str, n: i64) -> Arc<FinitePoset> {
    Arc::new(FinitePoset::chain(name, 0, n - 1))
}

/// Every poset on up to four elements, up to relabelling but not deduplicated.
pub fn small_posets(max: usize) -> Vec<Arc<FinitePoset>> {
    let mut out = Vec::new();
    for n in 1..=max {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let leq: Vec<bool> = (0..n * n)
                .map(|c| {
                    let (a, b) = (c / n, c % n);
                    a == b
                        || pairs
                            .iter()
                            .position(|&p| p == (a, b))
                            .is_some_and(|i| mask >> i & 1 == 1)
                })
                .collect();
            let names = (0..n).map(|i| format!("e{i}")).collect();
            if let Ok(p) = FinitePoset::new(&format!("P{n}_{mask}"), names, leq) {
                out.push(Arc::new(p));
            }
        }
    }
    out
}

/// Powerset norphisms with deliberately wrong actions: `f • n` is the whole
/// hom-set as soon as some `f ∘ g` lands in `n`, and symmetrically for `▸`.
/// Equivariance fails wherever composition with a fixed arrow is not
/// constant on a hom-set.
pub struct BrokenPowerset<'a> {
    pub cat: &'a FiniteCategory,
}

fn set(cat: &FiniteCategory, x: ObjId, y: ObjId, members: impl IntoIterator<Item = MorId>) -> MorphismSet {
    MorphismSet::new(cat, x, y, members).expect("members in hom-set")
}

impl Nategory for BrokenPowerset<'_> {
    type Object = ObjId;
    type Morphism = MorId;
    type Norphism = MorphismSet;

    fn mor_source(&self, f: &MorId) -> ObjId {
        self.cat.source(*f)
    }
    fn mor_target(&self, f: &MorId) -> ObjId {
        self.cat.target(*f)
    }
    fn nor_source(&self, n: &MorphismSet) -> ObjId {
        n.source()
    }
    fn nor_target(&self, n: &MorphismSet) -> ObjId {
        n.target()
    }
    fn identity(&self, x: &ObjId) -> MorId {
        self.cat.identity(*x)
    }
    fn compose_unchecked(&self, f: &MorId, g: &MorId) -> MorId {
        self.cat.compose(*f, *g).expect("composable")
    }
    fn incompat_unchecked(&self, n: &MorphismSet, f: &MorId) -> bool {
        n.contains(*f)
    }
    fn ncompose_left_unchecked(&self, f: &MorId, n: &MorphismSet) -> MorphismSet {
        let y = self.cat.target(*f);
        let homs = self.cat.hom(y, n.target());
        let hit = homs.iter().any(|&g| n.contains(self.cat.compose(*f, g).unwrap()));
        set(self.cat, y, n.target(), if hit { homs.to_vec() } else { vec![] })
    }
    fn ncompose_right_unchecked(&self, n: &MorphismSet, g: &MorId) -> MorphismSet {
        let y = self.cat.source(*g);
        let homs = self.cat.hom(n.source(), y);
        let hit = homs.iter().any(|&f| n.contains(self.cat.compose(f, *g).unwrap()));
        set(self.cat, n.source(), y, if hit { homs.to_vec() } else { vec![] })
    }
}

impl FiniteNategory for BrokenPowerset<'_> {
    fn objects(&self) -> Vec<ObjId> {
        self.cat.objects().collect()
    }
    fn hom(&self, x: &ObjId, y: &ObjId) -> Result<Vec<MorId>, NategoryError> {
        Ok(self.cat.hom(*x, *y).to_vec())
    }
    fn nom(&self, x: &ObjId, y: &ObjId) -> Result<Vec<MorphismSet>, NategoryError> {
        let homs = self.cat.hom(*x, *y);
        Ok((0u32..1 << homs.len())
            .map(|m| {
                set(
                    self.cat,
                    *x,
                    *y,
                    homs.iter()
                        .enumerate()
                        .filter(|(i, _)| m >> i & 1 == 1)
                        .map(|(_, &f)| f),
                )
            })
            .collect())
    }
}

/// `X → Y → Z` with `f1 ∘ g = h1` and `f2 ∘ g = h2`, so `{h1} ▸ g` is a
/// proper subset of `Hom(X, Y)` and the broken actions are caught.
pub fn collapsing_category() -> FiniteCategory {
    let mut b = FiniteCategory::builder();
    let [x, y, z] = ["X", "Y", "Z"].map(|n| b.object(n).unwrap());
    let f1 = b.morphism("f1", x, y).unwrap();
    let f2 = b.morphism("f2", x, y).unwrap();
    let g = b.morphism("g", y, z).unwrap();
    let h1 = b.morphism("h1", x, z).unwrap();
    let h2 = b.morphism("h2", x, z).unwrap();
    b.compose(f1, g, h1).unwrap();
    b.compose(f2, g, h2).unwrap();
    b.build().unwrap()
}
