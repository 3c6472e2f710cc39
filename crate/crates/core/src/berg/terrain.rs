use std::fmt;
use std::str::FromStr;

use super::BergError;

/// Heights sampled on a regular grid, row-major, in meters.
#[derive(Debug, Clone, PartialEq)]
pub struct Terrain {
    rows: usize,
    cols: usize,
    cell_size: f64,
    heights: Vec<f64>,
}

impl Terrain {
    pub fn new(rows: usize, cols: usize, cell_size: f64, heights: Vec<f64>) -> Result<Self, BergError> {
        if rows == 0 || cols == 0 {
            return Err(BergError::InvalidTerrain(format!(
                "grid must be non-empty, got {rows}x{cols}"
            )));
        }
        if !(cell_size.is_finite() && cell_size > 0.0) {
            return Err(BergError::InvalidTerrain(format!(
                "cell size must be positive, got {cell_size}"
            )));
        }
        if heights.len() != rows * cols {
            return Err(BergError::InvalidTerrain(format!(
                "expected {} heights, got {}",
                rows * cols,
                heights.len()
            )));
        }
        if let Some(i) = heights.iter().position(|h| !h.is_finite()) {
            return Err(BergError::InvalidTerrain(format!(
                "height at ({}, {}) is not finite",
                i / cols,
                i % cols
            )));
        }
        Ok(Terrain {
            rows,
            cols,
            cell_size,
            heights,
        })
    }

    /// Samples `h(row, col)` onto the grid.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        cell_size: f64,
        h: impl Fn(usize, usize) -> f64,
    ) -> Result<Self, BergError> {
        let heights = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .map(|(r, c)| h(r, c))
            .collect();
        Terrain::new(rows, cols, cell_size, heights)
    }

    /// Parses `rows,cols,cell_size` followed by one line of comma-separated
    /// heights per row. Blank lines are skipped.
    pub fn parse_csv(text: &str) -> Result<Self, BergError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(BergError::Parse {
            line: 0,
            message: "empty terrain file".into(),
        })?;
        let fields: Vec<&str> = header.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(BergError::Parse {
                line: hline,
                message: "header must be `rows,cols,cell_size`".into(),
            });
        }
        let bad = |what: &str, v: &str| BergError::Parse {
            line: hline,
            message: format!("invalid {what} `{v}`"),
        };
        let rows: usize = fields[0].parse().map_err(|_| bad("rows", fields[0]))?;
        let cols: usize = fields[1].parse().map_err(|_| bad("cols", fields[1]))?;
        let cell: f64 = fields[2].parse().map_err(|_| bad("cell size", fields[2]))?;
        let mut heights = Vec::with_capacity(rows * cols);
        let mut last = hline;
        for (line, row) in lines.by_ref().take(rows) {
            last = line;
            let vals: Vec<&str> = row.split(',').map(str::trim).collect();
            if vals.len() != cols {
                return Err(BergError::Parse {
                    line,
                    message: format!("expected {cols} heights, found {}", vals.len()),
                });
            }
            for v in vals {
                let h: f64 = v.parse().map_err(|_| BergError::Parse {
                    line,
                    message: format!("invalid height `{v}`"),
                })?;
                if !h.is_finite() {
                    return Err(BergError::Parse {
                        line,
                        message: format!("height `{v}` is not finite"),
                    });
                }
                heights.push(h);
            }
        }
        if heights.len() != rows * cols {
            return Err(BergError::Parse {
                line: last,
                message: format!("expected {rows} rows, found {}", heights.len() / cols.max(1)),
            });
        }
        if let Some((line, _)) = lines.next() {
            return Err(BergError::Parse {
                line,
                message: format!("more than {rows} rows"),
            });
        }
        Terrain::new(rows, cols, cell, heights).map_err(|e| BergError::Parse {
            line: hline,
            message: e.to_string(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }

    pub fn height(&self, row: usize, col: usize) -> f64 {
        self.heights[row * self.cols + col]
    }
}

/// Admissible slopes `[σ_L, σ_U]`, rise over horizontal run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteepnessInterval {
    lo: f64,
    hi: f64,
}

impl SteepnessInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self, BergError> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(BergError::InvalidSigma { lo, hi });
        }
        Ok(SteepnessInterval { lo, hi })
    }

    /// `(-∞, +∞)`: every neighbor edge is kept.
    pub fn unconstrained() -> Self {
        SteepnessInterval {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn contains(&self, s: f64) -> bool {
        self.lo <= s && s <= self.hi
    }
}

impl fmt::Display for SteepnessInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Four,
    Eight,
}

impl Connectivity {
    fn offsets(self) -> &'static [(isize, isize)] {
        const FOUR: [(isize, isize); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];
        const EIGHT: [(isize, isize); 8] = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)];
        match self {
            Connectivity::Four => &FOUR,
            Connectivity::Eight => &EIGHT,
        }
    }
}

impl FromStr for Connectivity {
    type Err = BergError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "4" => Ok(Connectivity::Four),
            "8" => Ok(Connectivity::Eight),
            _ => Err(BergError::Usage(format!("connectivity must be 4 or 8, got `{s}`"))),
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connectivity::Four => "4",
            Connectivity::Eight => "8",
        })
    }
}

/// A grid cell, numbered row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub usize);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Slope `(z₂ − z₁) / horizontal distance` between two 3D points.
pub fn edge_steepness(p1: [f64; 3], p2: [f64; 3]) -> Result<f64, BergError> {
    let run = (p2[0] - p1[0]).hypot(p2[1] - p1[1]);
    if run == 0.0 {
        return Err(BergError::DegenerateEdge);
    }
    Ok((p2[2] - p1[2]) / run)
}

fn chord(p1: [f64; 3], p2: [f64; 3]) -> f64 {
    let d = [p2[0] - p1[0], p2[1] - p1[1], p2[2] - p1[2]];
    (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
}

/// Directed neighbor graph of a terrain, keeping the edges whose steepness
/// lies in `σ`. Edge lengths are 3D chord lengths.
#[derive(Debug, Clone)]
pub struct TerrainGraph {
    terrain: Terrain,
    sigma: SteepnessInterval,
    connectivity: Connectivity,
    // Sorted by target id.
    out: Vec<Vec<(NodeId, f64)>>,
}

impl TerrainGraph {
    pub fn build(terrain: Terrain, sigma: SteepnessInterval, connectivity: Connectivity) -> Self {
        let (rows, cols) = (terrain.rows, terrain.cols);
        let mut g = TerrainGraph {
            out: vec![Vec::new(); rows * cols],
            terrain,
            sigma,
            connectivity,
        };
        for r in 0..rows {
            for c in 0..cols {
                let a = NodeId(r * cols + c);
                let pa = g.position(a);
                for &(dr, dc) in connectivity.offsets() {
                    let (nr, nc) = (r as isize + dr, c as isize + dc);
                    if nr < 0 || nc < 0 || nr >= rows as isize || nc >= cols as isize {
                        continue;
                    }
                    let b = NodeId(nr as usize * cols + nc as usize);
                    let pb = g.position(b);
                    let s = edge_steepness(pa, pb).expect("neighbors differ horizontally");
                    if sigma.contains(s) {
                        g.out[a.0].push((b, chord(pa, pb)));
                    }
                }
                g.out[a.0].sort_by_key(|e| e.0);
            }
        }
        g
    }

    pub fn terrain(&self) -> &Terrain {
        &self.terrain
    }

    pub fn sigma(&self) -> SteepnessInterval {
        self.sigma
    }

    pub fn connectivity(&self) -> Connectivity {
        self.connectivity
    }

    pub fn node_count(&self) -> usize {
        self.out.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.out.len()).map(NodeId)
    }

    pub fn node(&self, row: usize, col: usize) -> Option<NodeId> {
        (row < self.terrain.rows && col < self.terrain.cols).then(|| NodeId(row * self.terrain.cols + col))
    }

    pub fn contains(&self, n: NodeId) -> bool {
        n.0 < self.out.len()
    }

    pub fn cell(&self, n: NodeId) -> (usize, usize) {
        (n.0 / self.terrain.cols, n.0 % self.terrain.cols)
    }

    /// `⟨x, y, h(x, y)⟩` with `x` along columns and `y` along rows.
    pub fn position(&self, n: NodeId) -> [f64; 3] {
        let (r, c) = self.cell(n);
        let s = self.terrain.cell_size;
        [c as f64 * s, r as f64 * s, self.terrain.height(r, c)]
    }

    pub fn out_edges(&self, n: NodeId) -> &[(NodeId, f64)] {
        &self.out[n.0]
    }

    pub fn edge_length(&self, a: NodeId, b: NodeId) -> Option<f64> {
        let edges = self.out.get(a.0)?;
        edges.binary_search_by_key(&b, |e| e.0).ok().map(|i| edges[i].1)
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }
}
