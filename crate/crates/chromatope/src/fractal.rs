//! Triadic fractal iterations: the Cantor family (remove middle thirds)
//! and the Sierpinski–Menger family (remove subcells with too many middle
//! coordinates), in up to four dimensions.
//!
//! Every level-n set is stored exactly as the integer cells of a 3ⁿ-fold
//! subdivision, so cell counts, dimensions, and measure sequences are
//! exact arithmetic rather than raster estimates. The color construction
//! expresses a d-dimensional iteration through its (d−1)-dimensional
//! relative: a solid coloring of the base set plus full-depth uncoloring
//! erasers on the complement, one copy folded onto each of the 2d facets
//! of the unit d-cube.

use std::fmt::Write as _;

use thiserror::Error;

use crate::exact::{binomial, rat, Rat};

#[derive(Debug, Error, PartialEq)]
pub enum FractalError {
    #[error("box sets support dimensions 1 through 4, got {0}")]
    UnsupportedDimension(usize),
    #[error("rule ({d},{m}) is invalid: need 0 <= m < d")]
    InvalidRule { d: usize, m: usize },
    #[error("level {level} exceeds the dimension-{d} ceiling of {max}")]
    LevelCeiling { d: usize, level: u32, max: u32 },
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("product dimension {0} exceeds 4")]
    DimensionCeiling(usize),
    #[error("no color construction for rule ({d},{m}): need d >= 2 and m <= d-2")]
    UnsupportedColorRep { d: usize, m: usize },
    #[error("bad cell data: {0}")]
    BadCell(String),
}

/// Highest supported iteration level per dimension (memory ceiling).
pub fn level_ceiling(dim: usize) -> u32 {
    match dim {
        1 | 2 => 6,
        3 => 4,
        _ => 3,
    }
}

/// A finite triadic fractal iteration: the level-n subdivision of the
/// unit d-cube into 3ⁿ cells per axis, with a sorted, duplicate-free set
/// of kept cells. Each cell tuple names the closed box of side 3⁻ⁿ whose
/// corner sits at (tuple)·3⁻ⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriadicBoxSet {
    dim: usize,
    level: u32,
    cells: Vec<Vec<u16>>,
}

impl TriadicBoxSet {
    pub fn new(dim: usize, level: u32, mut cells: Vec<Vec<u16>>) -> Result<Self, FractalError> {
        if !(1..=4).contains(&dim) {
            return Err(FractalError::UnsupportedDimension(dim));
        }
        let max = level_ceiling(dim);
        if level > max {
            return Err(FractalError::LevelCeiling { d: dim, level, max });
        }
        let grid = 3u16.pow(level);
        for cell in &cells {
            if cell.len() != dim {
                return Err(FractalError::BadCell(format!(
                    "cell {cell:?} is not {dim}-dimensional"
                )));
            }
            if cell.iter().any(|&c| c >= grid) {
                return Err(FractalError::BadCell(format!(
                    "cell {cell:?} outside the {grid}-cell grid"
                )));
            }
        }
        cells.sort_unstable();
        if cells.windows(2).any(|w| w[0] == w[1]) {
            return Err(FractalError::BadCell("duplicate cell".into()));
        }
        Ok(TriadicBoxSet { dim, level, cells })
    }

    /// The level-0 set: one full unit box.
    pub fn full(dim: usize) -> Result<Self, FractalError> {
        TriadicBoxSet::new(dim, 0, vec![vec![0; dim]])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Cells per axis, 3^level.
    pub fn grid(&self) -> u16 {
        3u16.pow(self.level)
    }

    pub fn cells(&self) -> &[Vec<u16>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: &[u16]) -> bool {
        self.cells
            .binary_search_by(|c| c.as_slice().cmp(cell))
            .is_ok()
    }

    /// Side length of one cell, 3^{−level}.
    pub fn side(&self) -> Rat {
        rat(1, 3i64.pow(self.level))
    }

    /// Cells of the full grid not in this set, as a set at the same level.
    pub fn complement(&self) -> TriadicBoxSet {
        let grid = self.grid();
        let mut cells = Vec::new();
        let mut cursor = vec![0u16; self.dim];
        loop {
            if !self.contains(&cursor) {
                cells.push(cursor.clone());
            }
            let mut axis = self.dim;
            loop {
                if axis == 0 {
                    return TriadicBoxSet {
                        dim: self.dim,
                        level: self.level,
                        cells,
                    };
                }
                axis -= 1;
                cursor[axis] += 1;
                if cursor[axis] < grid {
                    break;
                }
                cursor[axis] = 0;
            }
        }
    }

    /// Text export: a `level dim` header line, then one cell tuple per
    /// line in sorted order.
    pub fn export(&self) -> String {
        let mut out = format!("{} {}\n", self.level, self.dim);
        for cell in &self.cells {
            let mut line = String::new();
            for (i, c) in cell.iter().enumerate() {
                if i > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{c}");
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, FractalError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| FractalError::BadCell("empty export".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let bad = |what: &str| FractalError::BadCell(format!("bad header `{what}`"));
        if parts.len() != 2 {
            return Err(bad(header));
        }
        let level: u32 = parts[0].parse().map_err(|_| bad(header))?;
        let dim: usize = parts[1].parse().map_err(|_| bad(header))?;
        let cells = lines
            .map(|line| {
                line.split_whitespace()
                    .map(|t| {
                        t.parse::<u16>()
                            .map_err(|_| FractalError::BadCell(format!("bad coordinate `{t}`")))
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<u16>>, _>>()?;
        TriadicBoxSet::new(dim, level, cells)
    }
}

/// The subdivision rule "split each cell 3-fold per axis and keep
/// subcells with at most m middle coordinates". (1,0) is the Cantor set,
/// (2,1) the Sierpinski carpet, (3,1) the Menger sponge, (3,2) the
/// Sierpinski cube, and (4,2) the four-dimensional Menger sponge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MengerRule {
    d: usize,
    m: usize,
}

impl MengerRule {
    pub fn new(d: usize, m: usize) -> Result<Self, FractalError> {
        if !(1..=4).contains(&d) {
            return Err(FractalError::UnsupportedDimension(d));
        }
        if m >= d {
            return Err(FractalError::InvalidRule { d, m });
        }
        Ok(MengerRule { d, m })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Whether a subcell offset in {0,1,2}^d survives: at most m middle
    /// coordinates (digit 1).
    pub fn keeps(&self, offsets: &[u16]) -> bool {
        offsets.iter().filter(|&&o| o == 1).count() <= self.m
    }

    /// Subcells kept per subdivision, N(d,m) = Σ_{k=0..m} C(d,k)·2^{d−k}.
    pub fn keep_count(&self) -> u64 {
        (0..=self.m)
            .map(|k| binomial(self.d, k) * 2u64.pow((self.d - k) as u32))
            .sum()
    }
}

/// Applies the rule n times to the full unit box: every cell splits into
/// 3^d subcells and subcells with more than m middle coordinates are
/// dropped, so exactly N(d,m)ⁿ cells remain.
pub fn iterate(rule: &MengerRule, n: u32) -> Result<TriadicBoxSet, FractalError> {
    let max = level_ceiling(rule.d);
    if n > max {
        return Err(FractalError::LevelCeiling {
            d: rule.d,
            level: n,
            max,
        });
    }
    let keep: Vec<Vec<u16>> = offsets(rule.d)
        .into_iter()
        .filter(|o| rule.keeps(o))
        .collect();
    let mut cells = vec![vec![0u16; rule.d]];
    for _ in 0..n {
        let mut next = Vec::with_capacity(cells.len() * keep.len());
        for cell in &cells {
            for off in &keep {
                next.push(
                    cell.iter()
                        .zip(off)
                        .map(|(&c, &o)| 3 * c + o)
                        .collect::<Vec<u16>>(),
                );
            }
        }
        next.sort_unstable();
        cells = next;
    }
    TriadicBoxSet::new(rule.d, n, cells)
}

fn offsets(d: usize) -> Vec<Vec<u16>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0u16..3).map(move |o| {
                    let mut cell = prefix.clone();
                    cell.push(o);
                    cell
                })
            })
            .collect();
    }
    out
}

/// Cartesian product of two box sets at the same level: cell tuples
/// concatenate. The square of the Cantor set is the planar Cantor dust.
pub fn product(a: &TriadicBoxSet, b: &TriadicBoxSet) -> Result<TriadicBoxSet, FractalError> {
    if a.level != b.level {
        return Err(FractalError::LevelMismatch(a.level, b.level));
    }
    let dim = a.dim + b.dim;
    if dim > 4 {
        return Err(FractalError::DimensionCeiling(dim));
    }
    let mut cells = Vec::with_capacity(a.len() * b.len());
    for x in &a.cells {
        for y in &b.cells {
            let mut cell = x.clone();
            cell.extend_from_slice(y);
            cells.push(cell);
        }
    }
    TriadicBoxSet::new(dim, a.level, cells)
}

/// Similarity (box-counting) dimension of the rule's limit set,
/// log N(d,m) / log 3.
pub fn fractal_dimension(rule: &MengerRule) -> f64 {
    (rule.keep_count() as f64).ln() / 3f64.ln()
}

/// Total k-volume of the level-n cells, N(d,m)ⁿ·3^{−kn}, exactly. The
/// sequence diverges in n iff N > 3^k; for the four-dimensional Menger
/// sponge the 4-volume vanishes while the 3-volume grows without bound.
///
/// Panics if k is outside 1..=d or n exceeds the level ceiling.
pub fn measure_proxy(rule: &MengerRule, k: usize, n: u32) -> Rat {
    assert!(k >= 1 && k <= rule.d, "k={k} outside 1..={}", rule.d);
    assert!(
        n <= level_ceiling(rule.d),
        "level {n} exceeds the dimension-{} ceiling",
        rule.d
    );
    let count = (rule.keep_count() as i64).pow(n);
    rat(count, 3i64.pow(k as u32 * n))
}

/// A d-dimensional iteration expressed by color over (d−1)-dimensional
/// data: the base set of the same rule one dimension down, solid-colored
/// to full height, and a full-depth uncoloring eraser supported on the
/// base complement, one copy folded onto each of the 2d facets. A point
/// survives every eraser exactly when all d of its axis projections land
/// in the base set.
#[derive(Debug, Clone, PartialEq)]
pub struct FractalColorRep {
    rule: MengerRule,
    level: u32,
    base: TriadicBoxSet,
    eraser: TriadicBoxSet,
}

impl FractalColorRep {
    pub fn rule(&self) -> &MengerRule {
        &self.rule
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// The (d−1)-dimensional level-n set carrying the solid coloring.
    pub fn base(&self) -> &TriadicBoxSet {
        &self.base
    }

    /// Complement of the base, carrying the full-depth uncoloring.
    pub fn eraser(&self) -> &TriadicBoxSet {
        &self.eraser
    }

    /// The 2d facet placements receiving eraser copies, as (axis, side)
    /// pairs; opposite facets erase the same cells, so the redundancy is
    /// kept for symmetry rather than effect.
    pub fn facets(&self) -> Vec<(usize, bool)> {
        (0..self.rule.d)
            .flat_map(|axis| [(axis, false), (axis, true)])
            .collect()
    }

    /// The represented d-dimensional set: lift the base along the last
    /// axis, then drop every cell some facet eraser reaches. A cell
    /// survives iff each of its d "omit one axis" projections is a base
    /// cell.
    pub fn lift(&self) -> TriadicBoxSet {
        let d = self.rule.d;
        let grid = self.base.grid();
        let mut cells = Vec::new();
        for cell in self.base.cells() {
            'transverse: for t in 0..grid {
                let mut lifted = cell.clone();
                lifted.push(t);
                for axis in 0..d - 1 {
                    let projection: Vec<u16> = lifted
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != axis)
                        .map(|(_, &c)| c)
                        .collect();
                    if !self.base.contains(&projection) {
                        continue 'transverse;
                    }
                }
                cells.push(lifted);
            }
        }
        cells.sort_unstable();
        TriadicBoxSet {
            dim: d,
            level: self.level,
            cells,
        }
    }
}

/// Builds the color construction of `iterate(rule, n)` from the rule one
/// dimension down. Requires d ≥ 2 and m ≤ d−2 — the regime where "every
/// projection has at most m middles" coincides with "at most m middles in
/// total", which is what makes the facet erasers exact.
pub fn fractal_color_rep(rule: &MengerRule, n: u32) -> Result<FractalColorRep, FractalError> {
    if rule.d < 2 || rule.m + 2 > rule.d {
        return Err(FractalError::UnsupportedColorRep {
            d: rule.d,
            m: rule.m,
        });
    }
    let base_rule = MengerRule::new(rule.d - 1, rule.m)?;
    let max = level_ceiling(rule.d);
    if n > max {
        return Err(FractalError::LevelCeiling {
            d: rule.d,
            level: n,
            max,
        });
    }
    let base = iterate(&base_rule, n)?;
    let eraser = base.complement();
    Ok(FractalColorRep {
        rule: *rule,
        level: n,
        base,
        eraser,
    })
}
