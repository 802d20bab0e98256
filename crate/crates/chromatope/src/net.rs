//! Geometrical nets: unfolding cube and simplex boundaries into one
//! lower-dimensional flat, plus the counting arithmetic the unfoldings
//! support (element counts recovered from cells-times-per-cell divided by
//! the facet-incidence overlap).
//!
//! Layouts are fixed so outputs are canonical:
//! - Cubes use a cross unfolding: the facet `x_{n-1} = 0` is placed
//!   identically, the `2(n-1)` side facets fold down around its faces, and
//!   the far facet `x_{n-1} = 1` chains beyond the `x_0 = 1` side cell.
//! - Simplices use a star unfolding: the facet opposite the last vertex is
//!   placed as the regular `(n-1)`-simplex, and each remaining facet is
//!   reflected across one of its faces.
//!
//! All placements are exact: rational coefficients over the ambient axis
//! scales, so cell congruence with the source facet is checked by comparing
//! rational squared distances, never floats.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact::{format_rat, rat, Rat};
use crate::polytope::{FaceLattice, LatticeKind};

#[derive(Debug, Error, PartialEq)]
pub enum NetError {
    #[error("unfolding requires a cube or simplex, got {0}")]
    UnsupportedFamily(LatticeKind),
    #[error("unfolding requires dimension 2..=5, got {0}")]
    UnsupportedDimension(usize),
    #[error("rank {k} out of range for counting on a {dim}-polytope (want k <= dim-2)")]
    RankOutOfRange { k: usize, dim: usize },
    #[error("rank {0} faces sit in differing facet counts; lattice is broken")]
    NonuniformIncidence(usize),
    #[error("{cells} cells x {per_cell} per cell is not divisible by {divisor}")]
    NonDivisibleProduct {
        cells: u64,
        per_cell: u64,
        divisor: u64,
    },
}

/// One facet of the source polytope, placed isometrically in the net's
/// `(n-1)`-dimensional ambient space. `placement` maps each source vertex id
/// of the facet to its ambient coefficient vector.
#[derive(Debug, Clone)]
pub struct PlacedCell {
    pub facet: usize,
    pub placement: BTreeMap<usize, Vec<Rat>>,
}

/// Identification of the two cells containing one source ridge. When the
/// two placements of the ridge coincide the gluing is a crease (the net
/// folds there); otherwise the ridge appears twice on the net's boundary
/// and the copies meet only after refolding. Sub-faces of a glued ridge are
/// identified transitively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    pub ridge: usize,
    pub cells: (usize, usize),
    pub crease: bool,
}

/// An unfolded polytope boundary: every facet placed in `(n-1)`-space with
/// pairwise disjoint interiors, plus the gluing that refolds it.
#[derive(Debug, Clone)]
pub struct Net {
    source: FaceLattice,
    ambient_scales: Vec<Rat>,
    cells: Vec<PlacedCell>,
    gluings: Vec<Gluing>,
}

impl Net {
    pub fn source(&self) -> &FaceLattice {
        &self.source
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_scales.len()
    }

    pub fn ambient_scales(&self) -> &[Rat] {
        &self.ambient_scales
    }

    pub fn cells(&self) -> &[PlacedCell] {
        &self.cells
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    /// Float position of a placed source vertex within a cell.
    pub fn cell_vertex_f64(&self, cell: usize, vertex: usize) -> Vec<f64> {
        self.cells[cell].placement[&vertex]
            .iter()
            .zip(&self.ambient_scales)
            .map(|(&c, &u)| crate::exact::rat_to_f64(c) * crate::exact::rat_to_f64(u).sqrt())
            .collect()
    }

    /// Exact squared distance between two placed vertices of one cell.
    pub fn placed_squared_distance(&self, cell: usize, a: usize, b: usize) -> Rat {
        let pa = &self.cells[cell].placement[&a];
        let pb = &self.cells[cell].placement[&b];
        pa.iter()
            .zip(pb)
            .zip(&self.ambient_scales)
            .map(|((&ca, &cb), &u)| {
                let d = ca - cb;
                d * d * u
            })
            .sum()
    }

    /// Counts of gluing classes per rank `0..=n-2`: copies of source faces
    /// held by the cells, identified transitively through the recorded
    /// ridge gluings. Refolding is consistent exactly when these counts
    /// reproduce the source f-vector.
    pub fn gluing_classes_per_rank(&self) -> Vec<u64> {
        let n = self.source.dim();
        let mut counts = Vec::with_capacity(n - 1);
        for k in 0..=n - 2 {
            // Element (cell c, rank-k source face f) for every f inside c's facet.
            let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for (c, cell) in self.cells.iter().enumerate() {
                for f in self.source.faces_within_facet(k, cell.facet) {
                    let next = ids.len();
                    ids.insert((c, f), next);
                }
            }
            let mut uf = UnionFind::new(ids.len());
            for g in &self.gluings {
                let ridge = &self.source.faces(n - 2)[g.ridge];
                for (f, face) in self.source.faces(k).iter().enumerate() {
                    if face.iter().all(|v| ridge.binary_search(v).is_ok()) {
                        uf.union(ids[&(g.cells.0, f)], ids[&(g.cells.1, f)]);
                    }
                }
            }
            counts.push(uf.class_count() as u64);
        }
        counts
    }

    /// Checks that the gluings, read as a graph on cells, reproduce the
    /// source's facet adjacency graph under the cell-to-facet map.
    pub fn refold_matches_source_adjacency(&self) -> bool {
        let n = self.source.dim();
        let mut glued: Vec<(usize, usize)> = self
            .gluings
            .iter()
            .map(|g| {
                let fa = self.cells[g.cells.0].facet;
                let fb = self.cells[g.cells.1].facet;
                (fa.min(fb), fa.max(fb))
            })
            .collect();
        glued.sort_unstable();
        let mut adjacent: Vec<(usize, usize)> = (0..self.source.faces(n - 2).len())
            .map(|r| {
                let within: Vec<usize> = (0..self.source.faces(n - 1).len())
                    .filter(|&f| {
                        let ridge = &self.source.faces(n - 2)[r];
                        let facet = &self.source.faces(n - 1)[f];
                        ridge.iter().all(|v| facet.binary_search(v).is_ok())
                    })
                    .collect();
                (within[0].min(within[1]), within[0].max(within[1]))
            })
            .collect();
        adjacent.sort_unstable();
        glued == adjacent
    }

    /// Line-oriented text export: header, per-cell placements (exact
    /// rationals), then gluing lines.
    pub fn export(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "source {} {}\n",
            self.source.kind(),
            self.source.dim()
        ));
        out.push_str(&format!("ambient {}\n", self.ambient_dim()));
        let scales: Vec<String> = self.ambient_scales.iter().map(|&s| format_rat(s)).collect();
        out.push_str(&format!("scales {}\n", scales.join(" ")));
        out.push_str(&format!("cells {}\n", self.cells.len()));
        for (i, cell) in self.cells.iter().enumerate() {
            out.push_str(&format!("cell {i} facet {}\n", cell.facet));
            for (v, coords) in &cell.placement {
                let cs: Vec<String> = coords.iter().map(|&c| format_rat(c)).collect();
                out.push_str(&format!("{v} {}\n", cs.join(" ")));
            }
        }
        out.push_str(&format!("gluings {}\n", self.gluings.len()));
        for g in &self.gluings {
            out.push_str(&format!(
                "gluing {} cells {} {} {}\n",
                g.ridge,
                g.cells.0,
                g.cells.1,
                if g.crease { "crease" } else { "open" }
            ));
        }
        out
    }
}

/// Unfolds a cube or simplex boundary (2 <= dim <= 5) into its canonical
/// cross or star net.
pub fn unfold(p: &FaceLattice) -> Result<Net, NetError> {
    if !(2..=5).contains(&p.dim()) {
        return Err(NetError::UnsupportedDimension(p.dim()));
    }
    let cells = match p.kind() {
        LatticeKind::Cube => cube_cross_cells(p),
        LatticeKind::Simplex => simplex_star_cells(p),
        other => return Err(NetError::UnsupportedFamily(other)),
    };
    let ambient_scales = p.scales()[..p.dim() - 1].to_vec();
    let gluings = collect_gluings(p, &cells);
    Ok(Net {
        source: p.clone(),
        ambient_scales,
        cells,
        gluings,
    })
}

/// Cross unfolding of the n-cube. Cell order: central facet `x_{n-1}=0`,
/// then for each axis j < n-1 the two side facets `x_j=0`, `x_j=1`, then
/// the far facet `x_{n-1}=1` chained beyond the `x_0=1` cell.
fn cube_cross_cells(p: &FaceLattice) -> Vec<PlacedCell> {
    let n = p.dim();
    let vcount = 1usize << n;
    let facet_index = |axis: usize, side: usize| -> usize {
        let members: Vec<usize> = (0..vcount).filter(|v| (v >> axis) & 1 == side).collect();
        p.find_face(n - 1, &members).expect("cube facet")
    };
    let bit = |v: usize, j: usize| rat(((v >> j) & 1) as i64, 1);

    let mut cells = Vec::with_capacity(2 * n);
    let place = |axis: usize, side: usize, map: &dyn Fn(usize) -> Vec<Rat>| -> PlacedCell {
        let facet = facet_index(axis, side);
        let placement = (0..vcount)
            .filter(|v| (v >> axis) & 1 == side)
            .map(|v| (v, map(v)))
            .collect();
        PlacedCell { facet, placement }
    };

    // Central: identity on the first n-1 coordinates.
    cells.push(place(n - 1, 0, &|v| {
        (0..n - 1).map(|i| bit(v, i)).collect()
    }));
    // Side cells fold down (x_j = 0) or up (x_j = 1) around the central
    // facet's faces; the last source coordinate swings outward.
    for j in 0..n - 1 {
        cells.push(place(j, 0, &|v| {
            (0..n - 1)
                .map(|i| if i == j { -bit(v, n - 1) } else { bit(v, i) })
                .collect()
        }));
        cells.push(place(j, 1, &|v| {
            (0..n - 1)
                .map(|i| {
                    if i == j {
                        rat(1, 1) + bit(v, n - 1)
                    } else {
                        bit(v, i)
                    }
                })
                .collect()
        }));
    }
    // Far facet: rolled twice over, landing mirrored on [2,3] x [0,1]^{n-2}.
    cells.push(place(n - 1, 1, &|v| {
        (0..n - 1)
            .map(|i| {
                if i == 0 {
                    rat(3, 1) - bit(v, 0)
                } else {
                    bit(v, i)
                }
            })
            .collect()
    }));
    cells
}

/// Star unfolding of the n-simplex. The central facet omits the last source
/// vertex; each remaining facet (omitting vertex i < n) reflects the last
/// vertex across the central facet's face opposite vertex i.
fn simplex_star_cells(p: &FaceLattice) -> Vec<PlacedCell> {
    let n = p.dim();
    // Placed central vertices: the source facet 0..n-1 already lies in the
    // first n-1 axes (last coefficient zero).
    let w: Vec<Vec<Rat>> = (0..n).map(|k| p.vertices()[k][..n - 1].to_vec()).collect();
    let facet_omitting = |skip: usize| -> usize {
        let members: Vec<usize> = (0..=n).filter(|&v| v != skip).collect();
        p.find_face(n - 1, &members).expect("simplex facet")
    };

    let mut cells = Vec::with_capacity(n + 1);
    let central_placement: BTreeMap<usize, Vec<Rat>> = (0..n).map(|k| (k, w[k].clone())).collect();
    cells.push(PlacedCell {
        facet: facet_omitting(n),
        placement: central_placement,
    });
    for i in 0..n {
        // Apex lands on the far side of the central face opposite vertex i:
        // twice that face's centroid minus w_i.
        let mut apex = vec![rat(0, 1); n - 1];
        for (j, wj) in w.iter().enumerate() {
            if j != i {
                for (a, &c) in apex.iter_mut().zip(wj) {
                    *a += rat(2, n as i64 - 1) * c;
                }
            }
        }
        for (a, &c) in apex.iter_mut().zip(&w[i]) {
            *a -= c;
        }
        let placement: BTreeMap<usize, Vec<Rat>> = (0..=n)
            .filter(|&v| v != i)
            .map(|v| (v, if v == n { apex.clone() } else { w[v].clone() }))
            .collect();
        cells.push(PlacedCell {
            facet: facet_omitting(i),
            placement,
        });
    }
    cells
}

/// One gluing per source ridge: the two cells carrying its facets, with the
/// crease flag set when their placements of the ridge agree.
fn collect_gluings(p: &FaceLattice, cells: &[PlacedCell]) -> Vec<Gluing> {
    let n = p.dim();
    let cell_of_facet: BTreeMap<usize, usize> = cells
        .iter()
        .enumerate()
        .map(|(i, c)| (c.facet, i))
        .collect();
    let mut gluings = Vec::with_capacity(p.faces(n - 2).len());
    for (r, ridge) in p.faces(n - 2).iter().enumerate() {
        let holders: Vec<usize> = (0..p.faces(n - 1).len())
            .filter(|&f| {
                ridge
                    .iter()
                    .all(|v| p.faces(n - 1)[f].binary_search(v).is_ok())
            })
            .map(|f| cell_of_facet[&f])
            .collect();
        let (a, b) = (holders[0].min(holders[1]), holders[0].max(holders[1]));
        let crease = ridge
            .iter()
            .all(|v| cells[a].placement[v] == cells[b].placement[v]);
        gluings.push(Gluing {
            ridge: r,
            cells: (a, b),
            crease,
        });
    }
    gluings
}

/// Number of facets containing any rank-k face, checked constant across
/// all rank-k faces; equals `dim - k` for cubes and simplices.
pub fn facet_incidence_divisor(p: &FaceLattice, k: usize) -> Result<u64, NetError> {
    let n = p.dim();
    if n < 2 || k > n - 2 {
        return Err(NetError::RankOutOfRange { k, dim: n });
    }
    let counts: Vec<usize> = (0..p.faces(k).len())
        .map(|i| p.facets_containing(k, i))
        .collect();
    let first = counts[0];
    if counts.iter().any(|&c| c != first) {
        return Err(NetError::NonuniformIncidence(k));
    }
    Ok(first as u64)
}

/// The net counting arithmetic: cells times rank-k faces per cell, divided
/// by the overlap divisor. Exact division is required and the result must
/// recount `f_k` of the source.
pub fn count_via_net(p: &FaceLattice, k: usize) -> Result<u64, NetError> {
    let n = p.dim();
    let divisor = facet_incidence_divisor(p, k)?;
    let cells = p.faces(n - 1).len() as u64;
    let per_cell = p.faces_within_facet(k, 0).len() as u64;
    let product = cells * per_cell;
    if !product.is_multiple_of(divisor) {
        return Err(NetError::NonDivisibleProduct {
            cells,
            per_cell,
            divisor,
        });
    }
    Ok(product / divisor)
}

/// Palette family tag: the standard (black-to-pink) layer or its reverse
/// (black-to-green) companion. The reverse family carries identical
/// magnitudes; it only disambiguates which side of a net a cell came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayerTag {
    Standard,
    Reverse,
}

/// How a cell's base face is colored: uniformly at full value (prism-like
/// cells) or gradated from black at the rim to full value mid-face
/// (cone-like cells).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorStyle {
    Uniform,
    Gradated,
}

/// Color assignment for one net cell: the tag and style, plus the base
/// face (source vertex ids) whose placement carries the cell's colors.
#[derive(Debug, Clone)]
pub struct CellColor {
    pub tag: LayerTag,
    pub style: ColorStyle,
    pub rep_face: Vec<usize>,
}

/// A net whose cells each carry a color representation: the cell drawn as
/// a colored copy of one of its faces. Coincident base faces are kept with
/// multiplicity, never merged.
#[derive(Debug, Clone)]
pub struct ColoredNet {
    pub net: Net,
    pub colors: Vec<CellColor>,
}

impl ColoredNet {
    /// Placed base-face positions with their coincidence counts, sorted by
    /// position. Each position is the sorted list of placed coefficient
    /// vectors of the base face's vertices.
    pub fn multiplicities(&self) -> Vec<(Vec<Vec<Rat>>, usize)> {
        let mut counts: BTreeMap<Vec<Vec<Rat>>, usize> = BTreeMap::new();
        for (cell, color) in self.colors.iter().enumerate() {
            let mut key: Vec<Vec<Rat>> = color
                .rep_face
                .iter()
                .map(|v| self.net.cells[cell].placement[v].clone())
                .collect();
            key.sort();
            *counts.entry(key).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.multiplicities()
            .iter()
            .map(|(_, c)| *c)
            .max()
            .unwrap_or(0)
    }
}

/// Colors a net. Cube cells are prisms over their bottom faces: every cell
/// gets a uniform standard-tag base face (the placed face minimizing the
/// last ambient coordinate). Simplex cells are cones: the central cell is
/// gradated over its bottom face with the standard tag, and each reflected
/// cell is gradated over its crease face with the reverse tag — which
/// doubles the central base face, recorded as multiplicity 2.
pub fn color_net(net: Net) -> ColoredNet {
    let n = net.source.dim();
    let colors: Vec<CellColor> = match net.source.kind() {
        LatticeKind::Cube => net
            .cells
            .iter()
            .map(|cell| {
                let min_last = cell
                    .placement
                    .values()
                    .map(|coords| coords[n - 2])
                    .min()
                    .expect("nonempty cell");
                let rep_face: Vec<usize> = cell
                    .placement
                    .iter()
                    .filter(|(_, coords)| coords[n - 2] == min_last)
                    .map(|(&v, _)| v)
                    .collect();
                CellColor {
                    tag: LayerTag::Standard,
                    style: ColorStyle::Uniform,
                    rep_face,
                }
            })
            .collect(),
        LatticeKind::Simplex => {
            let mut colors = vec![CellColor {
                // Central cell: bottom face, vertices 0..n-1 of the source.
                tag: LayerTag::Standard,
                style: ColorStyle::Gradated,
                rep_face: (0..n - 1).collect(),
            }];
            for i in 0..n {
                // Reflected cell i: the crease face shared with the center.
                colors.push(CellColor {
                    tag: LayerTag::Reverse,
                    style: ColorStyle::Gradated,
                    rep_face: (0..n).filter(|&v| v != i).collect(),
                });
            }
            colors
        }
        _ => unreachable!("nets exist only for cubes and simplices"),
    };
    ColoredNet { net, colors }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn class_count(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&i| self.find(i) == i)
            .count()
    }
}
