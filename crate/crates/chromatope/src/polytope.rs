//! Exact construction of the supported polytope families: hypercubes,
//! regular simplices, Cartesian products (prisms, duoprisms), vertex
//! truncations, and cube corners, each with a full face lattice.
//!
//! Coordinates are rational coefficients over per-axis square-root scales:
//! the geometric coordinate on axis `j` is `coeff * sqrt(scale_j)`. Cubes use
//! all-one scales; the regular simplex uses `scale_j = 1/(2j(j+1))`, which
//! makes every squared distance an exact rational. All comparisons are done
//! on squared lengths, never on irrational lengths.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::exact::{binomial, format_rat, rat, rat_to_f64, Rat};

/// A face, stored as a sorted list of vertex indices.
pub type Face = Vec<usize>;

/// Which construction produced a lattice. Used to gate family-specific
/// operations (unfolding, truncation).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    Cube,
    Simplex,
    CubeCorner,
    Product,
    Truncated,
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LatticeKind::Cube => "cube",
            LatticeKind::Simplex => "simplex",
            LatticeKind::CubeCorner => "corner",
            LatticeKind::Product => "product",
            LatticeKind::Truncated => "truncated",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum PolytopeError {
    #[error("dimension {0} unsupported (expected {1})")]
    UnsupportedDimension(usize, &'static str),
    #[error("product dimension {0} exceeds the ceiling of 5")]
    DimensionCeiling(usize),
    #[error("operation requires a cube or simplex family member, got {0:?}")]
    UnsupportedFamily(LatticeKind),
    #[error("truncation parameter must lie in (0, 1/2], got {0}")]
    BadTruncationParameter(String),
    #[error("truncation at {0} produces coincident vertices (rectified degenerate case)")]
    DegenerateTruncation(String),
}

/// Element counts `(f_0, ..., f_{n-1})` of a polytope boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Combinatorial polytope: exact vertex coordinates plus faces graded by
/// rank, with the cover (containment) relation between consecutive ranks.
///
/// Rank 0 faces are vertex singletons; rank `dim` is the single top face.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    dim: usize,
    kind: LatticeKind,
    /// Radicand per axis; geometric coordinate = coeff * sqrt(scale).
    scales: Vec<Rat>,
    /// Rational coefficients per vertex, one entry per axis.
    vertices: Vec<Vec<Rat>>,
    /// `faces[k]` lists the rank-k faces in a fixed construction order.
    faces: Vec<Vec<Face>>,
    /// `covers[k][i]` = indices of rank-(k+1) faces containing face `i`.
    covers: Vec<Vec<Vec<usize>>>,
}

impl FaceLattice {
    fn assemble(
        dim: usize,
        kind: LatticeKind,
        scales: Vec<Rat>,
        vertices: Vec<Vec<Rat>>,
        faces: Vec<Vec<Face>>,
    ) -> Self {
        let covers = compute_covers(&faces);
        FaceLattice {
            dim,
            kind,
            scales,
            vertices,
            faces,
            covers,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn scales(&self) -> &[Rat] {
        &self.scales
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    /// Rank-k faces. Panics if `k > dim`.
    pub fn faces(&self, k: usize) -> &[Face] {
        &self.faces[k]
    }

    /// Cover lists for rank-k faces (indices into rank k+1).
    pub fn covers(&self, k: usize) -> &[Vec<usize>] {
        &self.covers[k]
    }

    /// Boundary element counts `(f_0, ..., f_{n-1})`.
    pub fn f_vector(&self) -> FVector {
        FVector((0..self.dim).map(|k| self.faces[k].len() as u64).collect())
    }

    /// Float coordinates of vertex `v` (coeff * sqrt(scale) per axis).
    pub fn vertex_f64(&self, v: usize) -> Vec<f64> {
        self.vertices[v]
            .iter()
            .zip(&self.scales)
            .map(|(&c, &u)| rat_to_f64(c) * rat_to_f64(u).sqrt())
            .collect()
    }

    /// Exact squared distance between two vertices.
    pub fn squared_distance(&self, a: usize, b: usize) -> Rat {
        self.vertices[a]
            .iter()
            .zip(&self.vertices[b])
            .zip(&self.scales)
            .map(|((&ca, &cb), &u)| {
                let d = ca - cb;
                d * d * u
            })
            .sum()
    }

    /// Number of facets (rank dim-1 faces) containing the given rank-k face.
    pub fn facets_containing(&self, k: usize, face_idx: usize) -> usize {
        let face = &self.faces[k][face_idx];
        self.faces[self.dim - 1]
            .iter()
            .filter(|facet| is_subset(face, facet))
            .count()
    }

    /// Rank-k faces contained in the given facet, as indices into rank k.
    pub fn faces_within_facet(&self, k: usize, facet_idx: usize) -> Vec<usize> {
        let facet = &self.faces[self.dim - 1][facet_idx];
        self.faces[k]
            .iter()
            .enumerate()
            .filter(|(_, f)| is_subset(f, facet))
            .map(|(i, _)| i)
            .collect()
    }

    /// Locates a face by vertex set, returning its index at the given rank.
    pub fn find_face(&self, k: usize, verts: &[usize]) -> Option<usize> {
        let mut key: Face = verts.to_vec();
        key.sort_unstable();
        self.faces[k].iter().position(|f| *f == key)
    }

    /// Structural sanity check; used by tests, returns the first violation.
    pub fn validate(&self) -> Result<(), String> {
        if self.faces.len() != self.dim + 1 {
            return Err("rank count mismatch".into());
        }
        if self.faces[self.dim].len() != 1 {
            return Err("top rank must hold exactly one face".into());
        }
        if self.faces[self.dim][0].len() != self.vertices.len() {
            return Err("top face must contain every vertex".into());
        }
        if self.faces[0].len() != self.vertices.len()
            || self.faces[0].iter().enumerate().any(|(i, f)| f != &vec![i])
        {
            return Err("rank-0 faces must be the vertex singletons in order".into());
        }
        for k in 0..self.dim {
            for (i, face) in self.faces[k].iter().enumerate() {
                let above: Vec<usize> = (0..self.faces[k + 1].len())
                    .filter(|&j| is_subset(face, &self.faces[k + 1][j]))
                    .collect();
                if above != self.covers[k][i] {
                    return Err(format!("cover list wrong for rank {k} face {i}"));
                }
            }
        }
        // Every rank-k face must affinely span a k-flat.
        for k in 0..=self.dim {
            for face in &self.faces[k] {
                let pts: Vec<Vec<f64>> = face.iter().map(|&v| self.vertex_f64(v)).collect();
                let r = affine_rank(&pts);
                if r != k {
                    return Err(format!("face {face:?} spans a {r}-flat, expected {k}"));
                }
            }
        }
        Ok(())
    }

    /// Line-oriented text export: `dim`, `scales`, `vertices` header lines,
    /// exact rational coordinates, then per-rank `face k: ...` lines.
    pub fn export(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("dim {}\n", self.dim));
        let scales: Vec<String> = self.scales.iter().map(|&s| format_rat(s)).collect();
        out.push_str(&format!("scales {}\n", scales.join(" ")));
        out.push_str(&format!("vertices {}\n", self.vertices.len()));
        for v in &self.vertices {
            let coords: Vec<String> = v.iter().map(|&c| format_rat(c)).collect();
            out.push_str(&coords.join(" "));
            out.push('\n');
        }
        for k in 0..=self.dim {
            for face in &self.faces[k] {
                let ids: Vec<String> = face.iter().map(|i| i.to_string()).collect();
                out.push_str(&format!("face {k}: {}\n", ids.join(" ")));
            }
        }
        out
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    // Both sides sorted.
    let mut it = big.iter();
    'outer: for s in small {
        for b in it.by_ref() {
            if b == s {
                continue 'outer;
            }
            if b > s {
                return false;
            }
        }
        return false;
    }
    true
}

fn compute_covers(faces: &[Vec<Face>]) -> Vec<Vec<Vec<usize>>> {
    let mut covers = Vec::with_capacity(faces.len().saturating_sub(1));
    for k in 0..faces.len().saturating_sub(1) {
        let rank_covers: Vec<Vec<usize>> = faces[k]
            .iter()
            .map(|f| {
                (0..faces[k + 1].len())
                    .filter(|&j| is_subset(f, &faces[k + 1][j]))
                    .collect()
            })
            .collect();
        covers.push(rank_covers);
    }
    covers
}

/// Affine rank of a point set (dimension of the spanned flat), via float
/// Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)]
fn affine_rank(points: &[Vec<f64>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let dim = points[0].len();
    let mut rows: Vec<Vec<f64>> = points[1..]
        .iter()
        .map(|p| (0..dim).map(|j| p[j] - points[0][j]).collect())
        .collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len())
            .max_by(|&a, &b| rows[a][col].abs().partial_cmp(&rows[b][col].abs()).unwrap())
        else {
            break;
        };
        if rows[pivot][col].abs() < 1e-9 {
            continue;
        }
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            let factor = rows[r][col] / rows[rank][col];
            for c in col..dim {
                rows[r][c] -= factor * rows[rank][c];
            }
        }
        rank += 1;
    }
    rank
}

/// Closed-form f-vector of the n-cube boundary: `f_k = C(n,k) * 2^(n-k)`.
pub fn cube_f_vector(n: usize) -> FVector {
    FVector((0..n).map(|k| binomial(n, k) * (1u64 << (n - k))).collect())
}

/// Closed-form f-vector of the n-simplex boundary: `f_k = C(n+1, k+1)`.
pub fn simplex_f_vector(n: usize) -> FVector {
    FVector((0..n).map(|k| binomial(n + 1, k + 1)).collect())
}

/// Unit n-cube on the vertex set {0,1}^n, 1 <= n <= 5. Rank-k faces are the
/// axis-aligned subcubes obtained by fixing n-k coordinates.
pub fn build_cube(n: usize) -> Result<FaceLattice, PolytopeError> {
    if !(1..=5).contains(&n) {
        return Err(PolytopeError::UnsupportedDimension(n, "1..=5"));
    }
    let vcount = 1usize << n;
    let vertices: Vec<Vec<Rat>> = (0..vcount)
        .map(|v| (0..n).map(|j| rat(((v >> j) & 1) as i64, 1)).collect())
        .collect();

    let mut faces: Vec<Vec<Face>> = vec![Vec::new(); n + 1];
    // Iterate subsets of axes to fix, in ascending bitmask order, then the
    // fixed values in ascending binary order: a canonical face ordering.
    for fixed in 0..(1usize << n) {
        let k = n - fixed.count_ones() as usize;
        let fixed_axes: Vec<usize> = (0..n).filter(|j| fixed >> j & 1 == 1).collect();
        let assignments = 1usize << fixed_axes.len();
        for a in 0..assignments {
            let mut members: Face = (0..vcount)
                .filter(|&v| {
                    fixed_axes
                        .iter()
                        .enumerate()
                        .all(|(pos, &axis)| (v >> axis) & 1 == (a >> pos) & 1)
                })
                .collect();
            members.sort_unstable();
            faces[k].push(members);
        }
    }
    for rank in faces.iter_mut() {
        rank.sort_unstable();
    }
    Ok(FaceLattice::assemble(
        n,
        LatticeKind::Cube,
        vec![rat(1, 1); n],
        vertices,
        faces,
    ))
}

/// Regular unit-edge n-simplex, 1 <= n <= 5, via the recursive lift
/// construction: vertex k has coefficient 1 on axes j < k and k+1 on axis k,
/// over scales `1/(2j(j+1))`. Rank-k faces are all (k+1)-subsets.
pub fn build_simplex(n: usize) -> Result<FaceLattice, PolytopeError> {
    if !(1..=5).contains(&n) {
        return Err(PolytopeError::UnsupportedDimension(n, "1..=5"));
    }
    let scales: Vec<Rat> = (1..=n as i64).map(|j| rat(1, 2 * j * (j + 1))).collect();
    let vertices: Vec<Vec<Rat>> = (0..=n)
        .map(|k| {
            (1..=n)
                .map(|j| {
                    if j < k {
                        rat(1, 1)
                    } else if j == k {
                        rat(k as i64 + 1, 1)
                    } else {
                        rat(0, 1)
                    }
                })
                .collect()
        })
        .collect();

    let mut faces: Vec<Vec<Face>> = vec![Vec::new(); n + 1];
    for (k, rank) in faces.iter_mut().enumerate() {
        *rank = subsets_of_size(n + 1, k + 1);
    }
    Ok(FaceLattice::assemble(
        n,
        LatticeKind::Simplex,
        scales,
        vertices,
        faces,
    ))
}

/// All size-k subsets of {0..n-1} in lexicographic order.
fn subsets_of_size(n: usize, k: usize) -> Vec<Face> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Face>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Cartesian product polytope. Nonempty faces are products of nonempty
/// faces; the boundary f-vector is the convolution of the extended
/// f-vectors minus the top term.
pub fn cartesian_product(p: &FaceLattice, q: &FaceLattice) -> Result<FaceLattice, PolytopeError> {
    let dim = p.dim + q.dim;
    if dim > 5 {
        return Err(PolytopeError::DimensionCeiling(dim));
    }
    let qn = q.vertices.len();
    let vid = |i: usize, j: usize| i * qn + j;

    let mut vertices = Vec::with_capacity(p.vertices.len() * qn);
    for pv in &p.vertices {
        for qv in &q.vertices {
            let mut coords = pv.clone();
            coords.extend_from_slice(qv);
            vertices.push(coords);
        }
    }
    let mut scales = p.scales.clone();
    scales.extend_from_slice(&q.scales);

    let mut faces: Vec<Vec<Face>> = vec![Vec::new(); dim + 1];
    for a in 0..=p.dim {
        for b in 0..=q.dim {
            for fp in &p.faces[a] {
                for fq in &q.faces[b] {
                    let mut members: Face = fp
                        .iter()
                        .flat_map(|&i| fq.iter().map(move |&j| vid(i, j)))
                        .collect();
                    members.sort_unstable();
                    faces[a + b].push(members);
                }
            }
        }
    }
    for rank in faces.iter_mut() {
        rank.sort_unstable();
    }
    Ok(FaceLattice::assemble(
        dim,
        LatticeKind::Product,
        scales,
        vertices,
        faces,
    ))
}

/// Vertex truncation at parameter `t` in (0, 1/2]: each vertex is cut by a
/// hyperplane through the points at fraction `t` along its incident edges.
/// Faces are assembled combinatorially: a truncation facet per original
/// vertex plus the shrunken original faces. Truncations that would merge
/// vertices (t = 1/2) are rejected.
#[allow(clippy::needless_range_loop)]
pub fn truncate_vertices(p: &FaceLattice, t: Rat) -> Result<FaceLattice, PolytopeError> {
    if !matches!(p.kind, LatticeKind::Cube | LatticeKind::Simplex) {
        return Err(PolytopeError::UnsupportedFamily(p.kind));
    }
    if p.dim < 2 || p.dim > 4 {
        return Err(PolytopeError::UnsupportedDimension(p.dim, "2..=4"));
    }
    if t <= rat(0, 1) || t > rat(1, 2) {
        return Err(PolytopeError::BadTruncationParameter(format_rat(t)));
    }

    let edges = &p.faces[1];
    // New vertex (v, e) = v + t*(w - v); ids are 2e + (0 for the smaller
    // endpoint, 1 for the larger).
    let new_id = |v: usize, e: usize| -> usize {
        let ends = &edges[e];
        if ends[0] == v {
            2 * e
        } else {
            2 * e + 1
        }
    };
    let mut vertices: Vec<Vec<Rat>> = Vec::with_capacity(2 * edges.len());
    for ends in edges {
        for (v, w) in [(ends[0], ends[1]), (ends[1], ends[0])] {
            let coords: Vec<Rat> = p.vertices[v]
                .iter()
                .zip(&p.vertices[w])
                .map(|(&cv, &cw)| cv + t * (cw - cv))
                .collect();
            vertices.push(coords);
        }
    }
    let distinct: BTreeSet<&Vec<Rat>> = vertices.iter().collect();
    if distinct.len() != vertices.len() {
        return Err(PolytopeError::DegenerateTruncation(format_rat(t)));
    }

    let n = p.dim;
    let mut faces: Vec<Vec<Face>> = vec![Vec::new(); n + 1];
    faces[0] = (0..vertices.len()).map(|i| vec![i]).collect();
    // (a) each original rank-k face, k >= 1, shrinks to the pairs (v, e)
    //     with v in F and e inside F.
    for k in 1..=n {
        for face in &p.faces[k] {
            let mut members: Face = Vec::new();
            for (e, ends) in edges.iter().enumerate() {
                if is_subset(ends, face) {
                    members.push(new_id(ends[0], e));
                    members.push(new_id(ends[1], e));
                }
            }
            members.sort_unstable();
            faces[k].push(members);
        }
    }
    // (b) vertex-figure faces: for each original vertex v and each rank-(k+1)
    //     face F containing v, the pairs (v, e) with e inside F.
    for k in 1..n {
        for v in 0..p.vertices.len() {
            for face in &p.faces[k + 1] {
                if face.binary_search(&v).is_err() {
                    continue;
                }
                let mut members: Face = edges
                    .iter()
                    .enumerate()
                    .filter(|(_, ends)| ends.contains(&v) && is_subset(ends, face))
                    .map(|(e, _)| new_id(v, e))
                    .collect();
                members.sort_unstable();
                faces[k].push(members);
            }
        }
    }
    for rank in faces.iter_mut() {
        rank.sort_unstable();
    }
    Ok(FaceLattice::assemble(
        n,
        LatticeKind::Truncated,
        p.scales.clone(),
        vertices,
        faces,
    ))
}

/// Orthoscheme corner of the n-cube: the simplex spanned by the origin and
/// the n unit basis points (isosceles right triangle for n = 2, the
/// trirectangular tetrahedron for n = 3).
pub fn cube_corner(n: usize) -> Result<FaceLattice, PolytopeError> {
    if !(2..=4).contains(&n) {
        return Err(PolytopeError::UnsupportedDimension(n, "2..=4"));
    }
    let mut vertices: Vec<Vec<Rat>> = vec![vec![rat(0, 1); n]];
    for j in 0..n {
        let mut v = vec![rat(0, 1); n];
        v[j] = rat(1, 1);
        vertices.push(v);
    }
    let mut faces: Vec<Vec<Face>> = vec![Vec::new(); n + 1];
    for (k, rank) in faces.iter_mut().enumerate() {
        *rank = subsets_of_size(n + 1, k + 1);
    }
    Ok(FaceLattice::assemble(
        n,
        LatticeKind::CubeCorner,
        vec![rat(1, 1); n],
        vertices,
        faces,
    ))
}

/// Alternating boundary sum `sum_k (-1)^k f_k`; equals `1 - (-1)^n` for
/// every convex n-polytope.
pub fn euler_boundary(p: &FaceLattice) -> i64 {
    (0..p.dim)
        .map(|k| {
            let c = p.faces[k].len() as i64;
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_f_vectors_match_closed_form_and_known_values() {
        assert_eq!(build_cube(1).unwrap().f_vector(), FVector(vec![2]));
        assert_eq!(
            build_cube(4).unwrap().f_vector(),
            FVector(vec![16, 32, 24, 8])
        );
        assert_eq!(
            build_cube(5).unwrap().f_vector(),
            FVector(vec![32, 80, 80, 40, 10])
        );
        for n in 1..=5 {
            assert_eq!(build_cube(n).unwrap().f_vector(), cube_f_vector(n));
        }
    }

    #[test]
    fn simplex_f_vectors_match_closed_form_and_known_values() {
        assert_eq!(build_simplex(2).unwrap().f_vector(), FVector(vec![3, 3]));
        assert_eq!(
            build_simplex(4).unwrap().f_vector(),
            FVector(vec![5, 10, 10, 5])
        );
        assert_eq!(
            build_simplex(5).unwrap().f_vector(),
            FVector(vec![6, 15, 20, 15, 6])
        );
        for n in 1..=5 {
            assert_eq!(build_simplex(n).unwrap().f_vector(), simplex_f_vector(n));
        }
    }

    #[test]
    fn out_of_range_dimensions_are_rejected() {
        assert!(matches!(
            build_cube(0),
            Err(PolytopeError::UnsupportedDimension(0, _))
        ));
        assert!(matches!(
            build_cube(6),
            Err(PolytopeError::UnsupportedDimension(6, _))
        ));
        assert!(matches!(
            build_simplex(9),
            Err(PolytopeError::UnsupportedDimension(9, _))
        ));
        assert!(matches!(
            cube_corner(5),
            Err(PolytopeError::UnsupportedDimension(5, _))
        ));
    }

    #[test]
    fn simplex_edges_have_exact_unit_length() {
        for n in 1..=5 {
            let s = build_simplex(n).unwrap();
            for e in s.faces(1) {
                assert_eq!(
                    s.squared_distance(e[0], e[1]),
                    rat(1, 1),
                    "n={n} edge {e:?}"
                );
            }
        }
    }

    #[test]
    fn lattices_validate() {
        for n in 1..=5 {
            build_cube(n).unwrap().validate().unwrap();
            build_simplex(n).unwrap().validate().unwrap();
        }
        for n in 2..=4 {
            cube_corner(n).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn euler_boundary_alternates_by_parity() {
        assert_eq!(euler_boundary(&build_cube(2).unwrap()), 0);
        assert_eq!(euler_boundary(&build_cube(3).unwrap()), 2);
        assert_eq!(euler_boundary(&build_cube(5).unwrap()), 2);
        for n in 1..=5 {
            let expect = 1 - if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(euler_boundary(&build_cube(n).unwrap()), expect);
            assert_eq!(euler_boundary(&build_simplex(n).unwrap()), expect);
        }
    }

    #[test]
    fn face_in_exactly_dim_minus_k_facets() {
        for n in 2..=5 {
            for lattice in [build_cube(n).unwrap(), build_simplex(n).unwrap()] {
                for k in 0..n - 1 {
                    for i in 0..lattice.faces(k).len() {
                        assert_eq!(lattice.facets_containing(k, i), n - k);
                    }
                }
            }
        }
    }

    #[test]
    fn products_match_convolution_of_extended_f_vectors() {
        let seg = build_cube(1).unwrap();
        let tri = build_simplex(2).unwrap();

        let square = cartesian_product(&seg, &seg).unwrap();
        assert_eq!(square.f_vector(), FVector(vec![4, 4]));

        let prism = cartesian_product(&tri, &seg).unwrap();
        assert_eq!(prism.f_vector(), FVector(vec![6, 9, 5]));
        prism.validate().unwrap();

        let duo33 = cartesian_product(&tri, &tri).unwrap();
        assert_eq!(duo33.f_vector(), FVector(vec![9, 18, 15, 6]));
        duo33.validate().unwrap();

        // Independent route: convolution of extended f-vectors.
        for (p, q) in [(&tri, &seg), (&tri, &tri)] {
            let prod = cartesian_product(p, q).unwrap();
            let ext = |l: &FaceLattice| -> Vec<u64> {
                (0..=l.dim()).map(|k| l.faces(k).len() as u64).collect()
            };
            let (ep, eq) = (ext(p), ext(q));
            for k in 0..prod.dim() {
                let conv: u64 = (0..=k)
                    .map(|a| {
                        let b = k - a;
                        if a < ep.len() && b < eq.len() {
                            ep[a] * eq[b]
                        } else {
                            0
                        }
                    })
                    .sum();
                assert_eq!(prod.faces(k).len() as u64, conv);
            }
        }
    }

    #[test]
    fn product_dimension_ceiling() {
        let cube3 = build_cube(3).unwrap();
        assert!(matches!(
            cartesian_product(&cube3, &cube3),
            Err(PolytopeError::DimensionCeiling(6))
        ));
    }

    #[test]
    fn product_commutes_up_to_relabeling() {
        let tri = build_simplex(2).unwrap();
        let seg = build_cube(1).unwrap();
        let pq = cartesian_product(&tri, &seg).unwrap();
        let qp = cartesian_product(&seg, &tri).unwrap();
        assert_eq!(pq.f_vector(), qp.f_vector());
        // Explicit bijection (i,j) -> (j,i) on vertex ids.
        let (np, nq) = (tri.vertices().len(), seg.vertices().len());
        let relabel = |v: usize| -> usize {
            let (i, j) = (v / nq, v % nq);
            j * np + i
        };
        for k in 0..=pq.dim() {
            let mut mapped: Vec<Face> = pq
                .faces(k)
                .iter()
                .map(|f| {
                    let mut m: Face = f.iter().map(|&v| relabel(v)).collect();
                    m.sort_unstable();
                    m
                })
                .collect();
            mapped.sort_unstable();
            assert_eq!(&mapped, qp.faces(k));
        }
    }

    #[test]
    fn truncation_combinatorics() {
        let square = build_cube(2).unwrap();
        let octagon = truncate_vertices(&square, rat(1, 4)).unwrap();
        assert_eq!(octagon.f_vector(), FVector(vec![8, 8]));
        octagon.validate().unwrap();

        let cube3 = build_cube(3).unwrap();
        let tc = truncate_vertices(&cube3, rat(1, 4)).unwrap();
        assert_eq!(tc.f_vector(), FVector(vec![24, 36, 14]));
        tc.validate().unwrap();

        let tri = build_simplex(2).unwrap();
        let hexagon = truncate_vertices(&tri, rat(1, 3)).unwrap();
        assert_eq!(hexagon.f_vector(), FVector(vec![6, 6]));
        // Regular hexagon: all edges share one exact squared length.
        let sq: Vec<Rat> = hexagon
            .faces(1)
            .iter()
            .map(|e| hexagon.squared_distance(e[0], e[1]))
            .collect();
        assert!(sq.iter().all(|&d| d == sq[0]));
        assert_eq!(sq[0], rat(1, 9));
    }

    #[test]
    fn truncation_vertex_count_is_edge_incidence_sum() {
        for lattice in [build_cube(3).unwrap(), build_simplex(3).unwrap()] {
            let t = truncate_vertices(&lattice, rat(1, 4)).unwrap();
            let edges_per_vertex = lattice.faces(1).len() * 2 / lattice.vertices().len();
            assert_eq!(
                t.vertices().len(),
                lattice.vertices().len() * edges_per_vertex
            );
        }
    }

    #[test]
    fn truncation_rejects_bad_parameters() {
        let square = build_cube(2).unwrap();
        assert!(matches!(
            truncate_vertices(&square, rat(3, 4)),
            Err(PolytopeError::BadTruncationParameter(_))
        ));
        assert!(matches!(
            truncate_vertices(&square, rat(0, 1)),
            Err(PolytopeError::BadTruncationParameter(_))
        ));
        // t = 1/2 merges edge midpoints: the rectified degenerate case.
        assert!(matches!(
            truncate_vertices(&square, rat(1, 2)),
            Err(PolytopeError::DegenerateTruncation(_))
        ));
        let corner = cube_corner(3).unwrap();
        assert!(matches!(
            truncate_vertices(&corner, rat(1, 4)),
            Err(PolytopeError::UnsupportedFamily(LatticeKind::CubeCorner))
        ));
    }

    #[test]
    fn cube_corner_shapes() {
        let c2 = cube_corner(2).unwrap();
        assert_eq!(c2.f_vector(), FVector(vec![3, 3]));
        let coords: Vec<Vec<f64>> = (0..3).map(|v| c2.vertex_f64(v)).collect();
        assert_eq!(coords[0], vec![0.0, 0.0]);
        assert_eq!(coords[1], vec![1.0, 0.0]);
        assert_eq!(coords[2], vec![0.0, 1.0]);

        assert_eq!(cube_corner(3).unwrap().f_vector(), FVector(vec![4, 6, 4]));
        assert_eq!(
            cube_corner(4).unwrap().f_vector(),
            FVector(vec![5, 10, 10, 5])
        );
    }

    #[test]
    fn export_is_stable_and_exact() {
        let seg = build_cube(1).unwrap();
        assert_eq!(
            seg.export(),
            "dim 1\nscales 1/1\nvertices 2\n0/1\n1/1\nface 0: 0\nface 0: 1\nface 1: 0 1\n"
        );
        let s3 = build_simplex(3).unwrap();
        assert!(s3.export().contains("scales 1/4 1/12 1/24"));
    }
}
