//! Fiber extraction: collapsing one coordinate of a convex body into a
//! color representation over the remaining base coordinates.
//!
//! The body arrives as a list of half-spaces `a . x <= b`. Fixing a base
//! point turns each half-space into a one-variable bound on the dropped
//! coordinate `t`, so the fiber is an interval: its upper end becomes the
//! colored field `hi`, its lower end (when the body floats above the base
//! hyperplane) the uncoloring `lo`. Fibers obey the nonnegative half-line
//! convention: `t >= 0` is implicit, and bodies must be bounded above.

use crate::chroma::field::{BaseBox, ColorField, ColorRep, FieldSign};
use crate::chroma::ChromaError;
use crate::polytope::FaceLattice;

/// A convex body given by half-spaces plus a known bounding box (used to
/// frame the base grid).
#[derive(Debug, Clone)]
pub struct ConvexBody {
    pub dim: usize,
    /// Constraints `a . x <= b` with unit-length `a`.
    pub half_spaces: Vec<(Vec<f64>, f64)>,
    /// Bounding box (min, max) per axis.
    pub bounds: (Vec<f64>, Vec<f64>),
}

impl ConvexBody {
    /// Builds the half-space description of a face lattice: one supporting
    /// hyperplane per facet, oriented away from the vertex centroid.
    pub fn from_lattice(p: &FaceLattice) -> Self {
        let dim = p.dim();
        let verts: Vec<Vec<f64>> = (0..p.vertices().len()).map(|v| p.vertex_f64(v)).collect();
        let centroid: Vec<f64> = (0..dim)
            .map(|j| verts.iter().map(|v| v[j]).sum::<f64>() / verts.len() as f64)
            .collect();
        let half_spaces: Vec<(Vec<f64>, f64)> = p
            .faces(dim - 1)
            .iter()
            .map(|facet| {
                let pts: Vec<&Vec<f64>> = facet.iter().map(|&v| &verts[v]).collect();
                let mut a = hyperplane_normal(&pts);
                let mut b: f64 = a.iter().zip(pts[0]).map(|(ai, xi)| ai * xi).sum();
                let side: f64 = a.iter().zip(&centroid).map(|(ai, xi)| ai * xi).sum();
                if side > b {
                    for ai in &mut a {
                        *ai = -*ai;
                    }
                    b = -b;
                }
                (a, b)
            })
            .collect();
        let bounds = (
            (0..dim)
                .map(|j| verts.iter().map(|v| v[j]).fold(f64::INFINITY, f64::min))
                .collect(),
            (0..dim)
                .map(|j| verts.iter().map(|v| v[j]).fold(f64::NEG_INFINITY, f64::max))
                .collect(),
        );
        ConvexBody {
            dim,
            half_spaces,
            bounds,
        }
    }

    /// Half-space membership with a small slack.
    pub fn contains(&self, x: &[f64]) -> bool {
        self.half_spaces.iter().all(|(a, b)| {
            let dot: f64 = a.iter().zip(x).map(|(ai, xi)| ai * xi).sum();
            dot <= b + 1e-9
        })
    }
}

/// Unit normal of the hyperplane through the given points: the nullspace
/// direction of the difference matrix, by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
fn hyperplane_normal(points: &[&Vec<f64>]) -> Vec<f64> {
    let d = points[0].len();
    let mut rows: Vec<Vec<f64>> = points[1..]
        .iter()
        .map(|p| (0..d).map(|j| p[j] - points[0][j]).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for col in 0..d {
        let Some(best) = (r..rows.len())
            .max_by(|&i, &j| rows[i][col].abs().partial_cmp(&rows[j][col].abs()).unwrap())
        else {
            break;
        };
        if rows[best][col].abs() < 1e-9 {
            continue;
        }
        rows.swap(r, best);
        for rr in r + 1..rows.len() {
            let f = rows[rr][col] / rows[r][col];
            for c in col..d {
                rows[rr][c] -= f * rows[r][c];
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free = (0..d)
        .find(|c| !pivot_cols.contains(c))
        .expect("facet points span a hyperplane");
    let mut a = vec![0.0; d];
    a[free] = 1.0;
    for &(row, col) in pivots.iter().rev() {
        let s: f64 = (col + 1..d).map(|c| rows[row][c] * a[c]).sum();
        a[col] = -s / rows[row][col];
    }
    let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    a.iter().map(|x| x / norm).collect()
}

/// Collapses `axis` of the body into hi/lo envelope fields over the
/// remaining coordinates, sampled on `nodes` grid points per base axis.
/// Empty fibers store `hi = lo = 0`; a feasible fiber with no upper bound
/// is an error.
pub fn fiber_rep(body: &ConvexBody, axis: usize, nodes: usize) -> Result<ColorRep, ChromaError> {
    if !(1..=4).contains(&body.dim) {
        return Err(ChromaError::UnsupportedBodyDimension(body.dim));
    }
    if axis >= body.dim {
        return Err(ChromaError::AxisOutOfRange {
            axis,
            dim: body.dim,
        });
    }
    if nodes < 2 {
        return Err(ChromaError::DegenerateGrid(nodes));
    }
    let base_axes: Vec<usize> = (0..body.dim).filter(|&j| j != axis).collect();
    let base = BaseBox {
        min: base_axes.iter().map(|&j| body.bounds.0[j]).collect(),
        max: base_axes.iter().map(|&j| body.bounds.1[j]).collect(),
    };
    let grid: Vec<usize> = vec![nodes; base.dim()];
    let count: usize = grid.iter().product::<usize>().max(1);

    let mut his = vec![0.0; count];
    let mut los = vec![0.0; count];
    let mut idx = vec![0usize; base.dim()];
    for flat in 0..count {
        let x: Vec<f64> = idx
            .iter()
            .zip(0..base.dim())
            .map(|(&i, j)| {
                base.min[j] + (base.max[j] - base.min[j]) * i as f64 / (nodes - 1) as f64
            })
            .collect();
        let mut lo = 0.0f64;
        let mut hi = f64::INFINITY;
        let mut feasible = true;
        for (a, b) in &body.half_spaces {
            let coef = a[axis];
            let rest: f64 = base_axes.iter().zip(&x).map(|(&j, &xj)| a[j] * xj).sum();
            if coef.abs() < 1e-12 {
                if rest > b + 1e-9 {
                    feasible = false;
                    break;
                }
            } else if coef > 0.0 {
                hi = hi.min((b - rest) / coef);
            } else {
                lo = lo.max((b - rest) / coef);
            }
        }
        if feasible && hi == f64::INFINITY {
            return Err(ChromaError::UnboundedFiber);
        }
        if feasible && hi >= lo - 1e-9 {
            his[flat] = hi.max(0.0);
            los[flat] = lo.min(his[flat]);
        }
        // Advance the multi-index, last axis fastest.
        for j in (0..base.dim()).rev() {
            idx[j] += 1;
            if idx[j] < nodes {
                break;
            }
            idx[j] = 0;
        }
    }
    let vmax = his.iter().cloned().fold(0.0f64, f64::max).max(1e-9);
    let hi_field = ColorField::from_samples(base.clone(), grid.clone(), his, vmax)?;
    let lo_field = ColorField::from_samples(base, grid, los, vmax)?.with_sign(FieldSign::Uncolor);
    ColorRep::from_parts(hi_field, lo_field)
}
