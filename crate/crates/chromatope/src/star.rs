//! Star polygons as accumulated fractional colorings: p fractional `1/n`
//! segments folded along the edges of a unit regular p-gon, each lifting
//! inward to the region that reaches the feature straight across the
//! polygon. For odd p the segment is gradated, so it lifts to the tent
//! triangle whose apex is the opposite vertex; for even p the opposite
//! feature is a whole parallel edge, so the segment is colored uniformly
//! and lifts to the full band between the two edges (in the edge frame, a
//! rectangle whose far side's midpoint is the opposite edge midpoint).
//! Where at least n lifts stack, the full-weight region is the filled
//! {p/q} star; the union of all lifts refills the polygon itself.
//!
//! An independent rasterizer for filled {p/q} stars (nonzero-winding fill
//! of the step-q polyline, union of components when gcd(p,q) > 1) serves
//! as the verification oracle.

use std::f64::consts::PI;

use thiserror::Error;

use crate::chroma::{simplex_gradient, solid_coloring, BaseBox, GradientDomain, PlacedField};

#[derive(Debug, Error, PartialEq)]
pub enum StarError {
    #[error("unsupported star spec p={p} q={q} n={n}; supported: 5/2@3, 6/2@4, 7/3@3, 8/3@4")]
    UnsupportedSpec { p: u32, q: u32, n: u32 },
}

/// One of the four supported star constructions: a {p/q} star from p
/// fractional layers of weight 1/n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarSpec {
    pub p: u32,
    pub q: u32,
    pub n: u32,
}

/// The four (p, q, n) triples the construction is specified for.
pub const SUPPORTED_SPECS: [StarSpec; 4] = [
    StarSpec { p: 5, q: 2, n: 3 },
    StarSpec { p: 6, q: 2, n: 4 },
    StarSpec { p: 7, q: 3, n: 3 },
    StarSpec { p: 8, q: 3, n: 4 },
];

impl StarSpec {
    pub fn new(p: u32, q: u32, n: u32) -> Result<Self, StarError> {
        let spec = StarSpec { p, q, n };
        if SUPPORTED_SPECS.contains(&spec) {
            Ok(spec)
        } else {
            Err(StarError::UnsupportedSpec { p, q, n })
        }
    }

    /// Color-bar maximum: the layer lift's height over a unit edge. Odd p
    /// reaches the opposite vertex at distance
    /// `(1 + cos(pi/p)) / (2 sin(pi/p))`; even p reaches the opposite edge
    /// at distance `cot(pi/p)`.
    pub fn vmax(&self) -> f64 {
        let a = PI / self.p as f64;
        if self.p % 2 == 1 {
            (1.0 + a.cos()) / (2.0 * a.sin())
        } else {
            a.cos() / a.sin()
        }
    }

    /// Circumradius of the unit-edge p-gon.
    pub fn circumradius(&self) -> f64 {
        1.0 / (2.0 * (PI / self.p as f64).sin())
    }
}

/// Vertices of the unit-edge regular p-gon, counterclockwise with vertex 0
/// at the top.
pub fn polygon_vertices(p: u32) -> Vec<[f64; 2]> {
    let r = 1.0 / (2.0 * (PI / p as f64).sin());
    (0..p)
        .map(|k| {
            let theta = PI / 2.0 + 2.0 * PI * k as f64 / p as f64;
            [r * theta.cos(), r * theta.sin()]
        })
        .collect()
}

/// The p fractional layers: a `1/n` unit segment per polygon edge,
/// lifting inward to height `vmax`. Odd p uses a gradated segment (tent
/// profile, so the lift is the triangle with apex at the opposite
/// vertex); even p uses a uniformly colored segment (flat profile, so the
/// lift is the band ending at the parallel opposite edge).
pub fn star_layers(spec: &StarSpec) -> Result<Vec<PlacedField>, StarError> {
    StarSpec::new(spec.p, spec.q, spec.n)?;
    let verts = polygon_vertices(spec.p);
    let vmax = spec.vmax();
    let field = if spec.p % 2 == 1 {
        simplex_gradient(
            &GradientDomain::Segment { a: 0.0, b: 1.0 },
            vmax,
            vmax,
            1025,
        )
        .expect("peak equals vmax")
    } else {
        solid_coloring(BaseBox::segment(0.0, 1.0), vmax, vmax, 1025).expect("value equals vmax")
    }
    .with_weight(spec.n);
    let p = spec.p as usize;
    Ok((0..p)
        .map(|k| {
            let (a, b) = (verts[k], verts[(k + 1) % p]);
            let mut tangent = [b[0] - a[0], b[1] - a[1]];
            let len = (tangent[0] * tangent[0] + tangent[1] * tangent[1]).sqrt();
            tangent = [tangent[0] / len, tangent[1] / len];
            // Counterclockwise winding: the interior lies left of a -> b.
            let normal = [-tangent[1], tangent[0]];
            PlacedField {
                field: field.clone(),
                origin: a,
                tangent,
                normal,
            }
        })
        .collect())
}

/// A square per-pixel layer-count raster centered on the polygon. Pixel
/// (row, col) uses image convention: row 0 at the top.
#[derive(Debug, Clone)]
pub struct CoverageRaster {
    pub resolution: usize,
    /// Half-width of the square frame; the frame is [-half, half]^2.
    pub half_width: f64,
    pub counts: Vec<u16>,
}

impl CoverageRaster {
    pub fn pixel_center(&self, row: usize, col: usize) -> [f64; 2] {
        let step = 2.0 * self.half_width / self.resolution as f64;
        [
            -self.half_width + (col as f64 + 0.5) * step,
            self.half_width - (row as f64 + 0.5) * step,
        ]
    }

    /// Pixel indices containing a point, if inside the frame.
    pub fn locate(&self, p: [f64; 2]) -> Option<(usize, usize)> {
        let step = 2.0 * self.half_width / self.resolution as f64;
        let col = ((p[0] + self.half_width) / step).floor();
        let row = ((self.half_width - p[1]) / step).floor();
        if col < 0.0 || row < 0.0 || col >= self.resolution as f64 || row >= self.resolution as f64
        {
            return None;
        }
        Some((row as usize, col as usize))
    }

    pub fn count_at(&self, row: usize, col: usize) -> u16 {
        self.counts[row * self.resolution + col]
    }
}

/// Frame half-width used for all star rasters of a spec: 10% beyond the
/// circumradius.
pub fn frame_half_width(spec: &StarSpec) -> f64 {
    spec.circumradius() * 1.1
}

/// Counts, per pixel center, how many layer lifts cover it. Boundary
/// membership is closed (edges count as inside); no anti-aliasing.
pub fn coverage_raster(layers: &[PlacedField], resolution: usize) -> CoverageRaster {
    // Frame the raster 10% beyond the lifts' extreme points: the triangle
    // corners for a tent profile, the band corners for a flat one.
    let radius = layers
        .iter()
        .flat_map(|l| {
            let span = l.span();
            let values = l.field.values();
            let peak = values.iter().cloned().fold(0.0f64, f64::max);
            let flat = values.iter().all(|&v| v == peak);
            let a = l.origin;
            let b = [a[0] + span * l.tangent[0], a[1] + span * l.tangent[1]];
            let lift = |v: [f64; 2]| [v[0] + peak * l.normal[0], v[1] + peak * l.normal[1]];
            let mid = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
            if flat {
                vec![a, b, lift(a), lift(b)]
            } else {
                vec![a, b, lift(mid)]
            }
        })
        .map(|v| v[0].abs().max(v[1].abs()))
        .fold(0.0f64, f64::max);
    let half_width = radius * 1.1;
    let mut raster = CoverageRaster {
        resolution,
        half_width,
        counts: vec![0; resolution * resolution],
    };
    for row in 0..resolution {
        for col in 0..resolution {
            let p = raster.pixel_center(row, col);
            let count = layers.iter().filter(|l| l.covers(p)).count();
            raster.counts[row * resolution + col] = count as u16;
        }
    }
    raster
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Pixels reaching full weight: coverage of at least n layers.
pub fn star_threshold(coverage: &CoverageRaster, n: u32) -> Vec<bool> {
    coverage.counts.iter().map(|&c| c as u32 >= n).collect()
}

/// Direct rasterization of the filled {p/q} star on the same p-gon
/// vertices and frame: nonzero-winding fill of the step-q polyline. When
/// gcd(p, q) > 1 the star is a compound and the fill is the union of its
/// gcd components (the hexagram's two overlapping triangles).
pub fn reference_star(p: u32, q: u32, resolution: usize, half_width: f64) -> Vec<bool> {
    let verts = polygon_vertices(p);
    let g = gcd(p, q) as usize;
    let polylines: Vec<Vec<[f64; 2]>> = (0..g)
        .map(|offset| {
            let len = p as usize / g;
            (0..len)
                .map(|i| verts[(offset + i * q as usize) % p as usize])
                .collect()
        })
        .collect();
    let raster = CoverageRaster {
        resolution,
        half_width,
        counts: Vec::new(),
    };
    let mut out = vec![false; resolution * resolution];
    for row in 0..resolution {
        for col in 0..resolution {
            let pt = raster.pixel_center(row, col);
            let covered = polylines.iter().any(|poly| winding_number(poly, pt) != 0);
            out[row * resolution + col] = covered;
        }
    }
    out
}

/// Filled convex p-gon raster on the shared frame: inside all edge
/// half-planes of the counterclockwise boundary.
pub fn filled_polygon_raster(p: u32, resolution: usize, half_width: f64) -> Vec<bool> {
    let verts = polygon_vertices(p);
    let raster = CoverageRaster {
        resolution,
        half_width,
        counts: Vec::new(),
    };
    let mut out = vec![false; resolution * resolution];
    for row in 0..resolution {
        for col in 0..resolution {
            let pt = raster.pixel_center(row, col);
            let inside =
                (0..p as usize).all(|k| cross(verts[k], verts[(k + 1) % p as usize], pt) >= 0.0);
            out[row * resolution + col] = inside;
        }
    }
    out
}

/// Standard nonzero winding number of a closed polyline around a point.
fn winding_number(poly: &[[f64; 2]], p: [f64; 2]) -> i32 {
    let mut w = 0;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        if a[1] <= p[1] {
            if b[1] > p[1] && cross(a, b, p) > 0.0 {
                w += 1;
            }
        } else if b[1] <= p[1] && cross(a, b, p) < 0.0 {
            w -= 1;
        }
    }
    w
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Fraction of positions where two boolean rasters agree.
pub fn agreement(a: &[bool], b: &[bool]) -> f64 {
    assert_eq!(a.len(), b.len());
    let same = a.iter().zip(b).filter(|(x, y)| x == y).count();
    same as f64 / a.len() as f64
}

/// Fraction of pixels whose rastered coverage count equals the count of
/// the same layers at the point rotated by one p-th of a turn. Counting
/// at the exact rotated point (rather than resampling the raster) keeps
/// pixel-grid aliasing out of the comparison; the residual disagreements
/// are pixel centers whose rotated image lands on the other side of a
/// lift boundary by floating-point slack.
pub fn rotation_agreement(coverage: &CoverageRaster, layers: &[PlacedField], p: u32) -> f64 {
    let angle = 2.0 * PI / p as f64;
    let (sin, cos) = angle.sin_cos();
    let mut same = 0usize;
    for row in 0..coverage.resolution {
        for col in 0..coverage.resolution {
            let pt = coverage.pixel_center(row, col);
            let rotated = [cos * pt[0] - sin * pt[1], sin * pt[0] + cos * pt[1]];
            let count = layers.iter().filter(|l| l.covers(rotated)).count();
            if coverage.count_at(row, col) == count as u16 {
                same += 1;
            }
        }
    }
    same as f64 / coverage.counts.len() as f64
}
