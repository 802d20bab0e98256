//! Folding overlays: 1D color fields placed in the plane, each lifting to
//! the region between its base segment and its height profile, with
//! fractional weights that must stack back to one.
//!
//! A `1/n` field contributes weight `1/n` wherever its lifted region
//! covers a point; the accumulated field keeps the total per raster node,
//! and the represented set is everywhere the total reaches 1 (within a
//! fixed epsilon). Folding the same `1/3` segment along the three edges of
//! an equilateral triangle therefore represents exactly the triangle,
//! while three `1/5` copies represent nothing at all.

use crate::chroma::field::{BaseBox, ColorField};
use crate::chroma::ChromaError;

/// Membership slack for the represented set: accumulated weights within
/// this distance of 1 count as full.
pub const OVERLAY_EPS: f64 = 1e-9;

/// A 1D color field embedded in the plane: the base runs from `origin`
/// along `tangent` (unit), values lift along `normal` (unit).
#[derive(Debug, Clone)]
pub struct PlacedField {
    pub field: ColorField,
    pub origin: [f64; 2],
    pub tangent: [f64; 2],
    pub normal: [f64; 2],
}

impl PlacedField {
    /// Identity placement: base along +x starting at the domain minimum,
    /// lift along +y.
    pub fn axis_aligned(field: ColorField) -> Self {
        assert_eq!(field.base_dim(), 1);
        let x0 = field.domain().min[0];
        PlacedField {
            field,
            origin: [x0, 0.0],
            tangent: [1.0, 0.0],
            normal: [0.0, 1.0],
        }
    }

    /// Base length in the plane.
    pub fn span(&self) -> f64 {
        self.field.domain().max[0] - self.field.domain().min[0]
    }

    /// Whether the lifted region covers the point `p`.
    pub fn covers(&self, p: [f64; 2]) -> bool {
        let d = [p[0] - self.origin[0], p[1] - self.origin[1]];
        let u = d[0] * self.tangent[0] + d[1] * self.tangent[1];
        if u < 0.0 || u > self.span() {
            return false;
        }
        let t = d[0] * self.normal[0] + d[1] * self.normal[1];
        if t < 0.0 {
            return false;
        }
        t <= self.field.sample_1d(self.field.domain().min[0] + u)
    }

    /// Weight contributed where the region covers: `1 / weight_den`.
    pub fn weight(&self) -> f64 {
        1.0 / self.field.weight_den() as f64
    }
}

/// Accumulated fractional weights over a planar raster frame.
#[derive(Debug, Clone)]
pub struct AccumulatedField {
    domain: BaseBox,
    nodes: usize,
    weights: Vec<f64>,
}

impl AccumulatedField {
    pub fn domain(&self) -> &BaseBox {
        &self.domain
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn node_pos(&self, axis: usize, i: usize) -> f64 {
        let (lo, hi) = (self.domain.min[axis], self.domain.max[axis]);
        lo + (hi - lo) * i as f64 / (self.nodes - 1) as f64
    }

    pub fn weight_at(&self, i: usize, j: usize) -> f64 {
        self.weights[i * self.nodes + j]
    }

    /// The represented set: nodes whose accumulated weight reaches 1.
    pub fn represented_mask(&self) -> Vec<bool> {
        self.weights
            .iter()
            .map(|&w| w >= 1.0 - OVERLAY_EPS)
            .collect()
    }
}

/// Accumulates placed fractional layers over a square raster frame with
/// `nodes` samples per axis (inclusive of the frame edges).
pub fn overlay(
    layers: &[PlacedField],
    frame: BaseBox,
    nodes: usize,
) -> Result<AccumulatedField, ChromaError> {
    if layers.is_empty() {
        return Err(ChromaError::EmptyOverlay);
    }
    assert_eq!(frame.dim(), 2);
    if nodes < 2 {
        return Err(ChromaError::DegenerateGrid(nodes));
    }
    let mut weights = vec![0.0; nodes * nodes];
    for i in 0..nodes {
        let x = frame.min[0] + (frame.max[0] - frame.min[0]) * i as f64 / (nodes - 1) as f64;
        for j in 0..nodes {
            let y = frame.min[1] + (frame.max[1] - frame.min[1]) * j as f64 / (nodes - 1) as f64;
            let w: f64 = layers
                .iter()
                .filter(|l| l.covers([x, y]))
                .map(|l| l.weight())
                .sum();
            weights[i * nodes + j] = w;
        }
    }
    Ok(AccumulatedField {
        domain: frame,
        nodes,
        weights,
    })
}

/// The three edge placements that fold a unit-segment field along the
/// sides of the unit equilateral triangle on [0,1] x [0, sqrt3/2], lifting
/// inward.
pub fn triangle_fold(field: &ColorField) -> Vec<PlacedField> {
    let s3 = 3f64.sqrt();
    let a = [0.0, 0.0];
    let b = [1.0, 0.0];
    let c = [0.5, s3 / 2.0];
    let edge = |from: [f64; 2], to: [f64; 2]| -> PlacedField {
        let tangent = [to[0] - from[0], to[1] - from[1]];
        // Unit edges by construction; interior lies left of each directed
        // edge for the counterclockwise winding a -> b -> c.
        let normal = [-tangent[1], tangent[0]];
        PlacedField {
            field: field.clone(),
            origin: from,
            tangent,
            normal,
        }
    };
    vec![edge(a, b), edge(b, c), edge(c, a)]
}
