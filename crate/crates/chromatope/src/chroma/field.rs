//! Sampled color fields and the coloring/uncoloring operations on them.
//!
//! A field samples a scalar in `[0, vmax]` over an axis-aligned base box on
//! an inclusive node grid: axis `j` with `g_j` nodes places samples at
//! `min_j + i * (max_j - min_j) / (g_j - 1)`, so both box edges are sample
//! positions and dyadic points like 1/2 and 1/4 land exactly on nodes of a
//! power-of-two-plus-one grid. A point base (dimension 0) holds a single
//! sample.

use crate::chroma::ChromaError;
use crate::net::LayerTag;

/// Whether the field adds to the represented set (color) or erases from it
/// (uncolor).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSign {
    Color,
    Uncolor,
}

/// Axis-aligned base box in `d`-space; `d = 0` is a single point.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseBox {
    pub min: Vec<f64>,
    pub max: Vec<f64>,
}

impl BaseBox {
    pub fn new(min: Vec<f64>, max: Vec<f64>) -> Self {
        assert_eq!(min.len(), max.len());
        BaseBox { min, max }
    }

    pub fn point() -> Self {
        BaseBox {
            min: Vec::new(),
            max: Vec::new(),
        }
    }

    pub fn segment(a: f64, b: f64) -> Self {
        BaseBox {
            min: vec![a],
            max: vec![b],
        }
    }

    pub fn square(min: [f64; 2], max: [f64; 2]) -> Self {
        BaseBox {
            min: min.to_vec(),
            max: max.to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.min.len()
    }
}

/// Preferred node count per axis by base dimension: 1025 nodes (1024 cells)
/// up to 2D, 129 nodes for 3D bases.
pub fn default_nodes(base_dim: usize) -> usize {
    if base_dim <= 2 {
        1025
    } else {
        129
    }
}

/// A scalar field over a base box: one length-valued sample per grid node,
/// plus the color-bar maximum, the fractional weight denominator, the
/// palette family, and the color/uncolor sign.
#[derive(Debug, Clone, PartialEq)]
pub struct ColorField {
    domain: BaseBox,
    grid: Vec<usize>,
    values: Vec<f64>,
    vmax: f64,
    weight_den: u32,
    layer: LayerTag,
    sign: FieldSign,
}

impl ColorField {
    /// Builds a field from explicit samples. `grid` holds nodes per axis
    /// (each at least 2); a point base takes an empty grid and one sample.
    pub fn from_samples(
        domain: BaseBox,
        grid: Vec<usize>,
        values: Vec<f64>,
        vmax: f64,
    ) -> Result<Self, ChromaError> {
        assert_eq!(domain.dim(), grid.len());
        if let Some(&bad) = grid.iter().find(|&&g| g < 2) {
            return Err(ChromaError::DegenerateGrid(bad));
        }
        let expected: usize = grid.iter().product();
        assert_eq!(values.len(), expected.max(1));
        if let Some(&v) = values
            .iter()
            .find(|&&v| !(0.0..=vmax * (1.0 + 1e-12)).contains(&v))
        {
            return Err(ChromaError::ValueOutOfRange { value: v, vmax });
        }
        Ok(ColorField {
            domain,
            grid,
            values,
            vmax,
            weight_den: 1,
            layer: LayerTag::Standard,
            sign: FieldSign::Color,
        })
    }

    pub fn base_dim(&self) -> usize {
        self.grid.len()
    }

    pub fn domain(&self) -> &BaseBox {
        &self.domain
    }

    pub fn grid(&self) -> &[usize] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vmax(&self) -> f64 {
        self.vmax
    }

    pub fn weight_den(&self) -> u32 {
        self.weight_den
    }

    pub fn layer(&self) -> LayerTag {
        self.layer
    }

    pub fn sign(&self) -> FieldSign {
        self.sign
    }

    /// Fractional variant: the same field at weight `1/den`.
    pub fn with_weight(mut self, den: u32) -> Self {
        assert!(den >= 1);
        self.weight_den = den;
        self
    }

    pub fn with_layer(mut self, layer: LayerTag) -> Self {
        self.layer = layer;
        self
    }

    pub fn with_sign(mut self, sign: FieldSign) -> Self {
        self.sign = sign;
        self
    }

    /// Position of node `i` along `axis`.
    pub fn node(&self, axis: usize, i: usize) -> f64 {
        let g = self.grid[axis];
        let (lo, hi) = (self.domain.min[axis], self.domain.max[axis]);
        lo + (hi - lo) * i as f64 / (g - 1) as f64
    }

    /// Flat index of a multi-index (row-major, last axis fastest).
    pub fn flat(&self, idx: &[usize]) -> usize {
        idx.iter()
            .zip(&self.grid)
            .fold(0, |acc, (&i, &g)| acc * g + i)
    }

    pub fn value_at(&self, idx: &[usize]) -> f64 {
        self.values[self.flat(idx)]
    }

    /// Linear interpolation for 1D fields; clamps outside the domain to
    /// the edge samples.
    pub fn sample_1d(&self, x: f64) -> f64 {
        assert_eq!(self.base_dim(), 1);
        let (lo, hi) = (self.domain.min[0], self.domain.max[0]);
        let g = self.grid[0];
        let s = ((x - lo) / (hi - lo)).clamp(0.0, 1.0) * (g - 1) as f64;
        let i = (s.floor() as usize).min(g - 2);
        let frac = s - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }

    /// Serializes the field: a line-oriented text header closed by a
    /// `data` line, then all samples as little-endian 8-byte floats in
    /// row-major order.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut head = String::new();
        head.push_str("chromafield 1\n");
        head.push_str(&format!("basedim {}\n", self.base_dim()));
        let mut domain = String::from("domain");
        for j in 0..self.base_dim() {
            domain.push_str(&format!(" {} {}", self.domain.min[j], self.domain.max[j]));
        }
        head.push_str(&domain);
        head.push('\n');
        let mut grid = String::from("grid");
        for g in &self.grid {
            grid.push_str(&format!(" {g}"));
        }
        head.push_str(&grid);
        head.push('\n');
        head.push_str(&format!("vmax {}\n", self.vmax));
        head.push_str(&format!("weightden {}\n", self.weight_den));
        head.push_str(&format!(
            "layer {}\n",
            match self.layer {
                LayerTag::Standard => "standard",
                LayerTag::Reverse => "reverse",
            }
        ));
        head.push_str(&format!(
            "sign {}\n",
            match self.sign {
                FieldSign::Color => "color",
                FieldSign::Uncolor => "uncolor",
            }
        ));
        head.push_str("data\n");
        let mut out = head.into_bytes();
        for v in &self.values {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    /// Parses the [`to_bytes`](Self::to_bytes) layout.
    pub fn from_bytes(bytes: &[u8]) -> Option<Self> {
        let data_tag = b"data\n";
        let pos = bytes.windows(data_tag.len()).position(|w| w == data_tag)?;
        let header = std::str::from_utf8(&bytes[..pos]).ok()?;
        let body = &bytes[pos + data_tag.len()..];

        let mut basedim = None;
        let mut domain = None;
        let mut grid = None;
        let mut vmax = None;
        let mut weightden = None;
        let mut layer = None;
        let mut sign = None;
        for line in header.lines() {
            let mut parts = line.split_whitespace();
            match parts.next()? {
                "chromafield" => {
                    if parts.next()? != "1" {
                        return None;
                    }
                }
                "basedim" => basedim = Some(parts.next()?.parse::<usize>().ok()?),
                "domain" => {
                    let nums: Vec<f64> = parts.map(|p| p.parse().unwrap()).collect();
                    let (mut min, mut max) = (Vec::new(), Vec::new());
                    for pair in nums.chunks(2) {
                        min.push(pair[0]);
                        max.push(pair[1]);
                    }
                    domain = Some(BaseBox { min, max });
                }
                "grid" => grid = Some(parts.map(|p| p.parse().unwrap()).collect::<Vec<usize>>()),
                "vmax" => vmax = Some(parts.next()?.parse::<f64>().ok()?),
                "weightden" => weightden = Some(parts.next()?.parse::<u32>().ok()?),
                "layer" => {
                    layer = Some(match parts.next()? {
                        "standard" => LayerTag::Standard,
                        "reverse" => LayerTag::Reverse,
                        _ => return None,
                    })
                }
                "sign" => {
                    sign = Some(match parts.next()? {
                        "color" => FieldSign::Color,
                        "uncolor" => FieldSign::Uncolor,
                        _ => return None,
                    })
                }
                _ => return None,
            }
        }
        let grid = grid?;
        let expected: usize = grid.iter().product::<usize>().max(1);
        if body.len() != expected * 8 || basedim? != grid.len() {
            return None;
        }
        let values: Vec<f64> = body
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        let field = ColorField::from_samples(domain?, grid, values, vmax?).ok()?;
        Some(
            field
                .with_weight(weightden?)
                .with_layer(layer?)
                .with_sign(sign?),
        )
    }

    fn same_frame(&self, other: &ColorField) -> bool {
        self.domain == other.domain && self.grid == other.grid && self.vmax == other.vmax
    }
}

/// A colored field paired with its uncoloring: over base point `x` the
/// represented fiber is the interval `[lo(x), hi(x)]` in the appended
/// nonnegative coordinate, of length `max(hi - lo, 0)`.
#[derive(Debug, Clone)]
pub struct ColorRep {
    pub hi: ColorField,
    pub lo: ColorField,
}

impl ColorRep {
    /// Wraps a colored field with a zero uncoloring.
    pub fn from_hi(hi: ColorField) -> Self {
        let zeros = vec![0.0; hi.values.len()];
        let lo = ColorField {
            domain: hi.domain.clone(),
            grid: hi.grid.clone(),
            values: zeros,
            vmax: hi.vmax,
            weight_den: hi.weight_den,
            layer: hi.layer,
            sign: FieldSign::Uncolor,
        };
        ColorRep { hi, lo }
    }

    pub fn from_parts(hi: ColorField, lo: ColorField) -> Result<Self, ChromaError> {
        if !hi.same_frame(&lo) {
            return Err(ChromaError::FrameMismatch);
        }
        let lo = lo.with_sign(FieldSign::Uncolor);
        Ok(ColorRep { hi, lo })
    }

    /// Fiber length per sample, `max(hi - lo, 0)`.
    pub fn represented_lengths(&self) -> Vec<f64> {
        self.hi
            .values
            .iter()
            .zip(&self.lo.values)
            .map(|(&h, &l)| (h - l).max(0.0))
            .collect()
    }
}

/// Uniform ("square") coloring: every sample carries the same value.
pub fn solid_coloring(
    domain: BaseBox,
    value: f64,
    vmax: f64,
    nodes: usize,
) -> Result<ColorField, ChromaError> {
    if !(0.0..=vmax).contains(&value) {
        return Err(ChromaError::ValueOutOfRange { value, vmax });
    }
    let grid: Vec<usize> = vec![nodes; domain.dim()];
    let count: usize = grid.iter().product::<usize>().max(1);
    ColorField::from_samples(domain, grid, vec![value; count], vmax)
}

/// Domain of a gradated ("simplex") coloring: a base segment or a triangle
/// face in the plane.
#[derive(Debug, Clone)]
pub enum GradientDomain {
    Segment { a: f64, b: f64 },
    Triangle { verts: [[f64; 2]; 3] },
}

/// Gradated coloring: black at the domain boundary, ascending linearly to
/// `peak` at the incenter-most point. On a segment this is the tent
/// `2 * peak * min(s, 1 - s)`; on a triangle it scales the smallest
/// barycentric coordinate, `3 * peak * min_i b_i`, vanishing outside.
pub fn simplex_gradient(
    domain: &GradientDomain,
    peak: f64,
    vmax: f64,
    nodes: usize,
) -> Result<ColorField, ChromaError> {
    if peak > vmax || peak < 0.0 {
        return Err(ChromaError::PeakAboveMax { peak, vmax });
    }
    match domain {
        GradientDomain::Segment { a, b } => {
            let values: Vec<f64> = (0..nodes)
                .map(|i| {
                    let s = i as f64 / (nodes - 1) as f64;
                    2.0 * peak * s.min(1.0 - s)
                })
                .collect();
            ColorField::from_samples(BaseBox::segment(*a, *b), vec![nodes], values, vmax)
        }
        GradientDomain::Triangle { verts } => {
            let min = [
                verts.iter().map(|v| v[0]).fold(f64::INFINITY, f64::min),
                verts.iter().map(|v| v[1]).fold(f64::INFINITY, f64::min),
            ];
            let max = [
                verts.iter().map(|v| v[0]).fold(f64::NEG_INFINITY, f64::max),
                verts.iter().map(|v| v[1]).fold(f64::NEG_INFINITY, f64::max),
            ];
            let domain = BaseBox::square(min, max);
            let mut values = Vec::with_capacity(nodes * nodes);
            for i in 0..nodes {
                let x = min[0] + (max[0] - min[0]) * i as f64 / (nodes - 1) as f64;
                for j in 0..nodes {
                    let y = min[1] + (max[1] - min[1]) * j as f64 / (nodes - 1) as f64;
                    let b = barycentric(verts, [x, y]);
                    let m = b[0].min(b[1]).min(b[2]);
                    values.push((3.0 * peak * m).clamp(0.0, peak));
                }
            }
            ColorField::from_samples(domain, vec![nodes, nodes], values, vmax)
        }
    }
}

/// Barycentric coordinates of `p` in the triangle, via the signed-area
/// ratios.
pub fn barycentric(verts: &[[f64; 2]; 3], p: [f64; 2]) -> [f64; 3] {
    let area2 = |a: [f64; 2], b: [f64; 2], c: [f64; 2]| -> f64 {
        (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    };
    let total = area2(verts[0], verts[1], verts[2]);
    [
        area2(p, verts[1], verts[2]) / total,
        area2(verts[0], p, verts[2]) / total,
        area2(verts[0], verts[1], p) / total,
    ]
}

/// Applies an uncoloring: the erase field raises the low envelope,
/// clamped into `[lo, hi]`. The high envelope never changes, so repeated
/// application of the same erase field is idempotent.
pub fn uncolor_apply(rep: &ColorRep, erase: &ColorField) -> Result<ColorRep, ChromaError> {
    if !rep.hi.same_frame(erase) {
        return Err(ChromaError::FrameMismatch);
    }
    let values: Vec<f64> = rep
        .lo
        .values
        .iter()
        .zip(&erase.values)
        .zip(&rep.hi.values)
        .map(|((&l, &e), &h)| l.max(e).min(h))
        .collect();
    let lo = ColorField {
        domain: rep.lo.domain.clone(),
        grid: rep.lo.grid.clone(),
        values,
        vmax: rep.lo.vmax,
        weight_den: rep.lo.weight_den,
        layer: rep.lo.layer,
        sign: FieldSign::Uncolor,
    };
    Ok(ColorRep {
        hi: rep.hi.clone(),
        lo,
    })
}
