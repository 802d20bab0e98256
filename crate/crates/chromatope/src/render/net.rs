//! Layout rendering for colored nets with 1- or 2-dimensional ambient
//! space: cell outlines in light gray, each cell's colored base face on
//! top of them. Coincident base faces (the doubled center of simplex
//! stars) are drawn side by side, each extra copy shifted by a fixed
//! 8-pixel offset and flagged with a small annotation mark.

use std::collections::BTreeMap;

use crate::chroma::palette_map;
use crate::exact::Rat;
use crate::net::{ColorStyle, ColoredNet};

use super::{Raster, RenderError};

const MARGIN: i64 = 20;
const STRIP_MID: i64 = 24;
const COINCIDENCE_OFFSET: f64 = 8.0;
const OUTLINE: [u8; 3] = [204, 204, 204];
const REP_THICKNESS: usize = 3;

struct Frame {
    min: [f64; 2],
    max_y: f64,
    ppu: f64,
    ambient: usize,
}

impl Frame {
    fn to_pixel(&self, p: &[f64]) -> [f64; 2] {
        let x = MARGIN as f64 + (p[0] - self.min[0]) * self.ppu;
        let y = if self.ambient == 1 {
            STRIP_MID as f64
        } else {
            MARGIN as f64 + (self.max_y - p[1]) * self.ppu
        };
        [x, y]
    }
}

/// Renders a colored net at the given scale (pixels per unit length;
/// at least 4). Supports nets living in 1- or 2-dimensional ambient
/// space; higher nets go through the voxel exporter instead.
pub fn render_net(colored: &ColoredNet, pixels_per_unit: usize) -> Result<Raster, RenderError> {
    let net = &colored.net;
    let ambient = net.ambient_dim();
    if ambient > 2 {
        return Err(RenderError::UnsupportedAmbient(ambient));
    }
    if pixels_per_unit < 4 {
        return Err(RenderError::DegenerateRaster {
            width: pixels_per_unit,
            height: pixels_per_unit,
        });
    }
    let ppu = pixels_per_unit as f64;

    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    for (c, cell) in net.cells().iter().enumerate() {
        for &v in cell.placement.keys() {
            let p = net.cell_vertex_f64(c, v);
            for axis in 0..ambient {
                min[axis] = min[axis].min(p[axis]);
                max[axis] = max[axis].max(p[axis]);
            }
        }
    }
    let frame = Frame {
        min,
        max_y: max[1],
        ppu,
        ambient,
    };
    let width = 2 * MARGIN as usize + ((max[0] - min[0]) * ppu).ceil() as usize;
    let height = if ambient == 1 {
        2 * STRIP_MID as usize
    } else {
        2 * MARGIN as usize + ((max[1] - min[1]) * ppu).ceil() as usize
    };
    let mut raster = Raster::new(width, height)?;

    // Outlines first: every rank-1 source face of each placed cell.
    let source = net.source();
    for (c, cell) in net.cells().iter().enumerate() {
        if ambient == 1 {
            let verts: Vec<usize> = cell.placement.keys().copied().collect();
            let a = frame.to_pixel(&net.cell_vertex_f64(c, verts[0]));
            let b = frame.to_pixel(&net.cell_vertex_f64(c, verts[1]));
            raster.draw_segment(a, b, 1, OUTLINE);
        } else {
            for edge_idx in source.faces_within_facet(1, cell.facet) {
                let edge = &source.faces(1)[edge_idx];
                let a = frame.to_pixel(&net.cell_vertex_f64(c, edge[0]));
                let b = frame.to_pixel(&net.cell_vertex_f64(c, edge[1]));
                raster.draw_segment(a, b, 1, OUTLINE);
            }
        }
    }

    // Colored base faces, with coincidences fanned out.
    let mut seen: BTreeMap<Vec<Vec<Rat>>, usize> = BTreeMap::new();
    for (c, color) in colored.colors.iter().enumerate() {
        let cell = &net.cells()[c];
        let mut key: Vec<Vec<Rat>> = color
            .rep_face
            .iter()
            .map(|v| cell.placement[v].clone())
            .collect();
        key.sort();
        let occurrence = *seen.entry(key).and_modify(|o| *o += 1).or_insert(0);

        let placed: Vec<[f64; 2]> = color
            .rep_face
            .iter()
            .map(|&v| frame.to_pixel(&net.cell_vertex_f64(c, v)))
            .collect();
        if placed.len() == 1 {
            // Point representation on a strip: a solid square swatch.
            let rgb = palette_map(1.0, 1.0, color.tag).expect("full value is in range");
            let shift = occurrence as f64 * COINCIDENCE_OFFSET;
            let x = placed[0][0].round() as i64 + shift as i64;
            let y = placed[0][1].round() as i64;
            raster.fill_rect(x - 2, y - 2, 5, 5, rgb);
            if occurrence > 0 {
                raster.draw_mark(x, y - 8, [0, 0, 0]);
            }
            continue;
        }

        // Segment representation: find the cell's off-face apex to fix
        // the gradient peak and the outward fan-out direction.
        let (a, b) = (placed[0], placed[1]);
        let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
        let normal = [-(b[1] - a[1]) / len, (b[0] - a[0]) / len];
        let apex_vertex = cell
            .placement
            .keys()
            .copied()
            .find(|v| !color.rep_face.contains(v))
            .expect("cell has a vertex outside its base face");
        let apex = frame.to_pixel(&net.cell_vertex_f64(c, apex_vertex));
        let mid = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
        let toward_apex = (apex[0] - mid[0]) * normal[0] + (apex[1] - mid[1]) * normal[1];
        let outward = if toward_apex > 0.0 { -1.0 } else { 1.0 };
        let shift = occurrence as f64 * COINCIDENCE_OFFSET * outward;
        let a = [a[0] + shift * normal[0], a[1] + shift * normal[1]];
        let b = [b[0] + shift * normal[0], b[1] + shift * normal[1]];

        // Peak height of the cell above its base face, in world units.
        let peak = ((apex[0] - mid[0]) * normal[0] + (apex[1] - mid[1]) * normal[1]).abs() / ppu;
        // An even step count samples t = 1/2 exactly, so gradated faces
        // always show their true peak color.
        let steps = (len.ceil() as usize).max(2).div_ceil(2) * 2;
        for s in 0..=steps {
            let t = s as f64 / steps as f64;
            let value = match color.style {
                ColorStyle::Uniform => 1.0,
                ColorStyle::Gradated => 2.0 * peak * t.min(1.0 - t),
            };
            let vmax = match color.style {
                ColorStyle::Uniform => 1.0,
                ColorStyle::Gradated => peak,
            };
            let rgb = palette_map(value.min(vmax), vmax, color.tag)
                .expect("tent profile stays within its peak");
            let p = [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
            raster.fill_rect(
                p[0].round() as i64 - REP_THICKNESS as i64 / 2,
                p[1].round() as i64 - REP_THICKNESS as i64 / 2,
                REP_THICKNESS,
                REP_THICKNESS,
                rgb,
            );
        }
        if occurrence > 0 {
            let mark = [
                mid[0] + (shift + outward * 8.0) * normal[0],
                mid[1] + (shift + outward * 8.0) * normal[1],
            ];
            raster.draw_mark(mark[0].round() as i64, mark[1].round() as i64, [0, 0, 0]);
        }
    }
    Ok(raster)
}
