//! Palette-mapped images of color representations and the color-bar
//! legend. A field image has one pixel per grid node; uncolored regions
//! (erased from below, `lo > 0`) are overlaid with a fixed diagonal hatch
//! so they stay distinguishable from honestly dark values.

use crate::chroma::{palette_map, ColorRep};
use crate::net::LayerTag;

use super::glyphs::{draw_text, format_value, text_height};
use super::{Raster, RenderError};

/// Pixel height of a 1-dimensional field strip.
pub const STRIP_HEIGHT: usize = 24;

/// Side of the square swatch rendering a point (0-dimensional) field.
pub const SWATCH_SIDE: usize = 9;

/// Overlay color of the uncoloring hatch.
pub const HATCH_COLOR: [u8; 3] = [96, 96, 96];

fn hatched(x: usize, y: usize) -> bool {
    (x + y).is_multiple_of(4)
}

/// Renders a color representation with base dimension at most 2: a
/// swatch for a point, a horizontal strip for a segment (domain minimum
/// at the left), an image for a planar base (row 0 at the domain's top).
/// Pixels take `palette_map(hi)`; wherever `lo > 0` the diagonal hatch is
/// stamped over the color.
pub fn render_field(rep: &ColorRep) -> Result<Raster, RenderError> {
    let hi = &rep.hi;
    let vmax = hi.vmax();
    let layer = hi.layer();
    let paint = |value: f64| -> [u8; 3] {
        palette_map(value, vmax, layer).expect("field samples stay within vmax")
    };
    match hi.base_dim() {
        0 => {
            let mut raster = Raster::new(SWATCH_SIDE, SWATCH_SIDE)?;
            let rgb = paint(hi.values()[0]);
            for y in 0..SWATCH_SIDE {
                for x in 0..SWATCH_SIDE {
                    raster.set(x as i64, y as i64, rgb);
                    if rep.lo.values()[0] > 0.0 && hatched(x, y) {
                        raster.set(x as i64, y as i64, HATCH_COLOR);
                    }
                }
            }
            Ok(raster)
        }
        1 => {
            let nodes = hi.grid()[0];
            let mut raster = Raster::new(nodes, STRIP_HEIGHT)?;
            for x in 0..nodes {
                let rgb = paint(hi.values()[x]);
                let erased = rep.lo.values()[x] > 0.0;
                for y in 0..STRIP_HEIGHT {
                    raster.set(x as i64, y as i64, rgb);
                    if erased && hatched(x, y) {
                        raster.set(x as i64, y as i64, HATCH_COLOR);
                    }
                }
            }
            Ok(raster)
        }
        2 => {
            let (gx, gy) = (hi.grid()[0], hi.grid()[1]);
            let mut raster = Raster::new(gx, gy)?;
            for row in 0..gy {
                for col in 0..gx {
                    let idx = [col, gy - 1 - row];
                    let rgb = paint(hi.value_at(&idx));
                    raster.set(col as i64, row as i64, rgb);
                    if rep.lo.value_at(&idx) > 0.0 && hatched(col, row) {
                        raster.set(col as i64, row as i64, HATCH_COLOR);
                    }
                }
            }
            Ok(raster)
        }
        d => Err(RenderError::UnsupportedBaseDim(d)),
    }
}

/// A vertical color-bar legend: the full palette ramp from `vmax` at the
/// top to 0 at the bottom, with tick marks and numeric labels at the
/// three palette anchors (0, vmax/2, vmax). Needs room for the labels, so
/// requests smaller than 24×20 are rejected.
pub fn render_colorbar(
    vmax: f64,
    layer: LayerTag,
    width: usize,
    height: usize,
) -> Result<Raster, RenderError> {
    if width < 24 || height < 20 {
        return Err(RenderError::DegenerateRaster { width, height });
    }
    let mut raster = Raster::new(width, height)?;
    let bar_width = width - 18;
    for row in 0..height {
        let value = vmax * (height - 1 - row) as f64 / (height - 1) as f64;
        let rgb = palette_map(value, vmax, layer).expect("ramp stays within vmax");
        for col in 0..bar_width {
            raster.set(col as i64, row as i64, rgb);
        }
    }
    for frac in [0.0, 0.5, 1.0] {
        let row = ((height - 1) as f64 * (1.0 - frac)).round() as i64;
        for dx in 0..4 {
            raster.set(bar_width as i64 + dx, row, [0, 0, 0]);
        }
        let label = format_value(vmax * frac);
        let y = (row - text_height(1) as i64 / 2).clamp(0, (height - text_height(1)) as i64);
        draw_text(&mut raster, bar_width as i64 + 5, y, &label, 1, [0, 0, 0]);
    }
    Ok(raster)
}
