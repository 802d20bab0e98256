//! Interactive browser panels. Each exported function computes an image
//! with the core crate and hands it back as RGBA bytes ready for an
//! `ImageData` upload; all sizing comes along in the returned [`Panel`]
//! so the page never guesses dimensions.

use wasm_bindgen::prelude::*;

use chromatope::chroma::{fiber_rep, palette_map, ConvexBody};
use chromatope::exact::rat;
use chromatope::fractal::{iterate, level_ceiling, MengerRule, TriadicBoxSet};
use chromatope::net::LayerTag;
use chromatope::polytope::{build_cube, build_simplex, truncate_vertices};
use chromatope::render::{render_colorbar, render_field, Raster};
use chromatope::star::{coverage_raster, star_layers, star_threshold, StarSpec};

/// Star views supported by the panel, as `(p, q, layer count)`.
pub const STARS: [(u32, u32, u32); 4] = [(5, 2, 3), (6, 2, 4), (7, 3, 3), (8, 3, 4)];

/// A finished image: dimensions plus row-major RGBA bytes.
#[wasm_bindgen]
pub struct Panel {
    width: u32,
    height: u32,
    rgba: Vec<u8>,
}

#[wasm_bindgen]
impl Panel {
    #[wasm_bindgen(getter)]
    pub fn width(&self) -> u32 {
        self.width
    }

    #[wasm_bindgen(getter)]
    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn rgba(&self) -> Vec<u8> {
        self.rgba.clone()
    }
}

impl Panel {
    fn from_rgb(width: usize, height: usize, rgb: &[u8]) -> Panel {
        let mut rgba = Vec::with_capacity(4 * width * height);
        for px in rgb.chunks_exact(3) {
            rgba.extend_from_slice(px);
            rgba.push(255);
        }
        Panel {
            width: width as u32,
            height: height as u32,
            rgba,
        }
    }

    fn from_raster(raster: &Raster) -> Panel {
        Panel::from_rgb(raster.width(), raster.height(), raster.pixels())
    }

    /// Monochrome image from a mask, `scale` screen pixels per mask cell.
    fn from_mask(mask: &[bool], width: usize, height: usize, scale: usize) -> Panel {
        let (w, h) = (width * scale, height * scale);
        let mut rgba = vec![255u8; 4 * w * h];
        for y in 0..h {
            for x in 0..w {
                if mask[(y / scale) * width + x / scale] {
                    let at = 4 * (y * w + x);
                    rgba[at..at + 3].fill(0);
                }
            }
        }
        Panel {
            width: w as u32,
            height: h as u32,
            rgba,
        }
    }
}

fn check_res(res: usize) -> Result<(), String> {
    if (16..=2048).contains(&res) {
        Ok(())
    } else {
        Err(format!("resolution {res} outside 16..=2048"))
    }
}

/// Winding-count heat map of a star polygon's layer stack, or the
/// thresholded silhouette when `threshold` is set.
pub fn star_panel_image(p: u32, q: u32, res: usize, threshold: bool) -> Result<Panel, String> {
    check_res(res)?;
    let &(_, _, n) = STARS
        .iter()
        .find(|&&(sp, sq, _)| (sp, sq) == (p, q))
        .ok_or(format!("unsupported star {{{p}/{q}}}"))?;
    let spec = StarSpec::new(p, q, n).map_err(|e| e.to_string())?;
    let layers = star_layers(&spec).map_err(|e| e.to_string())?;
    let coverage = coverage_raster(&layers, res);
    if threshold {
        let mask = star_threshold(&coverage, n);
        return Ok(Panel::from_mask(&mask, res, res, 1));
    }
    let mut rgba = Vec::with_capacity(4 * res * res);
    for &count in &coverage.counts {
        let value = f64::from(count.min(n as u16)) / f64::from(n);
        let px = palette_map(value, 1.0, LayerTag::Standard).map_err(|e| e.to_string())?;
        rgba.extend_from_slice(&px);
        rgba.push(255);
    }
    Ok(Panel {
        width: res as u32,
        height: res as u32,
        rgba,
    })
}

fn fractal_slice(set: &TriadicBoxSet, permille: u32) -> (Vec<bool>, usize) {
    let grid = usize::from(set.grid());
    let index = (u64::from(permille.min(1000)) * (grid as u64 - 1)).div_ceil(1000) as u16;
    let mut mask = vec![false; grid * grid];
    for cell in set.cells() {
        let keep = match cell.len() {
            1 => cell[0] == index,
            2 => true,
            _ => cell[2] == index,
        };
        if keep {
            let (x, y) = (
                usize::from(cell[0]),
                usize::from(cell.get(1).copied().unwrap_or(0)),
            );
            mask[(grid - 1 - y) * grid + x] = true;
        }
    }
    (mask, grid)
}

/// Triadic fractal viewer: the square for `d = 2`, an axis-aligned slice
/// for `d = 3` with `permille` picking the slicing plane, a bar for
/// `d = 1` (the slider then highlights nothing).
pub fn fractal_panel_image(
    d: usize,
    m: usize,
    level: u32,
    permille: u32,
    res: usize,
) -> Result<Panel, String> {
    check_res(res)?;
    if !(1..=3).contains(&d) {
        return Err(format!("panel dimension {d} outside 1..=3"));
    }
    if level > level_ceiling(d) {
        return Err(format!("level {level} above ceiling {}", level_ceiling(d)));
    }
    let rule = MengerRule::new(d, m).map_err(|e| e.to_string())?;
    let set = iterate(&rule, level).map_err(|e| e.to_string())?;
    if d == 1 {
        let grid = usize::from(set.grid());
        let mut mask = vec![false; grid];
        for cell in set.cells() {
            mask[usize::from(cell[0])] = true;
        }
        let scale = (res / grid).max(1);
        let strip = Panel::from_mask(&mask, grid, 1, scale);
        let row = &strip.rgba[..4 * strip.width as usize];
        let rgba = row.repeat(24);
        return Ok(Panel {
            width: strip.width,
            height: 24,
            rgba,
        });
    }
    let (mask, grid) = fractal_slice(&set, permille);
    let scale = (res / grid).max(1);
    Ok(Panel::from_mask(&mask, grid, grid, scale))
}

/// Vertex-truncation morph: the solid is rebuilt at cut depth
/// `percent/100` along each edge and shown as its fiber coloring over the
/// base plane. Zero percent shows the untruncated solid.
pub fn truncation_panel_image(shape: &str, percent: u32, res: usize) -> Result<Panel, String> {
    check_res(res)?;
    if percent > 49 {
        return Err(format!("truncation {percent}% out of range 0..=49"));
    }
    let base = match shape {
        "cube" => build_cube(3),
        "simplex" => build_simplex(3),
        other => return Err(format!("unknown shape {other:?}; use cube or simplex")),
    }
    .map_err(|e| e.to_string())?;
    let lattice = if percent == 0 {
        base
    } else {
        truncate_vertices(&base, rat(i64::from(percent), 100)).map_err(|e| e.to_string())?
    };
    let body = ConvexBody::from_lattice(&lattice);
    let nodes = res.clamp(33, 257);
    let rep = fiber_rep(&body, 2, nodes).map_err(|e| e.to_string())?;
    let raster = render_field(&rep).map_err(|e| e.to_string())?;
    Ok(Panel::from_raster(&raster))
}

/// The palette legend for either layer direction.
pub fn colorbar_panel_image(reverse: bool, width: usize, height: usize) -> Result<Panel, String> {
    let layer = if reverse {
        LayerTag::Reverse
    } else {
        LayerTag::Standard
    };
    let raster = render_colorbar(1.0, layer, width, height).map_err(|e| e.to_string())?;
    Ok(Panel::from_raster(&raster))
}

#[wasm_bindgen]
pub fn star_panel(p: u32, q: u32, res: usize, threshold: bool) -> Result<Panel, JsError> {
    star_panel_image(p, q, res, threshold).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn fractal_panel(
    d: usize,
    m: usize,
    level: u32,
    permille: u32,
    res: usize,
) -> Result<Panel, JsError> {
    fractal_panel_image(d, m, level, permille, res).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn truncation_panel(shape: &str, percent: u32, res: usize) -> Result<Panel, JsError> {
    truncation_panel_image(shape, percent, res).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn colorbar_panel(reverse: bool, width: usize, height: usize) -> Result<Panel, JsError> {
    colorbar_panel_image(reverse, width, height).map_err(|e| JsError::new(&e))
}
