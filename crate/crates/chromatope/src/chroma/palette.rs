//! The color bar: a piecewise-linear ramp through fixed anchors, mapping
//! normalized fiber length to RGB. The standard family runs
//! black-brown-pink; the reverse family (used to mark reflected net cells)
//! runs black through deep green to light green. Every channel increases
//! strictly along both ramps, so distinct anchor values map to distinct
//! colors and the bar is readable as a length scale.

use crate::chroma::ChromaError;
use crate::net::LayerTag;

/// Anchor table of the standard family: (normalized value, RGB).
pub const STANDARD_ANCHORS: [(f64, [u8; 3]); 3] = [
    (0.0, [0, 0, 0]),
    (0.5, [150, 75, 40]),
    (1.0, [255, 182, 193]),
];

/// Anchor table of the reverse (green) family.
pub const REVERSE_ANCHORS: [(f64, [u8; 3]); 3] = [
    (0.0, [0, 0, 0]),
    (0.5, [20, 110, 45]),
    (1.0, [144, 238, 144]),
];

fn anchors(layer: LayerTag) -> &'static [(f64, [u8; 3]); 3] {
    match layer {
        LayerTag::Standard => &STANDARD_ANCHORS,
        LayerTag::Reverse => &REVERSE_ANCHORS,
    }
}

/// Piecewise-linear ramp through the layer's anchors at a normalized value
/// in [0, 1]; returns unrounded channel intensities.
pub fn palette_interpolate(v: f64, layer: LayerTag) -> [f64; 3] {
    let table = anchors(layer);
    let v = v.clamp(0.0, 1.0);
    let (lo, hi) = if v <= table[1].0 {
        (table[0], table[1])
    } else {
        (table[1], table[2])
    };
    let t = (v - lo.0) / (hi.0 - lo.0);
    [0, 1, 2].map(|c| lo.1[c] as f64 + t * (hi.1[c] as f64 - lo.1[c] as f64))
}

/// Maps a fiber length to its bar color. The value must lie within the
/// bar, `0 <= value <= vmax`.
pub fn palette_map(value: f64, vmax: f64, layer: LayerTag) -> Result<[u8; 3], ChromaError> {
    if !(0.0..=vmax * (1.0 + 1e-12)).contains(&value) {
        return Err(ChromaError::ValueOutOfRange { value, vmax });
    }
    let rgb = palette_interpolate(value / vmax, layer);
    Ok(rgb.map(|c| c.round() as u8))
}
