//! Portable anymap writers: binary P6 for color images, ASCII P1 for
//! boolean masks, ASCII P2 for small integer grids such as coverage
//! counts. Headers carry no comments and P6 always uses maxval 255, so
//! output bytes are a pure function of the pixel data.

use super::Raster;

/// Binary PPM bytes for an RGB raster.
pub fn p6_bytes(raster: &Raster) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", raster.width(), raster.height()).into_bytes();
    out.extend_from_slice(raster.pixels());
    out
}

/// ASCII PBM bytes for a boolean mask (true prints as 1, PBM black).
/// Rows are emitted in order, wrapped at 64 digits per line.
pub fn p1_bytes(mask: &[bool], width: usize, height: usize) -> Vec<u8> {
    assert_eq!(mask.len(), width * height);
    let mut out = format!("P1\n{width} {height}\n");
    for row in mask.chunks(width) {
        for line in row.chunks(64) {
            for &b in line {
                out.push(if b { '1' } else { '0' });
            }
            out.push('\n');
        }
    }
    out.into_bytes()
}

/// ASCII PGM bytes for an integer grid, wrapped at 16 values per line.
pub fn p2_bytes(values: &[u16], width: usize, height: usize, maxval: u16) -> Vec<u8> {
    assert_eq!(values.len(), width * height);
    assert!(maxval >= 1 && values.iter().all(|&v| v <= maxval));
    let mut out = format!("P2\n{width} {height}\n{maxval}\n");
    for row in values.chunks(width) {
        for line in row.chunks(16) {
            let words: Vec<String> = line.iter().map(|v| v.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
    }
    out.into_bytes()
}
