//! A tiny fixed 3×5 bitmap font for numeric labels on rendered figures —
//! enough for tick values and ratio annotations without any font
//! dependency.

use super::Raster;

const GLYPH_WIDTH: usize = 3;
const GLYPH_HEIGHT: usize = 5;

/// Rows of 3 bits each, most significant bit leftmost.
fn glyph(c: char) -> [u8; 5] {
    match c {
        '0' => [0b111, 0b101, 0b101, 0b101, 0b111],
        '1' => [0b010, 0b110, 0b010, 0b010, 0b111],
        '2' => [0b111, 0b001, 0b111, 0b100, 0b111],
        '3' => [0b111, 0b001, 0b111, 0b001, 0b111],
        '4' => [0b101, 0b101, 0b111, 0b001, 0b001],
        '5' => [0b111, 0b100, 0b111, 0b001, 0b111],
        '6' => [0b111, 0b100, 0b111, 0b101, 0b111],
        '7' => [0b111, 0b001, 0b010, 0b010, 0b010],
        '8' => [0b111, 0b101, 0b111, 0b101, 0b111],
        '9' => [0b111, 0b101, 0b111, 0b001, 0b111],
        '.' => [0b000, 0b000, 0b000, 0b000, 0b010],
        '/' => [0b001, 0b001, 0b010, 0b100, 0b100],
        '-' => [0b000, 0b000, 0b111, 0b000, 0b000],
        _ => [0b000, 0b010, 0b000, 0b010, 0b000],
    }
}

/// Pixel height of a text line at the given scale.
pub fn text_height(scale: usize) -> usize {
    GLYPH_HEIGHT * scale
}

/// Pixel width of a string at the given scale (one glyph column of
/// spacing between characters).
pub fn text_width(text: &str, scale: usize) -> usize {
    let n = text.chars().count();
    if n == 0 {
        0
    } else {
        (n * (GLYPH_WIDTH + 1) - 1) * scale
    }
}

/// Stamps the string with its top-left corner at (x, y).
pub fn draw_text(raster: &mut Raster, x: i64, y: i64, text: &str, scale: usize, rgb: [u8; 3]) {
    let mut cx = x;
    for c in text.chars() {
        let rows = glyph(c);
        for (gy, row) in rows.iter().enumerate() {
            for gx in 0..GLYPH_WIDTH {
                if row & (1 << (GLYPH_WIDTH - 1 - gx)) != 0 {
                    raster.fill_rect(
                        cx + (gx * scale) as i64,
                        y + (gy * scale) as i64,
                        scale,
                        scale,
                        rgb,
                    );
                }
            }
        }
        cx += ((GLYPH_WIDTH + 1) * scale) as i64;
    }
}

/// Compact decimal label: three decimals, trailing zeros and a bare
/// trailing point trimmed, so 1.0 prints as "1" and 0.5 as "0.5".
pub fn format_value(v: f64) -> String {
    let mut s = format!("{v:.3}");
    while s.contains('.') && (s.ends_with('0') || s.ends_with('.')) {
        s.pop();
    }
    s
}
