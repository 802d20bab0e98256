//! Deterministic figure emission: palette-mapped field images, color-bar
//! legends, net layouts, and voxel exports, all as plain byte buffers so
//! identical inputs always produce identical files.

pub mod field;
pub mod glyphs;
pub mod net;
pub mod pnm;
pub mod voxel;

pub use field::{render_colorbar, render_field, HATCH_COLOR, STRIP_HEIGHT};
pub use net::render_net;
pub use pnm::{p1_bytes, p2_bytes, p6_bytes};
pub use voxel::{export_voxels, slice_field, slice_rep, VoxelExport, VoxelGrid};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RenderError {
    #[error("cannot raster a base dimension of {0}; planar output needs at most 2")]
    UnsupportedBaseDim(usize),
    #[error("degenerate raster request {width}x{height}")]
    DegenerateRaster { width: usize, height: usize },
    #[error("net layout rendering supports ambient dimensions 1 and 2, got {0}")]
    UnsupportedAmbient(usize),
    #[error("voxel export needs a 3-dimensional base, got {0}")]
    VoxelBaseDim(usize),
}

/// An RGB image, 8 bits per channel, row-major with row 0 at the top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raster {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl Raster {
    /// A white canvas; errors on zero extent.
    pub fn new(width: usize, height: usize) -> Result<Self, RenderError> {
        if width == 0 || height == 0 {
            return Err(RenderError::DegenerateRaster { width, height });
        }
        Ok(Raster {
            width,
            height,
            pixels: vec![255; 3 * width * height],
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    /// Writes one pixel; coordinates off the canvas are clipped away.
    pub fn set(&mut self, x: i64, y: i64, rgb: [u8; 3]) {
        if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
            return;
        }
        let at = 3 * (y as usize * self.width + x as usize);
        self.pixels[at..at + 3].copy_from_slice(&rgb);
    }

    pub fn get(&self, x: usize, y: usize) -> [u8; 3] {
        let at = 3 * (y * self.width + x);
        [self.pixels[at], self.pixels[at + 1], self.pixels[at + 2]]
    }

    pub fn fill_rect(&mut self, x: i64, y: i64, w: usize, h: usize, rgb: [u8; 3]) {
        for dy in 0..h as i64 {
            for dx in 0..w as i64 {
                self.set(x + dx, y + dy, rgb);
            }
        }
    }

    /// A line of the given pixel thickness between two pixel-space points
    /// (each step stamps a thickness×thickness block).
    pub fn draw_segment(&mut self, a: [f64; 2], b: [f64; 2], thickness: usize, rgb: [u8; 3]) {
        let steps = ((b[0] - a[0]).abs().max((b[1] - a[1]).abs()).ceil() as usize).max(1);
        let half = thickness as i64 / 2;
        for s in 0..=steps {
            let t = s as f64 / steps as f64;
            let x = a[0] + t * (b[0] - a[0]);
            let y = a[1] + t * (b[1] - a[1]);
            self.fill_rect(
                x.round() as i64 - half,
                y.round() as i64 - half,
                thickness,
                thickness,
                rgb,
            );
        }
    }

    /// A small plus-shaped annotation mark centered at a pixel.
    pub fn draw_mark(&mut self, x: i64, y: i64, rgb: [u8; 3]) {
        for d in -2..=2 {
            self.set(x + d, y, rgb);
            self.set(x, y + d, rgb);
        }
    }
}
