//! The color-representation calculus: scalar fields whose values are
//! lengths along an appended nonnegative axis.
//!
//! A colored base point of value `h` stands for the segment `[0, h]` above
//! it; an uncolored point of value `l` erases `[0, l]` from whatever a
//! colored field put there. Fractional (`1/n`) colorings only count when
//! `n` placed copies stack back up to full weight. The submodules cover:
//!
//! - [`field`]: the sampled scalar fields, solid and gradated
//!   constructors, uncoloring, and the binary export.
//! - [`palette`]: the black-brown-pink color bar and its green reverse.
//! - [`overlay`]: placing 1D fields in the plane and accumulating
//!   fractional weights.
//! - [`fiber`]: extracting hi/lo envelope fields from convex bodies one
//!   coordinate at a time.

pub mod fiber;
pub mod field;
pub mod overlay;
pub mod palette;

pub use fiber::{fiber_rep, ConvexBody};
pub use field::{
    simplex_gradient, solid_coloring, uncolor_apply, BaseBox, ColorField, ColorRep, FieldSign,
    GradientDomain,
};
pub use overlay::{overlay, AccumulatedField, PlacedField};
pub use palette::{palette_interpolate, palette_map};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ChromaError {
    #[error("value {value} outside [0, {vmax}]")]
    ValueOutOfRange { value: f64, vmax: f64 },
    #[error("peak {peak} exceeds the color-bar maximum {vmax}")]
    PeakAboveMax { peak: f64, vmax: f64 },
    #[error("fields disagree on domain, grid, or color-bar maximum")]
    FrameMismatch,
    #[error("overlay needs at least one layer")]
    EmptyOverlay,
    #[error("grid needs at least two nodes per axis, got {0}")]
    DegenerateGrid(usize),
    #[error("fiber axis {axis} out of range for a {dim}-dimensional body")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("body dimension {0} unsupported (want 1..=4)")]
    UnsupportedBodyDimension(usize),
    #[error("fiber over a feasible base point has no upper bound")]
    UnboundedFiber,
}
