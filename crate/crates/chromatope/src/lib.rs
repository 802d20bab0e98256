//! Chromatope: a calculus for representing geometric objects by color.
//!
//! The crate builds exact face lattices for cube and simplex families,
//! unfolds their boundaries into nets, colors nets and regions with
//! monotone scalar fields ("colorings"), erases parts of those fields
//! ("uncolorings"), and stacks fractional layers whose accumulation
//! reconstructs star polygons and triadic fractals. Rendering turns any of
//! these into portable anymap images or voxel grids.
//!
//! Module map:
//! - [`exact`]: rational scalars on square-root-scaled axes.
//! - [`polytope`]: face lattices, products, truncations, Euler sums.
//! - [`net`]: facet unfoldings, gluing structure, colored nets.
//! - [`chroma`]: color fields, palettes, uncoloring, layer overlay,
//!   fiber representations of convex bodies.
//! - [`star`]: star polygons as accumulated fractional layers.
//! - [`fractal`]: triadic box sets (Cantor/Menger family) and their
//!   color representations.
//! - [`render`]: rasterization, PNM and voxel export.

pub mod chroma;
pub mod exact;
pub mod fractal;
pub mod net;
pub mod polytope;
pub mod render;
pub mod star;
