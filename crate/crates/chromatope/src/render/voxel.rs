//! Voxel export for color representations over a 3-dimensional base:
//! objects one dimension past planar rendering leave the screen as a
//! dense scalar grid plus companion mid-grid slice images.
//!
//! The on-disk form is a pair: a short text header (`.vox.txt`) and a raw
//! block (`.bin`) holding every `hi` sample then every `lo` sample as
//! little-endian 8-byte floats in the field's row-major node order.

use crate::chroma::{ColorField, ColorRep};
use crate::net::LayerTag;

use super::field::render_field;
use super::{Raster, RenderError};

/// A dense scalar grid carried out of a 3-dimensional field.
#[derive(Debug, Clone, PartialEq)]
pub struct VoxelGrid {
    pub dims: [usize; 3],
    /// Row-major samples, last axis fastest, matching the source field.
    pub values: Vec<f64>,
    pub vmax: f64,
    pub layer: LayerTag,
}

/// Everything export_voxels emits: the grid itself, the header text, the
/// raw sample block, and one rendered slice per axis.
#[derive(Debug, Clone, PartialEq)]
pub struct VoxelExport {
    pub grid: VoxelGrid,
    pub header: String,
    pub bin: Vec<u8>,
    pub slices: Vec<Raster>,
}

fn layer_token(layer: LayerTag) -> &'static str {
    match layer {
        LayerTag::Standard => "standard",
        LayerTag::Reverse => "reverse",
    }
}

/// Restricts a 3-dimensional field to the plane `axis = node index`,
/// keeping the remaining axes in ascending order.
pub fn slice_field(field: &ColorField, axis: usize, index: usize) -> ColorField {
    assert_eq!(field.base_dim(), 3, "slicing needs a 3-dimensional base");
    assert!(axis < 3 && index < field.grid()[axis]);
    let kept: Vec<usize> = (0..3).filter(|&a| a != axis).collect();
    let domain = crate::chroma::BaseBox::new(
        kept.iter().map(|&a| field.domain().min[a]).collect(),
        kept.iter().map(|&a| field.domain().max[a]).collect(),
    );
    let grid: Vec<usize> = kept.iter().map(|&a| field.grid()[a]).collect();
    let mut values = Vec::with_capacity(grid[0] * grid[1]);
    for i in 0..grid[0] {
        for j in 0..grid[1] {
            let mut idx = [0usize; 3];
            idx[axis] = index;
            idx[kept[0]] = i;
            idx[kept[1]] = j;
            values.push(field.value_at(&idx));
        }
    }
    ColorField::from_samples(domain, grid, values, field.vmax())
        .expect("restriction preserves the value range")
        .with_layer(field.layer())
        .with_sign(field.sign())
        .with_weight(field.weight_den())
}

/// Restricts both halves of a representation to one node plane.
pub fn slice_rep(rep: &ColorRep, axis: usize, index: usize) -> ColorRep {
    let hi = slice_field(&rep.hi, axis, index);
    let lo = slice_field(&rep.lo, axis, index);
    ColorRep::from_parts(hi, lo).expect("slices share the frame")
}

/// Exports a 3-dimensional-base representation: scalar grid, header,
/// raw block, and the three mid-grid slices rendered via `render_field`.
pub fn export_voxels(rep: &ColorRep) -> Result<VoxelExport, RenderError> {
    let hi = &rep.hi;
    if hi.base_dim() != 3 {
        return Err(RenderError::VoxelBaseDim(hi.base_dim()));
    }
    let dims = [hi.grid()[0], hi.grid()[1], hi.grid()[2]];
    let grid = VoxelGrid {
        dims,
        values: hi.values().to_vec(),
        vmax: hi.vmax(),
        layer: hi.layer(),
    };
    let header = format!(
        "chromavox 1\ndims {} {} {}\nvmax {}\nlayer {}\ndata hi lo f64le\n",
        dims[0],
        dims[1],
        dims[2],
        hi.vmax(),
        layer_token(hi.layer()),
    );
    let mut bin = Vec::with_capacity(16 * hi.values().len());
    for value in hi.values().iter().chain(rep.lo.values()) {
        bin.extend_from_slice(&value.to_le_bytes());
    }
    let slices = (0..3)
        .map(|axis| {
            let mid = (dims[axis] - 1) / 2;
            render_field(&slice_rep(rep, axis, mid))
        })
        .collect::<Result<Vec<Raster>, RenderError>>()?;
    Ok(VoxelExport {
        grid,
        header,
        bin,
        slices,
    })
}
