//! `render`: the color representation of a solid as an image plus its
//! legend, with voxel export and mid-grid slices for four-dimensional
//! bodies.

use chromatope::chroma::{fiber_rep, ColorRep, ConvexBody};
use chromatope::exact::rat;
use chromatope::polytope::{build_cube, build_simplex, cube_corner, truncate_vertices};
use chromatope::render::{export_voxels, p6_bytes, render_colorbar, render_field, slice_rep};

use crate::config::RunConfig;
use crate::report::Outcome;
use crate::{CliError, Shape};

/// Grid nodes per base axis for a given raster resolution; 3D base grids
/// are capped to keep the voxel volume tractable.
fn grid_nodes(res: usize, base_dim: usize) -> usize {
    if base_dim >= 3 {
        (res + 1).min(129)
    } else {
        res + 1
    }
}

pub fn representation(shape: Shape, n: usize, res: usize) -> Result<ColorRep, CliError> {
    let range = match shape {
        Shape::Cube | Shape::Simplex | Shape::Corner => 2..=4,
        Shape::TruncatedCube | Shape::TruncatedSimplex => 2..=4,
    };
    if !range.contains(&n) {
        return Err(CliError::Usage(format!(
            "{shape} renders need dimension {}..={}, got {n}",
            range.start(),
            range.end()
        )));
    }
    let lattice = match shape {
        Shape::Cube => build_cube(n),
        Shape::Simplex => build_simplex(n),
        Shape::Corner => cube_corner(n),
        Shape::TruncatedCube => build_cube(n).and_then(|p| truncate_vertices(&p, rat(1, 4))),
        Shape::TruncatedSimplex => build_simplex(n).and_then(|p| truncate_vertices(&p, rat(1, 4))),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let body = ConvexBody::from_lattice(&lattice);
    let nodes = grid_nodes(res, n - 1);
    fiber_rep(&body, n - 1, nodes).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(shape: Shape, n: usize, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let rep = representation(shape, n, cfg.res)?;
    let mut outcome = Outcome::new();
    outcome.report.pair("shape", shape);
    outcome.report.pair("n", n);

    let stem = format!("{shape}{n}");
    if rep.hi.base_dim() <= 2 {
        let image = render_field(&rep).map_err(|e| CliError::Usage(e.to_string()))?;
        let again = render_field(&rep).map_err(|e| CliError::Usage(e.to_string()))?;
        let ok = outcome.report.check(image == again);
        outcome.report.line(format!(
            "rendered {}x{} field; deterministic {ok}",
            image.width(),
            image.height()
        ));
        outcome.emit(&cfg.out, &format!("{stem}.ppm"), &p6_bytes(&image))?;
    } else {
        let export = export_voxels(&rep).map_err(|e| CliError::Usage(e.to_string()))?;
        let again = export_voxels(&rep).map_err(|e| CliError::Usage(e.to_string()))?;
        let deterministic = outcome.report.check(export == again);
        outcome.report.line(format!(
            "exported {}x{}x{} voxels; deterministic {deterministic}",
            export.grid.dims[0], export.grid.dims[1], export.grid.dims[2]
        ));
        // The shipped slices must equal re-rendered restrictions.
        let consistent = (0..3).all(|axis| {
            let mid = (export.grid.dims[axis] - 1) / 2;
            let direct = render_field(&slice_rep(&rep, axis, mid));
            direct.map(|r| r == export.slices[axis]).unwrap_or(false)
        });
        let ok = outcome.report.check(consistent);
        outcome.report.line(format!("slices consistent {ok}"));
        outcome.emit(
            &cfg.out,
            &format!("{stem}.vox.txt"),
            export.header.as_bytes(),
        )?;
        outcome.emit(&cfg.out, &format!("{stem}.vox.bin"), &export.bin)?;
        for (axis, slice) in export.slices.iter().enumerate() {
            outcome.emit(
                &cfg.out,
                &format!("{stem}.slice{axis}.ppm"),
                &p6_bytes(slice),
            )?;
        }
    }

    let bar = render_colorbar(rep.hi.vmax(), rep.hi.layer(), 64, 257)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    outcome.emit(&cfg.out, &format!("{stem}.bar.ppm"), &p6_bytes(&bar))?;
    outcome.report.pair("vmax", format!("{:.6}", rep.hi.vmax()));
    outcome.write_report(&cfg.out, &format!("{stem}.report.txt"))?;
    Ok(outcome)
}
