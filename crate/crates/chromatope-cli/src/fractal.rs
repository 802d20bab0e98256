//! `fractal`: iterate a triadic keep rule, verify the cell count and
//! measure arithmetic, check the color-representation lift where one is
//! defined, and render slice pictures of the box set.

use chromatope::fractal::{
    fractal_color_rep, fractal_dimension, iterate, level_ceiling, measure_proxy, MengerRule,
    TriadicBoxSet,
};
use chromatope::render::p1_bytes;

use crate::config::RunConfig;
use crate::report::Outcome;
use crate::CliError;

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

/// A 2D presence mask blown up to `scale` pixels per cell, P1-encoded.
/// `pick` maps a cell to (column, row-up) coordinates or None to drop it.
fn slice_image(set: &TriadicBoxSet, pick: impl Fn(&[u16]) -> Option<(u16, u16)>) -> Vec<u8> {
    let grid = set.grid() as usize;
    let scale = (243 / grid).max(1);
    let side = grid * scale;
    let mut mask = vec![false; side * side];
    for cell in set.cells() {
        if let Some((x, y)) = pick(cell) {
            let (col, row) = (x as usize, grid - 1 - y as usize);
            for dy in 0..scale {
                for dx in 0..scale {
                    mask[(row * scale + dy) * side + col * scale + dx] = true;
                }
            }
        }
    }
    p1_bytes(&mask, side, side)
}

/// The Cantor strip: presence columns repeated over a short band.
fn strip_image(set: &TriadicBoxSet) -> Vec<u8> {
    let grid = set.grid() as usize;
    let scale = (243 / grid).max(1);
    let (width, height) = (grid * scale, 16);
    let mut mask = vec![false; width * height];
    for cell in set.cells() {
        let col = cell[0] as usize;
        for row in 0..height {
            for dx in 0..scale {
                mask[row * width + col * scale + dx] = true;
            }
        }
    }
    p1_bytes(&mask, width, height)
}

pub fn run(d: usize, m: usize, level: Option<u32>, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let rule = MengerRule::new(d, m).map_err(|e| CliError::Usage(e.to_string()))?;
    let level = level.unwrap_or_else(|| level_ceiling(d));
    let set = iterate(&rule, level).map_err(|e| CliError::Usage(e.to_string()))?;

    let mut outcome = Outcome::new();
    let report = &mut outcome.report;
    report.pair("d", d);
    report.pair("m", m);
    report.pair("level", level);

    let per_level = rule.keep_count();
    let expected = per_level.pow(level);
    let count_ok = report.check(set.len() as u64 == expected);
    let headline = if d == 1 {
        format!(
            "cells {}; length {}",
            set.len(),
            measure_proxy(&rule, 1, level)
        )
    } else {
        let k = d - 1;
        let trend = if per_level > 3u64.pow(k as u32) {
            "increasing"
        } else {
            "decreasing"
        };
        format!(
            "cells {} = {}{} {count_ok}; {k}-measure {} {trend}",
            set.len(),
            per_level,
            superscript(level),
            measure_proxy(&rule, k, level)
        )
    };
    report.line(headline);
    report.pair("cells", set.len());
    report.pair("cells_expected", expected);
    for k in 1..=d {
        report.pair(&format!("measure_{k}"), measure_proxy(&rule, k, level));
    }
    report.line(format!("dimension {:.4}", fractal_dimension(&rule)));
    report.pair("dimension", format!("{:.6}", fractal_dimension(&rule)));

    // The color representation exists when the rule loses a dimension
    // cleanly; its lift must reproduce the direct iteration cell-exactly.
    if d >= 2 && m + 2 <= d {
        let rep = fractal_color_rep(&rule, level).map_err(|e| CliError::Usage(e.to_string()))?;
        let exact = rep.lift().cells() == set.cells();
        let lift_ok = report.check(exact);
        report.line(format!("color rep lift exact {lift_ok}"));
        report.pair("lift", if exact { "exact" } else { "mismatch" });
    } else {
        report.pair("lift", "unsupported");
    }

    let stem = format!("fractal_{d}_{m}_l{level}");
    outcome.emit(
        &cfg.out,
        &format!("{stem}.boxes.txt"),
        set.export().as_bytes(),
    )?;
    let grid = set.grid();
    let mid = (grid - 1) / 2;
    match d {
        1 => {
            outcome.emit(&cfg.out, &format!("{stem}.pbm"), &strip_image(&set))?;
        }
        2 => {
            outcome.emit(
                &cfg.out,
                &format!("{stem}.pbm"),
                &slice_image(&set, |c| Some((c[0], c[1]))),
            )?;
        }
        3 => {
            for axis in 0..3usize {
                let keep: Vec<usize> = (0..3).filter(|&j| j != axis).collect();
                let bytes =
                    slice_image(&set, |c| (c[axis] == mid).then(|| (c[keep[0]], c[keep[1]])));
                outcome.emit(&cfg.out, &format!("{stem}.slice{axis}.pbm"), &bytes)?;
            }
        }
        _ => {
            for (i, j) in [(0usize, 1usize), (1, 2), (2, 3)] {
                let bytes = slice_image(&set, |c| {
                    let fixed = (0..4).filter(|&a| a != i && a != j).all(|a| c[a] == mid);
                    fixed.then(|| (c[i], c[j]))
                });
                outcome.emit(&cfg.out, &format!("{stem}.axes{i}{j}.pbm"), &bytes)?;
            }
        }
    }
    outcome.write_report(&cfg.out, &format!("{stem}.report.txt"))?;
    Ok(outcome)
}
