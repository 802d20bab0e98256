//! `star`: synthesize a {p/q} star from fractional layers, rasterize the
//! coverage, and compare the thresholded figure against the direct
//! reference rasterization.

use std::f64::consts::PI;

use chromatope::render::{p1_bytes, p2_bytes};
use chromatope::star::{
    agreement, coverage_raster, filled_polygon_raster, reference_star, rotation_agreement,
    star_layers, star_threshold, StarSpec,
};

use crate::config::RunConfig;
use crate::report::Outcome;
use crate::CliError;

/// The supported star specs with their layer weights.
pub const SUPPORTED: [(u32, u32, u32); 4] = [(5, 2, 3), (6, 2, 4), (7, 3, 3), (8, 3, 4)];

/// Closed forms for the lift heights, in spec order.
fn vmax_closed_form(p: u32) -> f64 {
    match p {
        5 => (5.0f64 + 2.0 * 5.0f64.sqrt()).sqrt() / 2.0,
        6 => 3.0f64.sqrt(),
        7 => 1.0 / (PI / 14.0).tan() / 2.0,
        8 => 1.0 + 2.0f64.sqrt(),
        _ => unreachable!("unsupported spec"),
    }
}

pub fn run(p: u32, q: u32, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let Some(&(_, _, n)) = SUPPORTED.iter().find(|&&(sp, sq, _)| sp == p && sq == q) else {
        return Err(CliError::Usage(format!(
            "unsupported star {{{p}/{q}}}; supported: {{5/2}}, {{6/2}}, {{7/3}}, {{8/3}}"
        )));
    };
    let spec = StarSpec::new(p, q, n).map_err(|e| CliError::Usage(e.to_string()))?;
    let layers = star_layers(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let res = cfg.res;

    let coverage = coverage_raster(&layers, res);
    let thresholded = star_threshold(&coverage, n);
    let reference = reference_star(p, q, res, coverage.half_width);
    let union: Vec<bool> = coverage.counts.iter().map(|&c| c >= 1).collect();
    let polygon = filled_polygon_raster(p, res, coverage.half_width);

    let union_agree = agreement(&union, &polygon);
    let threshold_agree = agreement(&thresholded, &reference);
    let rotation_agree = rotation_agreement(&coverage, &layers, p);
    let closed = vmax_closed_form(p);
    let vmax_err = (spec.vmax() - closed).abs() / closed;

    let mut outcome = Outcome::new();
    let passed = union_agree >= 0.995
        && threshold_agree >= 0.99
        && rotation_agree >= 0.999
        && vmax_err < 1e-12;
    if !passed {
        outcome.report.fail();
    }
    outcome.report.pair("p", p);
    outcome.report.pair("q", q);
    outcome.report.pair("n", n);
    outcome.report.pair("res", res);
    outcome.report.pair("vmax", format!("{:.12}", spec.vmax()));
    outcome
        .report
        .pair("vmax_rel_err", format!("{vmax_err:.2e}"));
    outcome
        .report
        .pair("union_agreement", format!("{union_agree:.6}"));
    outcome
        .report
        .pair("threshold_agreement", format!("{threshold_agree:.6}"));
    outcome
        .report
        .pair("rotation_agreement", format!("{rotation_agree:.6}"));

    outcome.report.line(format!(
        "vmax {:.6} (closed form {:.6})",
        spec.vmax(),
        closed
    ));
    outcome
        .report
        .line(format!("union agreement {:.1}%", 100.0 * union_agree));
    outcome
        .report
        .line(format!("rotation agreement {:.1}%", 100.0 * rotation_agree));
    outcome.report.line(format!(
        "agreement {:.1}% {}",
        100.0 * threshold_agree,
        if passed { "PASS" } else { "FAIL" }
    ));

    let stem = format!("star_{p}_{q}");
    outcome.emit(
        &cfg.out,
        &format!("{stem}.coverage.pgm"),
        &p2_bytes(&coverage.counts, res, res, p as u16),
    )?;
    outcome.emit(
        &cfg.out,
        &format!("{stem}.threshold.pbm"),
        &p1_bytes(&thresholded, res, res),
    )?;
    outcome.emit(
        &cfg.out,
        &format!("{stem}.reference.pbm"),
        &p1_bytes(&reference, res, res),
    )?;
    outcome.write_report(&cfg.out, &format!("{stem}.report.txt"))?;
    Ok(outcome)
}
