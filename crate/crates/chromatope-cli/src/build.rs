//! `build`: construct a polytope family member, export its lattice, and
//! verify the element counts and Euler alternation.

use chromatope::polytope::{
    build_cube, build_simplex, cube_f_vector, euler_boundary, simplex_f_vector, FVector,
    FaceLattice,
};

use crate::config::RunConfig;
use crate::report::Outcome;
use crate::{CliError, Family};

/// Names for the low face ranks; higher ranks get the numeric form.
pub fn rank_name(k: usize) -> String {
    match k {
        0 => "vertices".to_string(),
        1 => "edges".to_string(),
        2 => "faces".to_string(),
        3 => "cells".to_string(),
        k => format!("{k}-faces"),
    }
}

pub fn build_lattice(family: Family, n: usize) -> Result<FaceLattice, CliError> {
    if !(1..=5).contains(&n) {
        return Err(CliError::Usage(format!("dimension {n} out of range 1..=5")));
    }
    let built = match family {
        Family::Cube => build_cube(n),
        Family::Simplex => build_simplex(n),
    };
    built.map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(family: Family, n: usize, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let lattice = build_lattice(family, n)?;
    let formula: FVector = match family {
        Family::Cube => cube_f_vector(n),
        Family::Simplex => simplex_f_vector(n),
    };
    let counted = lattice.f_vector();

    let mut outcome = Outcome::new();
    let report = &mut outcome.report;
    report.pair("family", family);
    report.pair("n", n);
    for k in 0..n {
        let ok = report.check(formula.counts()[k] == counted.counts()[k]);
        report.line(format!(
            "{}: {} = {} {ok}",
            rank_name(k),
            formula.counts()[k],
            counted.counts()[k],
        ));
    }
    report.pair("f_formula", &formula);
    report.pair("f_lattice", &counted);

    let euler = euler_boundary(&lattice);
    let expected = 1 - (-1i64).pow(n as u32);
    let ok = report.check(euler == expected);
    report.line(format!("euler: {expected} = {euler} {ok}"));
    report.pair("euler", euler);
    report.pair("euler_expected", expected);

    let stem = format!("build_{family}{n}");
    outcome.emit(
        &cfg.out,
        &format!("{stem}.lattice.txt"),
        lattice.export().as_bytes(),
    )?;
    outcome.write_report(&cfg.out, &format!("{stem}.report.txt"))?;
    Ok(outcome)
}
