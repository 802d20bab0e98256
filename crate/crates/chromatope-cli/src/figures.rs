//! `figures`: regenerate the full gallery into one directory and index
//! every produced file in a sha256 manifest.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::config::RunConfig;
use crate::report::Outcome;
use crate::{build, fractal, net, render, star, CliError, Family, Shape};

fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let gallery = cfg.out.join("figures");
    let sub = cfg.with_out(gallery.clone());

    let mut runs: Vec<Outcome> = Vec::new();
    for n in [2, 3, 5] {
        runs.push(build::run(Family::Cube, n, &sub)?);
        runs.push(build::run(Family::Simplex, n, &sub)?);
    }
    for (family, n) in [
        (Family::Cube, 2),
        (Family::Cube, 3),
        (Family::Cube, 5),
        (Family::Simplex, 2),
        (Family::Simplex, 3),
        (Family::Simplex, 4),
    ] {
        runs.push(net::run(family, n, &sub)?);
    }
    for (p, q, _) in star::SUPPORTED {
        runs.push(star::run(p, q, &sub)?);
    }
    for (d, m, level) in [(1, 0, 3), (2, 1, 4), (3, 1, 2), (4, 2, 2)] {
        runs.push(fractal::run(d, m, Some(level), &sub)?);
    }
    for (shape, n) in [
        (Shape::Cube, 3),
        (Shape::Cube, 4),
        (Shape::Simplex, 3),
        (Shape::Corner, 3),
        (Shape::TruncatedCube, 3),
        (Shape::TruncatedSimplex, 3),
    ] {
        runs.push(render::run(shape, n, &sub)?);
    }

    let mut outcome = Outcome::new();
    let mut entries: Vec<(String, String)> = Vec::new();
    for run in &runs {
        if !run.report.ok() {
            outcome.report.fail();
        }
        for file in &run.files {
            let rel = file
                .strip_prefix(&gallery)
                .unwrap_or(file.as_path())
                .to_string_lossy()
                .into_owned();
            let bytes = fs::read(file)?;
            entries.push((rel, sha256_hex(&bytes)));
        }
        outcome.files.extend(run.files.iter().cloned());
    }
    entries.sort();
    let manifest: String = entries
        .iter()
        .map(|(rel, hash)| format!("{hash}  {rel}\n"))
        .collect();
    outcome.emit(Path::new(&gallery), "manifest.txt", manifest.as_bytes())?;

    let status = if outcome.report.ok() { "OK" } else { "FAIL" };
    outcome.report.line(format!(
        "figures: {} files; manifest manifest.txt {status}",
        entries.len()
    ));
    outcome.report.pair("files", entries.len());
    outcome.report.pair("manifest", "manifest.txt");
    outcome.write_report(&gallery, "figures.report.txt")?;
    Ok(outcome)
}
