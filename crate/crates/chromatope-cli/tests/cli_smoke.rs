//! End-to-end checks of the command-line surface: exit codes, the exact
//! report rows, file outputs, and how flags, config files, and the
//! environment variable interact.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;

fn run(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromatope"))
        .args(args)
        .arg("--out")
        .arg(out)
        .env_remove("CHROMATOPE_OUT")
        .output()
        .unwrap()
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempdir().unwrap();
    let bad = [
        vec!["build", "cube", "9"],
        vec!["build", "cube", "0"],
        vec!["net", "cube", "1"],
        vec!["star", "9", "2"],
        vec!["fractal", "5", "0"],
        vec!["fractal", "4", "2", "--level", "5"],
        vec!["render", "cube", "5"],
        vec!["build", "cube", "3", "--res", "8"],
    ];
    for args in bad {
        let output = run(&args, dir.path());
        assert_eq!(output.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn build_reports_match_formulas() {
    let dir = tempdir().unwrap();
    let output = run(&["build", "cube", "5"], dir.path());
    assert!(output.status.success());
    let stdout = stdout_of(&output);
    for row in [
        "vertices: 32 = 32 OK",
        "edges: 80 = 80 OK",
        "faces: 80 = 80 OK",
        "cells: 40 = 40 OK",
        "4-faces: 10 = 10 OK",
        "euler: 2 = 2 OK",
    ] {
        assert!(stdout.contains(row), "missing {row:?} in {stdout}");
    }
    let report = fs::read_to_string(dir.path().join("build_cube5.report.txt")).unwrap();
    assert!(report.ends_with("status=ok\n"));
    assert!(dir.path().join("build_cube5.lattice.txt").exists());

    let simplex = stdout_of(&run(&["build", "simplex", "5"], dir.path()));
    assert!(simplex.contains("faces: 20 = 20 OK"));
}

#[test]
fn net_reports_match_counts() {
    let dir = tempdir().unwrap();
    let output = run(&["net", "cube", "5"], dir.path());
    assert!(output.status.success());
    let stdout = stdout_of(&output);
    assert!(stdout.contains("cells: 10"));
    assert!(stdout.contains("k=1: 10×32/4=80 [paper prose says /3: FLAGGED]"));
    assert!(stdout.contains("k=3: 10×8/2=40"));

    let simplex = stdout_of(&run(&["net", "simplex", "4"], dir.path()));
    assert!(simplex.contains("cells: 5; center multiplicity 2"));

    assert!(run(&["net", "cube", "2"], dir.path()).status.success());
    let ppm = fs::read(dir.path().join("net_cube2.ppm")).unwrap();
    assert!(ppm.starts_with(b"P6\n"));
}

#[test]
fn star_report_passes() {
    let dir = tempdir().unwrap();
    let output = run(&["star", "5", "2", "--res", "256"], dir.path());
    assert!(output.status.success());
    let stdout = stdout_of(&output);
    assert!(stdout.contains("PASS"));
    assert!(stdout.contains("vmax 1.538842"));
    let pgm = fs::read(dir.path().join("star_5_2.coverage.pgm")).unwrap();
    assert!(pgm.starts_with(b"P2\n"));
    assert!(dir.path().join("star_5_2.threshold.pbm").exists());
    assert!(dir.path().join("star_5_2.reference.pbm").exists());
}

#[test]
fn fractal_reports_match_examples() {
    let dir = tempdir().unwrap();
    let four = stdout_of(&run(&["fractal", "4", "2", "--level", "2"], dir.path()));
    assert!(four.contains("cells 5184 = 72\u{b2} OK; 3-measure 64/9 increasing"));
    let cantor = stdout_of(&run(&["fractal", "1", "0", "--level", "3"], dir.path()));
    assert!(cantor.contains("cells 8; length 8/27"));
    assert!(dir.path().join("fractal_1_0_l3.boxes.txt").exists());
    assert!(dir.path().join("fractal_4_2_l2.report.txt").exists());
}

#[test]
fn config_file_sets_resolution_and_flags_override() {
    let dir = tempdir().unwrap();
    let config = dir.path().join("run.cfg");
    fs::write(&config, format!("res=64\nout={}\n", dir.path().display())).unwrap();
    let config_arg = config.to_str().unwrap();

    let output = Command::new(env!("CARGO_BIN_EXE_chromatope"))
        .args(["star", "5", "2", "--config", config_arg])
        .env_remove("CHROMATOPE_OUT")
        .output()
        .unwrap();
    assert!(output.status.success());
    let pgm = fs::read(dir.path().join("star_5_2.coverage.pgm")).unwrap();
    assert!(pgm.starts_with(b"P2\n64 64\n"));

    let output = Command::new(env!("CARGO_BIN_EXE_chromatope"))
        .args(["star", "5", "2", "--config", config_arg, "--res", "128"])
        .env_remove("CHROMATOPE_OUT")
        .output()
        .unwrap();
    assert!(output.status.success());
    let pgm = fs::read(dir.path().join("star_5_2.coverage.pgm")).unwrap();
    assert!(pgm.starts_with(b"P2\n128 128\n"));

    let bad = dir.path().join("bad.cfg");
    fs::write(&bad, "bogus=1\n").unwrap();
    let output = Command::new(env!("CARGO_BIN_EXE_chromatope"))
        .args(["build", "cube", "3", "--config", bad.to_str().unwrap()])
        .env_remove("CHROMATOPE_OUT")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn out_env_var_supplies_default_directory() {
    let dir = tempdir().unwrap();
    let output = Command::new(env!("CARGO_BIN_EXE_chromatope"))
        .args(["build", "cube", "2"])
        .env("CHROMATOPE_OUT", dir.path())
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(dir.path().join("build_cube2.report.txt").exists());

    // An explicit flag still wins over the environment.
    let flagged = tempdir().unwrap();
    let output = Command::new(env!("CARGO_BIN_EXE_chromatope"))
        .args(["build", "cube", "2", "--out"])
        .arg(flagged.path())
        .env("CHROMATOPE_OUT", dir.path())
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(flagged.path().join("build_cube2.report.txt").exists());
}

#[test]
fn repeated_runs_produce_identical_files() {
    let (first, second) = (tempdir().unwrap(), tempdir().unwrap());
    for dir in [first.path(), second.path()] {
        assert!(run(&["net", "cube", "2"], dir).status.success());
        assert!(run(&["render", "simplex", "3", "--res", "64"], dir)
            .status
            .success());
    }
    for name in ["net_cube2.ppm", "simplex3.ppm", "simplex3.bar.ppm"] {
        let a = fs::read(first.path().join(name)).unwrap();
        let b = fs::read(second.path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
    }
}
