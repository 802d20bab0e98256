//! The acceptance gate: nine checks spanning the whole workspace, each
//! printing a single PASS/FAIL summary line. Counting claims are verified
//! against test-side oracles (binomial closed forms, brute-force face
//! products, digit enumeration), raster claims against the reference
//! figures, and the gallery against itself across two runs.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use chromatope::chroma::{fiber_rep, solid_coloring, uncolor_apply, BaseBox, ColorRep, ConvexBody};
use chromatope::exact::rat;
use chromatope::fractal::{iterate, level_ceiling, measure_proxy, product, MengerRule};
use chromatope::net::{count_via_net, facet_incidence_divisor};
use chromatope::polytope::{
    build_cube, build_simplex, cartesian_product, cube_corner, cube_f_vector, euler_boundary,
    simplex_f_vector, FaceLattice,
};
use chromatope::star::{
    agreement, coverage_raster, filled_polygon_raster, reference_star, star_layers, star_threshold,
    StarSpec,
};

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn acceptance_1_f_vectors_match_closed_forms() {
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=5usize {
        let cube = build_cube(n).unwrap().f_vector();
        let simplex = build_simplex(n).unwrap().f_vector();
        for k in 0..n {
            let choose_axes = binomial(n as u64, k as u64) * 2u64.pow((n - k) as u32);
            let choose_verts = binomial(n as u64 + 1, k as u64 + 1);
            ok &= cube.counts()[k] == choose_axes;
            ok &= simplex.counts()[k] == choose_verts;
        }
        ok &= cube == cube_f_vector(n);
        ok &= simplex == simplex_f_vector(n);
    }
    ok &= build_cube(5).unwrap().f_vector().counts() == [32, 80, 80, 40, 10];
    ok &= build_simplex(5).unwrap().f_vector().counts() == [6, 15, 20, 15, 6];
    ok &= start.elapsed().as_secs_f64() < 1.0;
    println!(
        "acceptance 1/9 f-vectors, both families n=1..=5: {}",
        verdict(ok)
    );
    assert!(ok);
}

#[test]
fn acceptance_2_euler_alternation() {
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=5usize {
        let expected = 1 - (-1i64).pow(n as u32);
        ok &= euler_boundary(&build_cube(n).unwrap()) == expected;
        ok &= euler_boundary(&build_simplex(n).unwrap()) == expected;
    }
    ok &= start.elapsed().as_secs_f64() < 1.0;
    println!(
        "acceptance 2/9 euler boundary over all ten solids: {}",
        verdict(ok)
    );
    assert!(ok);
}

#[test]
fn acceptance_3_net_counting_identity() {
    let start = Instant::now();
    let mut ok = true;
    for n in 2..=5usize {
        for p in [build_cube(n).unwrap(), build_simplex(n).unwrap()] {
            for k in 0..=n - 2 {
                ok &= facet_incidence_divisor(&p, k).unwrap() == (n - k) as u64;
                ok &= count_via_net(&p, k).unwrap() == p.f_vector().counts()[k];
            }
        }
    }
    ok &= count_via_net(&build_cube(5).unwrap(), 1).unwrap() == 80;
    ok &= start.elapsed().as_secs_f64() < 1.0;

    // The command-line report must surface the divisor discrepancy as a
    // flag while still exiting clean.
    let dir = tempfile::tempdir().unwrap();
    let output = Command::new(env!("CARGO_BIN_EXE_chromatope"))
        .args(["net", "cube", "5", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&output.stdout).into_owned();
    ok &= output.status.success();
    ok &= stdout.contains("k=1: 10×32/4=80");
    ok &= stdout.contains("FLAGGED");
    println!(
        "acceptance 3/9 net counting identity with flagged divisor: {}",
        verdict(ok)
    );
    assert!(ok);
}

/// Brute-force face-product enumeration: every face of P x Q is a pair of
/// faces of the factors (the full polytopes included), except the top.
fn face_product_f_vector(p: &FaceLattice, q: &FaceLattice) -> Vec<u64> {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for i in 0..=p.dim() {
        for j in 0..=q.dim() {
            if i == p.dim() && j == q.dim() {
                continue;
            }
            let pairs = p.faces(i).len() as u64 * q.faces(j).len() as u64;
            *counts.entry(i + j).or_insert(0) += pairs;
        }
    }
    (0..p.dim() + q.dim()).map(|k| counts[&k]).collect()
}

#[test]
fn acceptance_4_product_f_vectors() {
    let segment = build_cube(1).unwrap();
    let triangle = build_simplex(2).unwrap();
    let square = build_cube(2).unwrap();
    let tetrahedron = build_simplex(3).unwrap();
    let cases = [
        (&segment, &segment),
        (&triangle, &segment),
        (&tetrahedron, &segment),
        (&triangle, &triangle),
        (&triangle, &square),
        (&square, &square),
    ];
    let mut ok = true;
    for (a, b) in cases {
        let built = cartesian_product(a, b).unwrap();
        ok &= built.f_vector().counts() == face_product_f_vector(a, b);
    }
    let tesseract = cartesian_product(&square, &square).unwrap();
    ok &= tesseract.f_vector() == build_cube(4).unwrap().f_vector();
    println!(
        "acceptance 4/9 prism and duoprism f-vectors: {}",
        verdict(ok)
    );
    assert!(ok);
}

#[test]
fn acceptance_5_uncoloring_algebra() {
    let nodes = 1025;
    let pink = solid_coloring(BaseBox::segment(0.0, 1.0), 1.0, 1.0, nodes).unwrap();
    let brown = solid_coloring(BaseBox::segment(0.0, 1.0), 0.5, 1.0, nodes).unwrap();
    let rep = ColorRep::from_hi(pink.clone());
    let mut ok = true;
    let emptied = uncolor_apply(&rep, &pink).unwrap();
    ok &= emptied.represented_lengths().iter().all(|&l| l == 0.0);
    let halved = uncolor_apply(&rep, &brown).unwrap();
    ok &= halved.represented_lengths().iter().all(|&l| l == 0.5);
    println!(
        "acceptance 5/9 uncoloring by itself and by half: {}",
        verdict(ok)
    );
    assert!(ok);
}

#[test]
fn acceptance_6_star_equivalence() {
    let start = Instant::now();
    let closed_forms = [
        (5.0f64 + 2.0 * 5.0f64.sqrt()).sqrt() / 2.0,
        3.0f64.sqrt(),
        1.0 / (std::f64::consts::PI / 14.0).tan() / 2.0,
        1.0 + 2.0f64.sqrt(),
    ];
    let mut ok = true;
    for ((p, q, n), closed) in [(5, 2, 3), (6, 2, 4), (7, 3, 3), (8, 3, 4)]
        .into_iter()
        .zip(closed_forms)
    {
        let spec = StarSpec::new(p, q, n).unwrap();
        ok &= (spec.vmax() - closed).abs() / closed < 1e-12;
        let layers = star_layers(&spec).unwrap();
        let coverage = coverage_raster(&layers, 1024);
        let union: Vec<bool> = coverage.counts.iter().map(|&c| c >= 1).collect();
        ok &= agreement(&union, &filled_polygon_raster(p, 1024, coverage.half_width)) >= 0.995;
        let thresholded = star_threshold(&coverage, n);
        let reference = reference_star(p, q, 1024, coverage.half_width);
        ok &= agreement(&thresholded, &reference) >= 0.99;
    }
    ok &= start.elapsed().as_secs_f64() < 10.0;
    println!(
        "acceptance 6/9 star layers against reference rasters: {}",
        verdict(ok)
    );
    assert!(ok);
}

#[test]
fn acceptance_7_fractal_counts_and_measures() {
    let start = Instant::now();
    let mut ok = true;
    for (d, m, keep) in [(2, 1, 8u64), (3, 1, 20), (4, 2, 72)] {
        let rule = MengerRule::new(d, m).unwrap();
        ok &= rule.keep_count() == keep;
        for n in 1..=level_ceiling(d) {
            ok &= iterate(&rule, n).unwrap().len() as u64 == keep.pow(n);
        }
    }
    let four = MengerRule::new(4, 2).unwrap();
    let grows: Vec<_> = (1..=3).map(|n| measure_proxy(&four, 3, n)).collect();
    let shrinks: Vec<_> = (1..=3).map(|n| measure_proxy(&four, 4, n)).collect();
    ok &= grows.windows(2).all(|w| w[0] < w[1]);
    ok &= shrinks.windows(2).all(|w| w[0] > w[1]);
    ok &= grows[1] == rat(64, 9);

    let cantor = iterate(&MengerRule::new(1, 0).unwrap(), 2).unwrap();
    let mut assembled = cantor.clone();
    for d in 2..=4 {
        assembled = product(&assembled, &cantor).unwrap();
        ok &= assembled.cells() == iterate(&MengerRule::new(d, 0).unwrap(), 2).unwrap().cells();
    }
    ok &= start.elapsed().as_secs_f64() < 5.0;
    println!(
        "acceptance 7/9 fractal counts, measures, products: {}",
        verdict(ok)
    );
    assert!(ok);
}

#[test]
fn acceptance_8_color_rep_lifting() {
    let mut ok = true;
    for (d, m) in [(2, 0), (3, 1), (4, 2)] {
        let rule = MengerRule::new(d, m).unwrap();
        let rep = chromatope::fractal::fractal_color_rep(&rule, 1).unwrap();
        ok &= rep.lift().cells() == iterate(&rule, 1).unwrap().cells();
    }
    for n in 2..=4usize {
        let body = ConvexBody::from_lattice(&build_cube(n).unwrap());
        let rep = fiber_rep(&body, n - 1, 17).unwrap();
        let solid = solid_coloring(
            BaseBox::new(vec![0.0; n - 1], vec![1.0; n - 1]),
            1.0,
            1.0,
            17,
        )
        .unwrap();
        ok &= rep.hi.values() == solid.values();
        ok &= rep.lo.values().iter().all(|&v| v == 0.0);
    }
    for n in 2..=4usize {
        let nodes = 33;
        let cell = 1.0 / (nodes - 1) as f64;
        let body = ConvexBody::from_lattice(&cube_corner(n).unwrap());
        let rep = fiber_rep(&body, n - 1, nodes).unwrap();
        let mut idx = vec![0usize; n - 1];
        for flat in 0..rep.hi.values().len() {
            let sum: f64 = idx.iter().map(|&i| i as f64 * cell).sum();
            ok &= (rep.hi.values()[flat] - (1.0 - sum).max(0.0)).abs() <= cell + 1e-9;
            for j in (0..n - 1).rev() {
                idx[j] += 1;
                if idx[j] < nodes {
                    break;
                }
                idx[j] = 0;
            }
        }
    }
    println!(
        "acceptance 8/9 color-rep lifts, cube fibers, corner fields: {}",
        verdict(ok)
    );
    assert!(ok);
}

fn gallery_bytes(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut files = BTreeMap::new();
    for entry in fs::read_dir(dir.join("figures")).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        files.insert(name, fs::read(&path).unwrap());
    }
    files
}

#[test]
fn acceptance_9_gallery_determinism() {
    let (first, second) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let mut ok = true;
    for dir in [first.path(), second.path()] {
        let output = Command::new(env!("CARGO_BIN_EXE_chromatope"))
            .args(["figures", "--res", "128", "--out"])
            .arg(dir)
            .output()
            .unwrap();
        ok &= output.status.success();
    }
    let (a, b) = (gallery_bytes(first.path()), gallery_bytes(second.path()));
    ok &= !a.is_empty();
    ok &= a.keys().eq(b.keys());
    ok &= a.iter().all(|(name, bytes)| b[name] == *bytes);
    println!(
        "acceptance 9/9 gallery byte-identical across runs: {}",
        verdict(ok)
    );
    assert!(ok);
}
